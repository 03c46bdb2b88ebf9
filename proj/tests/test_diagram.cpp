#include "brauer/diagram.hpp"
#include "oracle_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace bk;

TEST(Diagram, CanonicalPairsAndEquality) {
    Diagram a(2, 2, {{4, 1}, {3, 2}});
    Diagram b(2, 2, {{2, 3}, {1, 4}});
    EXPECT_EQ(a, b);
    std::vector<std::pair<int, int>> want{{1, 4}, {2, 3}};
    EXPECT_EQ(a.pairs(), want);
    EXPECT_EQ(a, cross());
}

TEST(Diagram, RejectsBadInput) {
    EXPECT_THROW(Diagram(1, 2, {{1, 2}}), ValencyError);
    EXPECT_THROW(Diagram(2, 0, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Diagram(2, 2, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(Diagram(2, 2, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST(Diagram, CapAfterCupIsOneLoop) {
    auto r = compose(cap(), cup());
    EXPECT_EQ(r.diagram, empty_diagram());
    EXPECT_EQ(r.loops, 1);
}

TEST(Diagram, IdentityIsNeutral) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int k = static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
        if ((k + l) % 2) ++l;
        Diagram d = oracle::random_diagram(k, l, rng);
        EXPECT_EQ(compose(identity(l), d), (ScaledDiagram{d, 0}));
        EXPECT_EQ(compose(d, identity(k)), (ScaledDiagram{d, 0}));
    }
}

TEST(Diagram, TemperleyLiebAndSymmetricRelations) {
    EXPECT_EQ(compose(e_i(2, 1), e_i(2, 1)), (ScaledDiagram{e_i(2, 1), 1}));
    EXPECT_EQ(compose(e_i(2, 1), s_i(2, 1)), (ScaledDiagram{e_i(2, 1), 0}));
    EXPECT_EQ(compose(s_i(2, 1), e_i(2, 1)), (ScaledDiagram{e_i(2, 1), 0}));
    EXPECT_EQ(compose(s_i(2, 1), s_i(2, 1)), (ScaledDiagram{identity(2), 0}));
    // e1 e2 e1 = e1
    EXPECT_EQ(compose(compose(e_i(3, 1), e_i(3, 2)).diagram, e_i(3, 1)),
              (ScaledDiagram{e_i(3, 1), 0}));
}

TEST(Diagram, TensorBookkeeping) {
    EXPECT_EQ(tensor(identity(1), identity(1)), identity(2));
    // U ⊗ A : bottom 1,2 capped, top 3,4 cupped
    EXPECT_EQ(tensor(cup(), cap()), Diagram(2, 2, {{1, 2}, {3, 4}}));
    EXPECT_EQ(tensor(tensor(identity(1), compose(cup(), cap()).diagram), identity(1)),
              Diagram(4, 4, {{1, 5}, {2, 3}, {6, 7}, {4, 8}}));
    EXPECT_EQ(tensor(tensor(identity(1), compose(cup(), cap()).diagram), identity(1)), e_i(4, 2));
}

TEST(Diagram, StarAndSharp) {
    EXPECT_EQ(star(cap()), cup());
    EXPECT_EQ(star(cup()), cap());
    EXPECT_EQ(star(cross()), cross());
    EXPECT_EQ(sharp(cross()), cross());
    EXPECT_EQ(sharp(identity(4)), identity(4));
    EXPECT_EQ(sharp(tensor(s_i(2, 1), identity(1))), s_i(3, 2));
    for (int r = 2; r <= 5; ++r)
        for (int i = 1; i < r; ++i) {
            EXPECT_EQ(star(sharp(s_i(r, i))), s_i(r, r - i));
            EXPECT_EQ(star(sharp(e_i(r, i))), e_i(r, r - i));
        }
}

TEST(Diagram, InvolutionLaws) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        int k = static_cast<int>(rng() % 4), l = static_cast<int>(rng() % 4),
            p = static_cast<int>(rng() % 4);
        if ((k + l) % 2) ++l;
        if ((l + p) % 2) ++p;
        Diagram b = oracle::random_diagram(k, l, rng);
        Diagram a = oracle::random_diagram(l, p, rng);
        auto ab = compose(a, b);
        EXPECT_EQ(star(star(a)), a);
        EXPECT_EQ(sharp(sharp(a)), a);
        auto sab = compose(star(b), star(a));
        EXPECT_EQ(star(ab.diagram), sab.diagram);
        EXPECT_EQ(ab.loops, sab.loops);
        auto hab = compose(sharp(a), sharp(b));
        EXPECT_EQ(sharp(ab.diagram), hab.diagram);
        EXPECT_EQ(ab.loops, hab.loops);
        EXPECT_EQ(star(tensor(a, b)), tensor(star(a), star(b)));
        EXPECT_EQ(sharp(tensor(a, b)), tensor(sharp(b), sharp(a)));
    }
}

TEST(Diagram, ComposeMatchesPathWalkingOracle) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        int k = static_cast<int>(rng() % 6), l = static_cast<int>(rng() % 7),
            p = static_cast<int>(rng() % 6);
        if ((k + l) % 2) ++k;
        if ((l + p) % 2) ++p;
        Diagram d2 = oracle::random_diagram(k, l, rng);
        Diagram d1 = oracle::random_diagram(l, p, rng);
        EXPECT_EQ(compose(d1, d2), oracle::walk_compose(d1, d2));
    }
}

TEST(Diagram, Associativity) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        int v[4];
        for (int& x : v) x = static_cast<int>(rng() % 7);
        for (int i = 1; i < 4; ++i)
            if ((v[i] + v[i - 1]) % 2) v[i] = v[i] == 6 ? 5 : v[i] + 1;
        Diagram c = oracle::random_diagram(v[0], v[1], rng);
        Diagram b = oracle::random_diagram(v[1], v[2], rng);
        Diagram a = oracle::random_diagram(v[2], v[3], rng);
        auto ab = compose(a, b);
        auto left = compose(ab.diagram, c);
        auto bc = compose(b, c);
        auto right = compose(a, bc.diagram);
        EXPECT_EQ(left.diagram, right.diagram);
        EXPECT_EQ(left.loops + ab.loops, right.loops + bc.loops);
    }
}

TEST(Diagram, Interchange) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        int k1 = rng() % 4, l1 = rng() % 4, p1 = rng() % 4;
        int k2 = rng() % 4, l2 = rng() % 4, p2 = rng() % 4;
        if ((k1 + l1) % 2) ++l1;
        if ((l1 + p1) % 2) ++p1;
        if ((k2 + l2) % 2) ++l2;
        if ((l2 + p2) % 2) ++p2;
        Diagram a2 = oracle::random_diagram(k1, l1, rng), a = oracle::random_diagram(l1, p1, rng);
        Diagram b2 = oracle::random_diagram(k2, l2, rng), b = oracle::random_diagram(l2, p2, rng);
        auto lhs = compose(tensor(a, b), tensor(a2, b2));
        auto x = compose(a, a2), y = compose(b, b2);
        EXPECT_EQ(lhs.diagram, tensor(x.diagram, y.diagram));
        EXPECT_EQ(lhs.loops, x.loops + y.loops);
    }
}

TEST(Diagram, Builders) {
    EXPECT_EQ(A_q(1), cap());
    EXPECT_EQ(U_q(1), cup());
    EXPECT_EQ(X_cross(1, 1), cross());
    EXPECT_EQ(compose(A_q(2), U_q(2)), (ScaledDiagram{empty_diagram(), 2}));
    // A_2 = A ∘ (I ⊗ A ⊗ I)
    EXPECT_EQ(A_q(2), compose(cap(), tensor(tensor(identity(1), cap()), identity(1))).diagram);
    EXPECT_EQ(X_cross(2, 1), compose(s_i(3, 1), s_i(3, 2)).diagram);
    EXPECT_THROW(s_i(2, 2), std::out_of_range);
    EXPECT_THROW(e_i(3, 0), std::out_of_range);
}

TEST(Diagram, RaiseAndLowerAreInverse) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        int k = 1 + static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
        if ((k + l) % 2) ++l;
        Diagram d = oracle::random_diagram(k, l, rng);
        Diagram r = raise(d);
        EXPECT_EQ(r.k(), k - 1);
        EXPECT_EQ(r.ell(), l + 1);
        EXPECT_EQ(lower(r), d);
    }
    EXPECT_THROW(raise(empty_diagram()), ValencyError);
}

TEST(Diagram, EnumerationCounts) {
    EXPECT_EQ(enumerate_diagrams(2, 2).size(), 3u);
    EXPECT_EQ(enumerate_diagrams(0, 0).size(), 1u);
    EXPECT_EQ(enumerate_diagrams(1, 2).size(), 0u);
    for (int k = 0; k <= 10; ++k)
        for (int l = 0; k + l <= 10; ++l) {
            auto ds = enumerate_diagrams(k, l);
            std::set<Diagram> uniq(ds.begin(), ds.end());
            std::size_t want = (k + l) % 2 ? 0 : static_cast<std::size_t>(oracle::double_factorial(k + l - 1));
            EXPECT_EQ(ds.size(), want);
            EXPECT_EQ(uniq.size(), want);
            EXPECT_EQ(count_diagrams(k, l), want);
        }
}

TEST(Diagram, ThroughStrings) {
    EXPECT_EQ(identity(4).through_strings(), 4);
    EXPECT_EQ(e_i(2, 1).through_strings(), 0);
    EXPECT_EQ(s_i(2, 1).through_strings(), 2);
    for (const auto& d : enumerate_diagrams(3, 5)) {
        int t = d.through_strings();
        EXPECT_LE(t, 3);
        EXPECT_EQ(t % 2, 1);
    }
}

TEST(Diagram, RenderShowsRows) {
    EXPECT_EQ(render(e_i(2, 1)), "o   o\n'---'\n.---.\no   o\n");
    EXPECT_EQ(render(cap()), "\n.---.\no   o\n");
    EXPECT_EQ(render(cross()), "o   o\nA   B\nB   A\no   o\n");
    // a cap over a through string crosses it
    EXPECT_EQ(render(Diagram(3, 1, {{1, 3}, {2, 4}})), "o\nA\n    A\n.---+---.\no   o   o\n");
}
