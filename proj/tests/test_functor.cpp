#include "brauer/functor.hpp"
#include "brauer/semantics.hpp"
#include "oracle_util.hpp"

#include <gtest/gtest.h>

using namespace bk;

namespace {

const std::vector<GroupSpec> form_groups = {GroupSpec::O(1), GroupSpec::O(2), GroupSpec::O(3), GroupSpec::Sp(2),
                                            GroupSpec::OSp(1, 2), GroupSpec::OSp(2, 2)};
const std::vector<GroupSpec> gl_groups = {GroupSpec::GL(1, 0), GroupSpec::GL(2, 0), GroupSpec::GL(1, 1),
                                          GroupSpec::GL(2, 1)};

Signs plus(int n) { return Signs(static_cast<std::size_t>(n), '+'); }

} // namespace

TEST(Group, Parse) {
    EXPECT_EQ(GroupSpec::parse("o3").name(), "O(3)");
    EXPECT_EQ(GroupSpec::parse("so2").name(), "SO(2)");
    EXPECT_EQ(GroupSpec::parse("sp2").sdim(), -2);
    EXPECT_EQ(GroupSpec::parse("osp2|2").dim(), 4);
    EXPECT_EQ(GroupSpec::parse("gl2|1").sdim(), 1);
    EXPECT_THROW(GroupSpec::parse("sp3"), std::invalid_argument);
    EXPECT_THROW(GroupSpec::parse("u3"), std::invalid_argument);
}

TEST(Functor, GeneratorIdentities) {
    for (const auto& g : form_groups) {
        auto A = generator_op(g, "A"), U = generator_op(g, "U"), X = generator_op(g, "X"), I = generator_op(g, "I");
        auto cc = compose(A, U);
        EXPECT_EQ(cc.entry(0, 0), Rational(g.sdim())) << g.name();
        EXPECT_EQ(compose(tensor(A, I), tensor(I, U)), I) << g.name();
        EXPECT_EQ(compose(X, X), TensorOperator::identity(g.dim(), "++"));
        // P(c0) = c0 for the super-symmetric c0
        EXPECT_EQ(compose(X, U), U);
    }
}

TEST(Functor, GeneratorRelationsOnFormGroups) {
    for (const auto& g : form_groups) {
        FunctorSemantics sem{g};
        for (const auto& r : osp_functor_relations()) EXPECT_TRUE(relation_holds(r, sem)) << g.name() << " " << r.name;
        for (const auto& r : brauer_relations(true)) EXPECT_TRUE(relation_holds(r, sem)) << g.name() << " " << r.name;
    }
}

TEST(Functor, GeneratorRelationsOnGL) {
    for (const auto& g : gl_groups) {
        FunctorSemantics sem{g};
        for (const auto& r : gl_functor_relations()) EXPECT_TRUE(relation_holds(r, sem)) << g.name() << " " << r.name;
        for (const auto& r : oriented_relations()) EXPECT_TRUE(relation_holds(r, sem)) << g.name() << " " << r.name;
    }
}

TEST(Functor, Examples) {
    auto g = GroupSpec::O(2);
    auto fe = functor(g, e_i(2, 1));
    EXPECT_EQ(fe.to_matrix().trace(), Rational(2));
    EXPECT_EQ(rank_of({fe.to_matrix().row(0), fe.to_matrix().row(1), fe.to_matrix().row(2), fe.to_matrix().row(3)}, 4),
              1u);
    EXPECT_EQ(fe, compose(generator_op(g, "U"), generator_op(g, "A")));
    EXPECT_TRUE(functor(GroupSpec::O(1), symmetrizer(2, 1)).is_zero());
    EXPECT_EQ(functor(GroupSpec::O(3), identity(3)), TensorOperator::identity(3, "+++"));
}

TEST(Functor, Functoriality) {
    std::mt19937_64 rng(5);
    for (const auto& g : form_groups) {
        for (int t = 0; t < 40; ++t) {
            int k = static_cast<int>(rng() % 4), mid = static_cast<int>(rng() % 4);
            if ((k + mid) % 2) ++mid;
            int top = static_cast<int>(rng() % 4);
            if ((mid + top) % 2) ++top;
            if (mid > 3 || top > 3) continue;
            auto d2 = oracle::random_diagram(k, mid, rng);
            auto d1 = oracle::random_diagram(mid, top, rng);
            auto s = compose(d1, d2);
            Rational scale = 1;
            for (int i = 0; i < s.loops; ++i) scale *= g.sdim();
            EXPECT_EQ(compose(functor(g, d1), functor(g, d2)), scale * functor(g, s.diagram)) << g.name();
        }
    }
    for (const auto& g : gl_groups) {
        for (int t = 0; t < 60; ++t) {
            auto c = random_oriented(2, 2, rng());
            auto ds = enumerate_oriented(c.target(), "");
            auto more = enumerate_oriented(c.target(), c.target());
            ds.insert(ds.end(), more.begin(), more.end());
            auto b = ds[rng() % ds.size()];
            auto s = compose(b, c);
            Rational scale = 1;
            for (int i = 0; i < s.loops; ++i) scale *= g.sdim();
            EXPECT_EQ(compose(functor(g, b), functor(g, c)), scale * functor(g, s.diagram)) << g.name();
        }
    }
}

TEST(Functor, WordIndependence) {
    for (const auto& g : {GroupSpec::O(2), GroupSpec::OSp(1, 2)}) {
        for (const auto& d : enumerate_diagrams(2, 2)) {
            auto f = functor(g, d);
            for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(functor(g, random_word(d, seed)), f);
        }
        for (const auto& d : enumerate_diagrams(1, 3)) {
            auto f = functor(g, d);
            for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(functor(g, random_word(d, seed)), f);
        }
    }
}

TEST(Functor, OrientedWordEvaluatesBack) {
    OrientedSemantics sem;
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            if ((k + l) % 2) continue;
            for (int t = 0; t < 20; ++t) {
                auto d = random_oriented(k, l, static_cast<std::uint64_t>(t * 31 + k * 7 + l));
                auto v = evaluate_expr(oriented_word_expr(d), sem);
                EXPECT_EQ(v.diagram, d);
                EXPECT_EQ(v.loops, 0);
            }
        }
}

TEST(Functor, Adjoint) {
    for (const auto& g : form_groups) {
        EXPECT_EQ(adjoint(g, generator_op(g, "A")), generator_op(g, "U")) << g.name();
        EXPECT_EQ(adjoint(g, TensorOperator::identity(g.dim(), "++")), TensorOperator::identity(g.dim(), "++"));
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l) {
                if ((k + l) % 2) continue;
                for (const auto& d : enumerate_diagrams(k, l)) {
                    auto f = functor(g, d);
                    EXPECT_EQ(adjoint(g, f), functor(g, star(d))) << g.name() << " " << to_string(d);
                    EXPECT_EQ(adjoint(g, adjoint(g, f)), f);
                }
            }
    }
}

TEST(Functor, Supertrace) {
    for (const auto& g : form_groups) {
        EXPECT_EQ(supertrace(g, TensorOperator::identity(g.dim(), "++")), Rational(g.sdim() * g.sdim()));
    }
    // partial closure agrees with the categorical trace
    auto g = GroupSpec::OSp(1, 2);
    EXPECT_EQ(supertrace(g, functor(g, s_i(2, 1))), Rational(g.sdim()));
}

TEST(Oracle, SmallHomSpaces) {
    EXPECT_EQ(equivariant_dim(GroupSpec::O(2), "", "++"), 1u);
    EXPECT_EQ(equivariant_dim(GroupSpec::SO(2), "", "++"), 2u);
    EXPECT_EQ(equivariant_dim(GroupSpec::Sp(2), "+", "+"), 1u);
    EXPECT_EQ(equivariant_dim(GroupSpec::GL(1, 0), "+-", ""), 1u);
    EXPECT_EQ(equivariant_dim(GroupSpec::O(3), "++", "++"), 3u);
    EXPECT_EQ(equivariant_dim(GroupSpec::O(1), "++", "++"), 1u);
    EXPECT_EQ(equivariant_dim(GroupSpec::GL(2, 1), "++", "++"), 2u);
}

TEST(Oracle, LieBasisDimensions) {
    EXPECT_EQ(lie_basis(GroupSpec::O(3)).elements.size(), 3u);
    EXPECT_EQ(lie_basis(GroupSpec::Sp(2)).elements.size(), 3u);
    EXPECT_EQ(lie_basis(GroupSpec::Sp(4)).elements.size(), 10u);
    // osp(1|2): 3 even + 2 odd
    auto b = lie_basis(GroupSpec::OSp(1, 2));
    EXPECT_EQ(b.elements.size(), 5u);
    EXPECT_EQ(std::count(b.parity.begin(), b.parity.end(), 1), 2);
    EXPECT_EQ(lie_basis(GroupSpec::GL(2, 1)).elements.size(), 9u);
}

TEST(Oracle, FunctorImagesAreEquivariant) {
    for (const auto& g : form_groups)
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                if ((k + l) % 2) continue;
                for (const auto& d : enumerate_diagrams(k, l)) EXPECT_TRUE(is_equivariant(g, functor(g, d))) << g.name();
            }
    for (const auto& g : gl_groups)
        for (const Signs s : {"+-", "++", "-+", "--"})
            for (const Signs t : {"+-", "++", "-+", "--", ""})
                for (const auto& d : enumerate_oriented(s, t)) EXPECT_TRUE(is_equivariant(g, functor(g, d))) << g.name();
    // negative control: a non-equivariant operator
    Matrix m(2, 2);
    m(0, 0) = 1;
    EXPECT_FALSE(is_equivariant(GroupSpec::O(2), TensorOperator::from_matrix(2, "+", "+", m)));
}

TEST(Budget, EnforcedAndOverridable) {
    set_budget(10);
    EXPECT_THROW(TensorOperator::identity(2, "++++"), BudgetError);
    set_budget(0);
    EXPECT_NO_THROW(TensorOperator::identity(2, "++++"));
}
