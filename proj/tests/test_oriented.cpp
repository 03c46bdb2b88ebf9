#include "brauer/oriented.hpp"
#include "brauer/semantics.hpp"
#include "oracle_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace bk;

namespace {

// counts orientation-consistent matchings of the signed boundary directly:
// bottom-bottom and top-top arcs join opposite signs, bottom-top arcs equal ones
std::uint64_t count_oriented(const Signs& s, const Signs& t) {
    std::vector<std::pair<bool, char>> nodes; // (is_top, sign)
    for (char c : s) nodes.push_back({false, c});
    for (char c : t) nodes.push_back({true, c});
    std::vector<bool> used(nodes.size(), false);
    std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
        std::size_t i = 0;
        while (i < nodes.size() && used[i]) ++i;
        if (i == nodes.size()) return 1;
        used[i] = true;
        std::uint64_t total = 0;
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (used[j]) continue;
            bool same_row = nodes[i].first == nodes[j].first;
            bool same_sign = nodes[i].second == nodes[j].second;
            if (same_row == same_sign) continue;
            used[j] = true;
            total += rec();
            used[j] = false;
        }
        used[i] = false;
        return total;
    };
    return rec();
}

std::vector<Signs> all_signs(int n) {
    std::vector<Signs> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Signs s;
        for (int i = 0; i < n; ++i) s += (mask >> i) & 1 ? '-' : '+';
        out.push_back(s);
    }
    return out;
}

std::uint64_t fact(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * fact(n - 1); }

} // namespace

TEST(Signs, SequenceOps) {
    EXPECT_EQ(negative("+-+"), "-+-");
    EXPECT_EQ(reverse("+-"), "-+");
    EXPECT_EQ(join("", "+-"), "+-");
    EXPECT_EQ(sl("++-"), std::make_pair(2, 1));
    EXPECT_EQ(sorted_signs("-+-+"), "++--");
    EXPECT_THROW(check_signs("+x"), OrientationError);
}

TEST(Oriented, GeneratorBoundaries) {
    EXPECT_EQ(oriented_generator("A+").source(), "-+");
    EXPECT_EQ(oriented_generator("A-").source(), "+-");
    EXPECT_EQ(oriented_generator("U+").target(), "+-");
    EXPECT_EQ(oriented_generator("U-").target(), "-+");
    EXPECT_EQ(oriented_generator("X").source(), "++");
    EXPECT_EQ(oriented_generator("I-").target(), "-");
    auto uu = tensor(oriented_generator("U+"), oriented_generator("U-"));
    EXPECT_EQ(uu.source(), "");
    EXPECT_EQ(uu.target(), "+--+");
    EXPECT_EQ(tensor(oriented_identity("+"), oriented_identity("-")), oriented_identity("+-"));
    EXPECT_EQ(tensor(oriented_identity(""), uu), uu);
}

TEST(Oriented, FromSignsRoundTrip) {
    for (int seed = 0; seed < 200; ++seed) {
        int k = seed % 5;
        auto d = random_oriented(k, 4 - k + 2 * (seed % 2), seed);
        auto again = OrientedDiagram::from_signs(d.diagram(), d.source(), d.target());
        EXPECT_EQ(again, d);
    }
}

TEST(Oriented, EnumerationSmall) {
    EXPECT_EQ(enumerate_oriented("+", "+").size(), 1u);
    EXPECT_EQ(enumerate_oriented("+-", "+-").size(), 2u);
    EXPECT_EQ(enumerate_oriented("+", "-").size(), 0u);
    EXPECT_EQ(enumerate_oriented("+", "").size(), 0u);
    EXPECT_EQ(enumerate_oriented("", "").size(), 1u);
}

TEST(Oriented, EnumerationMatchesOracle) {
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            for (const auto& s : all_signs(k))
                for (const auto& t : all_signs(l)) {
                    auto ds = enumerate_oriented(s, t);
                    EXPECT_EQ(ds.size(), count_oriented(s, t)) << s << " -> " << t;
                    std::set<OrientedDiagram> uniq(ds.begin(), ds.end());
                    EXPECT_EQ(uniq.size(), ds.size());
                    for (const auto& d : ds) {
                        EXPECT_EQ(d.source(), s);
                        EXPECT_EQ(d.target(), t);
                    }
                }
}

TEST(Oriented, EndomorphismDimension) {
    for (int n = 0; n <= 4; ++n)
        for (const auto& eta : all_signs(n)) EXPECT_EQ(enumerate_oriented(eta, eta).size(), fact(n)) << eta;
}

TEST(Oriented, WalledBrauer) {
    EXPECT_EQ(walled_brauer_basis(2, 0).size(), 2u);
    EXPECT_EQ(walled_brauer_basis(1, 1).size(), 2u);
    EXPECT_EQ(walled_brauer_basis(0, 0).size(), 1u);
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s + r <= 4; ++s) EXPECT_EQ(walled_brauer_basis(r, s).size(), fact(r + s));
    // (+)^k endomorphisms are exactly the permutations
    for (const auto& d : walled_brauer_basis(3, 0)) EXPECT_EQ(d.diagram().through_strings(), 3);
}

TEST(Oriented, ArcCountIdentity) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 * static_cast<int>(rng() % 5);
        int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        auto d = random_oriented(k, n - k, rng());
        EXPECT_TRUE(arc_count_identity(d)) << to_string(d);
    }
}

TEST(Oriented, CompositionChecksBoundary) {
    EXPECT_THROW(compose(oriented_generator("A+"), oriented_generator("U+")), OrientationError);
    auto loop = compose(oriented_generator("A-"), oriented_generator("U+"));
    EXPECT_EQ(loop.loops, 1);
    EXPECT_EQ(loop.diagram, oriented_identity(""));
}

TEST(Oriented, CompositionAssociativeAndMatchesUnderlying) {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
        auto c = random_oriented(static_cast<int>(rng() % 3) * 2, 2, rng());
        // b ends on the same or reversed signs; a ends on length 0 or 2
        auto b_candidates = enumerate_oriented(c.target(), reverse(c.target()));
        auto b_all = enumerate_oriented(c.target(), c.target());
        b_all.insert(b_all.end(), b_candidates.begin(), b_candidates.end());
        if (b_all.empty()) continue;
        auto b = b_all[rng() % b_all.size()];
        auto a_all = enumerate_oriented(b.target(), "");
        auto a_more = enumerate_oriented(b.target(), b.target());
        a_all.insert(a_all.end(), a_more.begin(), a_more.end());
        auto a = a_all[rng() % a_all.size()];
        auto ab = compose(a, b);
        auto left = compose(ab.diagram, c);
        auto bc = compose(b, c);
        auto right = compose(a, bc.diagram);
        EXPECT_EQ(left.diagram, right.diagram);
        EXPECT_EQ(left.loops + ab.loops, right.loops + bc.loops);
        auto plain = oracle::walk_compose(a.diagram(), b.diagram());
        EXPECT_EQ(plain.diagram, ab.diagram.diagram());
        EXPECT_EQ(plain.loops, ab.loops);
        ++checked;
    }
    EXPECT_GE(checked, 100);
}

TEST(Oriented, TransportIso) {
    auto t = transport_iso("++-");
    EXPECT_EQ(t.to_sorted, oriented_identity("++-"));
    for (int n = 1; n <= 4; ++n)
        for (const auto& eta : all_signs(n)) {
            auto iso = transport_iso(eta);
            auto both = compose(iso.from_sorted, iso.to_sorted);
            EXPECT_EQ(both.diagram, oriented_identity(eta));
            EXPECT_EQ(both.loops, 0);
            auto back = compose(iso.to_sorted, iso.from_sorted);
            EXPECT_EQ(back.diagram, oriented_identity(iso.eta_bar));
            auto basis = enumerate_oriented(eta, eta);
            std::set<OrientedDiagram> image;
            for (const auto& d : basis) {
                auto f = iso.forward(d);
                EXPECT_EQ(f.loops, 0);
                EXPECT_EQ(iso.backward(f.diagram).diagram, d);
                image.insert(f.diagram);
            }
            EXPECT_EQ(image.size(), basis.size());
            if (n > 3) continue;
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    auto xy = compose(x, y);
                    auto lhs = iso.forward(xy.diagram);
                    auto rhs = compose(iso.forward(x).diagram, iso.forward(y).diagram);
                    EXPECT_EQ(lhs.diagram, rhs.diagram);
                    EXPECT_EQ(lhs.loops + xy.loops, rhs.loops);
                }
        }
}

TEST(Oriented, TransportMinusPlus) {
    auto iso = transport_iso("-+");
    auto cupcap = compose(oriented_generator("U-"), oriented_generator("A+")).diagram;
    auto sorted = iso.forward(cupcap).diagram;
    auto expect = compose(oriented_generator("U+"), oriented_generator("A-")).diagram;
    EXPECT_EQ(sorted, expect);
}

TEST(Relations, BrauerWithTransforms) {
    DiagramSemantics sem;
    auto rels = brauer_relations(true);
    EXPECT_EQ(rels.size(), 40u);
    for (const auto& r : rels) EXPECT_TRUE(relation_holds(r, sem)) << r.name << ": " << to_string(r.lhs);
}

TEST(Relations, BrauerDetectsWrongRelation) {
    DiagramSemantics sem;
    RelationSpec bad{"bad", parse_expr("A ; A"), parse_expr("I ; I")};
    EXPECT_THROW((void)relation_holds(bad, sem), ValencyError);
    RelationSpec wrong{"wrong", parse_expr("X"), parse_expr("I I")};
    EXPECT_FALSE(relation_holds(wrong, sem));
}

TEST(Relations, Oriented) {
    OrientedSemantics sem;
    for (const auto& r : oriented_relations()) EXPECT_TRUE(relation_holds(r, sem)) << r.name;
}

TEST(Relations, ReversedCrossingIsTheMinusCrossing) {
    OrientedSemantics sem;
    auto m = oriented_macros();
    auto xmm = evaluate_expr(parse_expr("X--", m), sem);
    EXPECT_EQ(xmm.loops, 0);
    EXPECT_EQ(xmm.diagram, OrientedDiagram::from_signs(cross(), "--", "--"));
    auto xpm = evaluate_expr(parse_expr("Xpm", m), sem);
    EXPECT_EQ(xpm.diagram, OrientedDiagram::from_signs(cross(), "+-", "-+"));
}

TEST(Relations, StarSharpOfExpr) {
    auto e = parse_expr("A I ; I U");
    EXPECT_EQ(to_string(star(e)), "(I⊗A)∘(U⊗I)");
    EXPECT_EQ(to_string(sharp(e)), "(I⊗A)∘(U⊗I)");
    EXPECT_EQ(star(star(e)), e);
}
