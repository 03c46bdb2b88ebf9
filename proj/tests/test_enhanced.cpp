#include "brauer/enhanced.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace bk;

namespace {

// Levi-Civita vector written out independently of the symmetrizer
TensorOperator levi_civita(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    std::map<std::size_t, Rational> acc;
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) inv += p[i] > p[j];
        std::size_t idx = 0;
        for (int v : p) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
        acc[idx] = inv % 2 ? -1 : 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return TensorOperator(m, "", std::string(static_cast<std::size_t>(m), '+'), {SparseVec::from_map(acc)});
}

} // namespace

TEST(Enhanced, DeltaForTwo) {
    const DeltaGenerator dg = build_delta(2);
    // e₁⊗e₂ − e₂⊗e₁
    EXPECT_EQ(dg.lambda.entry(1, 0), Rational(1));
    EXPECT_EQ(dg.lambda.entry(2, 0), Rational(-1));
    EXPECT_EQ(dg.lambda.columns()[0].nnz(), 2u);
}

TEST(Enhanced, DeltaIsLeviCivita) {
    for (int m = 2; m <= 4; ++m) {
        const DeltaGenerator dg = build_delta(m);
        EXPECT_EQ(dg.lambda, levi_civita(m)) << m;
        const TensorOperator ss = compose(dg.lambda_star, dg.lambda);
        EXPECT_EQ(ss.entry(0, 0), factorial(m));
        EXPECT_EQ(compose(dg.lambda, dg.lambda_star), functor(dg.group, symmetrizer(m, 1)));
    }
}

TEST(Enhanced, RelationsHold) {
    for (int m = 2; m <= 4; ++m) {
        const Report rep = check_relations(m);
        for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << "m=" << m << " " << c.claim;
        const bool has_cycle = std::any_of(rep.checks.begin(), rep.checks.end(),
                                           [](const Check& c) { return c.claim.starts_with("cycle relation"); });
        EXPECT_EQ(has_cycle, m <= 3);
    }
}

TEST(Enhanced, CycleReadings) {
    for (int m = 2; m <= 3; ++m) {
        const DeltaGenerator dg = build_delta(m);
        EXPECT_TRUE(cycle_relation_holds(dg, CycleReading::AsDrawn));
        EXPECT_FALSE(cycle_relation_holds(dg, CycleReading::AsDrawnInverse));
        EXPECT_FALSE(cycle_relation_holds(dg, CycleReading::AsPrinted));
        EXPECT_FALSE(cycle_relation_holds(dg, CycleReading::AsPrintedInverse));
    }
}

TEST(Enhanced, CycleDiagram) {
    // bottom 1 goes to top m+1, others shift left
    const Diagram c = cycle_diagram(2, false);
    EXPECT_EQ(c, perm_diagram({2, 0, 1}));
    EXPECT_EQ(compose(c, cycle_diagram(2, true)).diagram, identity(3));
}

TEST(Enhanced, PermutationsActBySign) {
    for (int m = 2; m <= 3; ++m) {
        const DeltaGenerator dg = build_delta(m);
        for (const auto& p : all_permutations(m)) {
            const TensorOperator lhs = compose(functor(dg.group, perm_diagram(p)), dg.lambda);
            const Rational sign = inversions(p) % 2 ? -1 : 1;
            EXPECT_EQ(lhs, sign * dg.lambda);
        }
    }
}

TEST(Enhanced, ForcedParameters) {
    const ForcedParameters two = forced_parameters(2);
    EXPECT_EQ(two.product_roots, (std::vector<Rational>{-1, 2}));
    EXPECT_EQ(two.f_m, Poly::delta() - Poly(2));
    EXPECT_EQ(two.common, std::vector<Rational>{2});
    EXPECT_EQ(forced_parameters(3).f_m.eval(3), Rational(0));
    for (int m = 2; m <= 6; ++m) {
        const ForcedParameters fp = forced_parameters(m);
        EXPECT_EQ(fp.common, std::vector<Rational>{m}) << m;
        EXPECT_EQ(fp.product_rule.eval(m), Rational(0));
        EXPECT_EQ(fp.f_m.eval(m), Rational(0));
    }
}

TEST(Enhanced, SigmaVanishing) {
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(sigma_vanishing(m)) << m;
    const TensorOperator s2 = functor(GroupSpec::SO(2), symmetrizer(2, 1));
    EXPECT_FALSE(s2.is_zero());
    EXPECT_EQ(rank_of(s2.columns(), s2.rows()), 1u);
    EXPECT_EQ(functor(GroupSpec::SO(2), symmetrizer(3, 1)).rows(), 8u);
}

TEST(Enhanced, FullnessExamples) {
    const FullnessResult a = fullness_check(2, 0, 2);
    EXPECT_EQ(a.brauer_rank, 1u);
    EXPECT_EQ(a.delta_rank, 1u);
    EXPECT_EQ(a.oracle_dim, 2u);
    const FullnessResult b = fullness_check(3, 0, 2);
    EXPECT_EQ(b.delta_rank, 0u);
    EXPECT_EQ(b.brauer_rank, 1u);
    EXPECT_EQ(b.oracle_dim, 1u);
}

TEST(Enhanced, FullnessSweep) {
    for (int m = 2; m <= 3; ++m)
        for (int s = 0; s <= 4; ++s)
            for (int t = 0; s + t <= 4; ++t) EXPECT_TRUE(fullness_check(m, s, t).pass()) << m << " " << s << " " << t;
}

TEST(Enhanced, SampleEvaluation) {
    const DeltaGenerator dg = build_delta(2);
    EnhancedMorphismSample x;
    x.s = 0;
    x.t = 2;
    x.brauer_part = DiagramSum(cup(), Poly(3));
    x.delta_part = {{identity(2), Rational(-1)}};
    const TensorOperator want = Rational(3) * functor(dg.group, cup()) + Rational(-1) * dg.lambda;
    EXPECT_EQ(functor(dg, x), want);
    EXPECT_TRUE(is_equivariant(dg.group, functor(dg, x)));
}
