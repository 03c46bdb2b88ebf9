#include "brauer/sigma.hpp"

#include <gtest/gtest.h>

using namespace bk;

namespace {
DiagramSum D(const Diagram& d) { return DiagramSum(d); }
} // namespace

// hand expansions at the smallest sizes
TEST(Sigma, RecursionByHandAtTwo) {
    auto c = sigma_recursion(2, 1);
    EXPECT_EQ(c.rhs, D(identity(2)) - D(cross()));
    EXPECT_TRUE(c.holds());
}

TEST(Sigma, ClosureByHand) {
    // closing one strand of 1 + s gives (δ + 1)
    auto c = sigma_strand_closure(2, -1);
    EXPECT_EQ(c.lhs, D(identity(1)) * (Poly::delta() + Poly(1)));
    EXPECT_TRUE(c.holds());
    // r = 1: a single strand closes to δ, and −ε(0 − εδ) = δ
    EXPECT_TRUE(sigma_strand_closure(1, 1).holds());
    EXPECT_EQ(sigma_strand_closure(1, 1).lhs, D(empty_diagram()) * Poly::delta());
}

TEST(Sigma, HookByHandAtTwo) {
    // (I⊗A)((1−X)⊗I) = hook_0 − hook_1
    Diagram h0(3, 1, {{2, 3}, {1, 4}});
    Diagram h1(3, 1, {{1, 3}, {2, 4}});
    EXPECT_EQ(hook_diagram(2, 0), h0);
    EXPECT_EQ(hook_diagram(2, 1), h1);
    auto c = sigma_hook(2, 1);
    EXPECT_EQ(c.lhs, D(h0) - D(h1));
    EXPECT_TRUE(c.holds());
}

TEST(Sigma, CupCapAtKOne) {
    // r = 2, k = 1: A(1+X)U = AU + AU = 2δ, and 4(2 + δ/2 − 2) = 2δ
    auto c = sigma_cup_cap(2, 1);
    EXPECT_EQ(c.lhs, D(empty_diagram()) * (Poly(2) * Poly::delta()));
    EXPECT_TRUE(c.holds());
    EXPECT_EQ(c.lhs.valency(), (Valency{0, 0}));
}

TEST(Sigma, AllIdentitiesUpToFive) {
    for (const auto& c : sigma_identities(5, 2)) EXPECT_TRUE(c.holds()) << c.name << "\n  lhs " << c.lhs.str() << "\n  rhs " << c.rhs.str();
}
