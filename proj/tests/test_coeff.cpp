#include "brauer/dsum.hpp"

#include <gtest/gtest.h>

using namespace bk;

namespace {
DiagramSum D(const Diagram& d) { return DiagramSum(d); }
const Poly delta = Poly::delta();
} // namespace

TEST(Poly, Arithmetic) {
    Poly p = delta * delta - Poly(1);
    EXPECT_EQ(p.eval(3), 8);
    EXPECT_EQ(p.str(), "d^2 - 1");
    EXPECT_EQ((delta + Poly(1)) * (delta - Poly(1)), p);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(Poly().eval(Rational(7, 3)), 0);
    EXPECT_EQ(Poly::from_coeffs({Rational(1, 2), 0, 0}).degree(), 0);
}

TEST(Poly, RationalRoots) {
    // δ(δ−1) − 2
    Poly p = delta * (delta - Poly(1)) - Poly(2);
    EXPECT_EQ(p.rational_roots(), (std::vector<Rational>{-1, 2}));
    Poly q = (Poly(2) * delta - Poly(1)) * delta * (delta * delta + Poly(2));
    EXPECT_EQ(q.rational_roots(), (std::vector<Rational>{0, Rational(1, 2)}));
    EXPECT_TRUE((delta * delta + Poly(1)).rational_roots().empty());
}

TEST(Poly, Factorials) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(DiagramSum, ComposeScalesByLoops) {
    EXPECT_EQ(compose(D(e_i(2, 1)), D(e_i(2, 1))), D(e_i(2, 1)) * delta);
    EXPECT_TRUE(compose(DiagramSum::zero(2, 2), D(s_i(2, 1))).is_zero());
    auto one = D(identity(2)), s = D(s_i(2, 1));
    EXPECT_TRUE(compose(one + s, one - s).is_zero());
}

TEST(DiagramSum, ValencyChecks) {
    EXPECT_THROW(D(identity(2)) + D(identity(1)), ValencyError);
    EXPECT_THROW(compose(D(identity(2)), D(identity(1))), ValencyError);
    DiagramSum z(2, 2);
    EXPECT_THROW(z.add_term(identity(1), Poly(1)), ValencyError);
}

TEST(DiagramSum, Symmetrizers) {
    auto one = D(identity(2)), s = D(s_i(2, 1));
    EXPECT_EQ(symmetrizer(2, 1), one - s);
    EXPECT_EQ(symmetrizer(2, -1), one + s);
    EXPECT_EQ(symmetrizer(1, 1), D(identity(1)));
    EXPECT_EQ(symmetrizer(0, -1), D(empty_diagram()));
    for (int r = 1; r <= 5; ++r)
        for (int eps : {1, -1}) {
            auto S = symmetrizer(r, eps);
            EXPECT_EQ(S.size(), static_cast<std::size_t>(factorial(r).get_num().get_ui()));
            EXPECT_EQ(compose(S, S), S * Poly(factorial(r)));
        }
}

TEST(DiagramSum, PartialClose) {
    EXPECT_EQ(partial_close(D(identity(2)), 1), D(identity(1)) * delta);
    EXPECT_EQ(partial_close(D(s_i(2, 1)), 1), D(identity(1)));
    EXPECT_EQ(partial_close(symmetrizer(2, -1), 1), D(identity(1)) * (delta + Poly(1)));
    EXPECT_EQ(closure(D(identity(3))), pow(delta, 3));
    // closing e1 fully gives δ: its cap and cup join into one loop with the closure arcs
    EXPECT_EQ(closure(D(e_i(2, 1))), delta);
}

TEST(DiagramSum, Specialize) {
    EXPECT_EQ(specialize(delta * delta - Poly(1), 3), 8);
    EXPECT_EQ(specialize(delta + Poly(1), -2), -1);
    EXPECT_EQ(specialize(Poly(), 5), 0);
    auto x = specialize(partial_close(symmetrizer(2, -1), 1), -2);
    EXPECT_EQ(x, D(identity(1)) * Poly(-1));
}

TEST(DiagramSum, StarSharpLinear) {
    auto x = symmetrizer(3, 1) * delta + D(e_i(3, 1));
    EXPECT_EQ(star(star(x)), x);
    EXPECT_EQ(sharp(symmetrizer(3, -1)), symmetrizer(3, -1));
    EXPECT_EQ(star(symmetrizer(4, 1)), symmetrizer(4, 1));
}

TEST(DiagramSum, SumOfAll) {
    EXPECT_EQ(sum_of_all(1, 1), D(identity(1)));
    EXPECT_EQ(sum_of_all(2, 2).size(), 3u);
}
