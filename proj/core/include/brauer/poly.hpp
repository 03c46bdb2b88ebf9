#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bk {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Polynomial in δ over ℚ; coeffs[i] multiplies δ^i. Never has trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(const Rational& c);
    static Poly from_coeffs(std::vector<Rational> c);
    static Poly delta(int power = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    bool is_constant() const { return c_.size() <= 1; }

    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& q);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& q) { return a *= q; }
    friend Poly operator*(const Rational& q, Poly a) { return a *= q; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // rational roots via the rational root theorem
    std::vector<Rational> rational_roots() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly pow(const Poly& p, int e);
Rational factorial(int n);
Rational binomial(int n, int k);

} // namespace bk
