#include "brauer/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bk {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::from_coeffs(std::vector<Rational> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Poly Poly::delta(int power) {
    Poly p;
    p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.c_.back() = 1;
    return p;
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& q) {
    if (q == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= q;
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

} // namespace

std::vector<Rational> Poly::rational_roots() const {
    if (is_zero()) throw std::domain_error("zero polynomial has every root");
    std::vector<Rational> roots;
    // clear denominators
    mpz_class l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& x : c_) a.push_back(mpz_class(x * l));
    std::size_t lo = 0;
    while (a[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(0);
    if (lo + 1 < a.size()) {
        auto ps = positive_divisors(a[lo]);
        auto qs = positive_divisors(a.back());
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int sgn : {1, -1}) {
                    Rational cand(sgn * p, q);
                    cand.canonicalize();
                    if (eval(cand) == 0 &&
                        std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || i == 0) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "d";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly pow(const Poly& p, int e) {
    Poly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

Rational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace bk
