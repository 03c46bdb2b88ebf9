#pragma once

#include "brauer/diagram.hpp"
#include "brauer/poly.hpp"

#include <map>
#include <string>

namespace bk {

class DiagramSum {
public:
    using Terms = std::map<Diagram, Poly>;

    DiagramSum() = default;
    DiagramSum(int k, int ell) : k_(k), ell_(ell) {}
    DiagramSum(const Diagram& d, Poly c = Poly(1));
    static DiagramSum zero(int k, int ell) { return DiagramSum(k, ell); }

    int k() const { return k_; }
    int ell() const { return ell_; }
    Valency valency() const { return {k_, ell_}; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const Diagram& d) const;

    void add_term(const Diagram& d, const Poly& c);

    DiagramSum& operator+=(const DiagramSum& o);
    DiagramSum& operator-=(const DiagramSum& o);
    DiagramSum& operator*=(const Poly& c);
    DiagramSum operator-() const;

    friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
    friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
    friend DiagramSum operator*(DiagramSum a, const Poly& c) { return a *= c; }
    friend DiagramSum operator*(const Poly& c, DiagramSum a) { return a *= c; }

    bool operator==(const DiagramSum& o) const {
        return k_ == o.k_ && ell_ == o.ell_ && terms_ == o.terms_;
    }
    bool operator!=(const DiagramSum& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same(const DiagramSum& o) const;
    int k_ = 0;
    int ell_ = 0;
    Terms terms_;
};

// a after b
DiagramSum compose(const DiagramSum& a, const DiagramSum& b);
DiagramSum tensor(const DiagramSum& a, const DiagramSum& b);
DiagramSum star(const DiagramSum& x);
DiagramSum sharp(const DiagramSum& x);
// δ^loops · diagram
DiagramSum as_sum(const ScaledDiagram& s);

// product of several sums, leftmost applied last
DiagramSum chain(std::initializer_list<DiagramSum> factors);

// Σ_σ (−ε)^{inv(σ)} σ over Sym_r
DiagramSum symmetrizer(int r, int eps);
// (I^{r−q}⊗A_q)(x⊗I_q)(I^{r−q}⊗U_q)
DiagramSum partial_close(const DiagramSum& x, int q);
// full closure to a scalar
Poly closure(const DiagramSum& x);

Rational specialize(const Poly& p, const Rational& d0);
// coefficients replaced by their constant values at δ = d0
DiagramSum specialize(const DiagramSum& x, const Rational& d0);

// sum of all diagrams of valency (k, ell)
DiagramSum sum_of_all(int k, int ell);

int inversions(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int r);

} // namespace bk
