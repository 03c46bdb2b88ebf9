#include "brauer/dsum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bk {

DiagramSum::DiagramSum(const Diagram& d, Poly c) : k_(d.k()), ell_(d.ell()) {
    if (!c.is_zero()) terms_.emplace(d, std::move(c));
}

Poly DiagramSum::coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Poly() : it->second;
}

void DiagramSum::add_term(const Diagram& d, const Poly& c) {
    if (d.k() != k_ || d.ell() != ell_)
        throw ValencyError("term of valency " + to_string(Valency{d.k(), d.ell()}) +
                           " added to sum of valency " + to_string(Valency{k_, ell_}));
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DiagramSum::check_same(const DiagramSum& o) const {
    if (k_ != o.k_ || ell_ != o.ell_)
        throw ValencyError("sums of valency " + to_string(Valency{k_, ell_}) + " and " +
                           to_string(Valency{o.k_, o.ell_}));
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

DiagramSum& DiagramSum::operator*=(const Poly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, x] : terms_) x *= c;
    return *this;
}

DiagramSum DiagramSum::operator-() const {
    DiagramSum r = *this;
    for (auto& [d, x] : r.terms_) x = -x;
    return r;
}

std::string DiagramSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")[";
        bool f2 = true;
        for (auto [a, b] : d.pairs()) {
            if (!f2) os << ",";
            f2 = false;
            os << a << "-" << b;
        }
        os << "]";
    }
    return os.str();
}

DiagramSum compose(const DiagramSum& a, const DiagramSum& b) {
    if (a.k() != b.ell())
        throw ValencyError("cannot compose " + to_string(a.valency()) + " after " +
                           to_string(b.valency()));
    DiagramSum r(b.k(), a.ell());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto s = compose(da, db);
            r.add_term(s.diagram, ca * cb * Poly::delta(s.loops));
        }
    return r;
}

DiagramSum tensor(const DiagramSum& a, const DiagramSum& b) {
    DiagramSum r(a.k() + b.k(), a.ell() + b.ell());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(tensor(da, db), ca * cb);
    return r;
}

DiagramSum star(const DiagramSum& x) {
    DiagramSum r(x.ell(), x.k());
    for (const auto& [d, c] : x.terms()) r.add_term(star(d), c);
    return r;
}

DiagramSum sharp(const DiagramSum& x) {
    DiagramSum r(x.k(), x.ell());
    for (const auto& [d, c] : x.terms()) r.add_term(sharp(d), c);
    return r;
}

DiagramSum as_sum(const ScaledDiagram& s) { return DiagramSum(s.diagram, Poly::delta(s.loops)); }

DiagramSum chain(std::initializer_list<DiagramSum> factors) {
    if (factors.size() == 0) throw std::invalid_argument("chain of nothing");
    auto it = std::rbegin(factors);
    DiagramSum acc = *it;
    for (++it; it != std::rend(factors); ++it) acc = compose(*it, acc);
    return acc;
}

int inversions(const std::vector<int>& perm) {
    int n = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++n;
    return n;
}

std::vector<std::vector<int>> all_permutations(int r) {
    std::vector<int> p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

DiagramSum symmetrizer(int r, int eps) {
    if (r < 0) throw std::out_of_range("symmetrizer: negative r");
    if (eps != 1 && eps != -1) throw std::invalid_argument("symmetrizer: eps must be ±1");
    DiagramSum s(r, r);
    for (const auto& p : all_permutations(r)) {
        int sign = (eps == 1 && inversions(p) % 2) ? -1 : 1;
        s.add_term(perm_diagram(p), Poly(sign));
    }
    return s;
}

DiagramSum partial_close(const DiagramSum& x, int q) {
    if (x.k() != x.ell()) throw ValencyError("partial_close needs an endomorphism");
    const int r = x.k();
    if (q < 0 || q > r) throw std::out_of_range("partial_close: q out of range");
    DiagramSum top(tensor(identity(r - q), A_q(q)));
    DiagramSum bot(tensor(identity(r - q), U_q(q)));
    return chain({top, tensor(x, DiagramSum(identity(q))), bot});
}

Poly closure(const DiagramSum& x) {
    DiagramSum c = partial_close(x, x.k());
    return c.coeff(empty_diagram());
}

Rational specialize(const Poly& p, const Rational& d0) { return p.eval(d0); }

DiagramSum specialize(const DiagramSum& x, const Rational& d0) {
    DiagramSum r(x.k(), x.ell());
    for (const auto& [d, c] : x.terms()) r.add_term(d, Poly(c.eval(d0)));
    return r;
}

DiagramSum sum_of_all(int k, int ell) {
    DiagramSum r(k, ell);
    for (const auto& d : enumerate_diagrams(k, ell)) r.add_term(d, Poly(1));
    return r;
}

} // namespace bk
