#include "brauer/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bk {

namespace {

using Perm = std::vector<int>;

Rational power(const Rational& x, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

Diagram pairs_diagram(int r, const std::vector<std::pair<int, int>>& caps) {
    // the same caps on both rows (0-based), everything else straight
    std::vector<int> partner(static_cast<std::size_t>(2 * r), -1);
    for (auto [a, b] : caps) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        partner[static_cast<std::size_t>(r + a)] = r + b;
        partner[static_cast<std::size_t>(r + b)] = r + a;
    }
    for (int i = 0; i < r; ++i)
        if (partner[static_cast<std::size_t>(i)] < 0) {
            partner[static_cast<std::size_t>(i)] = r + i;
            partner[static_cast<std::size_t>(r + i)] = i;
        }
    return Diagram::from_partner(r, r, std::move(partner));
}

void link(std::vector<int>& w, int a, int b) {
    w[static_cast<std::size_t>(a)] = b;
    w[static_cast<std::size_t>(b)] = a;
}

Perm perm_of(const Diagram& d) {
    Perm p(static_cast<std::size_t>(d.k()));
    for (int i = 0; i < d.k(); ++i) {
        const int j = d.partner(i);
        if (j < d.k()) throw std::invalid_argument("not a permutation diagram");
        p[static_cast<std::size_t>(i)] = j - d.k();
    }
    return p;
}

// a after b
Perm mult(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

// all permutations of 0..n-1 that map each block to itself
std::vector<Perm> block_group(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Perm> out{Perm(static_cast<std::size_t>(n))};
    std::iota(out[0].begin(), out[0].end(), 0);
    for (const auto& block : blocks) {
        std::vector<Perm> next;
        std::vector<int> img = block;
        std::sort(img.begin(), img.end());
        do {
            for (Perm p : out) {
                for (std::size_t i = 0; i < block.size(); ++i) p[static_cast<std::size_t>(block[i])] = img[i];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(img.begin(), img.end()));
        out = std::move(next);
    }
    return out;
}

std::string plus_word(int n) { return std::string(static_cast<std::size_t>(n), '+'); }

std::vector<std::pair<Diagram, Rational>> specialised_terms(const DiagramSum& x, const Rational& delta0) {
    std::vector<std::pair<Diagram, Rational>> out;
    for (const auto& [d, p] : x.terms()) {
        Rational c = p.eval(delta0);
        if (c != 0) out.emplace_back(d, c);
    }
    return out;
}

} // namespace

// ---- gluing --------------------------------------------------------------

ScaledDiagram glue(const Diagram& x, const std::vector<int>& wiring, int k, int ell) {
    const int L = x.nodes();
    const int total = L + k + ell;
    if (static_cast<int>(wiring.size()) != total) throw ValencyError("glue: wiring has the wrong size");
    std::vector<char> seen(static_cast<std::size_t>(L), 0);
    std::vector<int> partner(static_cast<std::size_t>(k + ell), -1);
    for (int e = L; e < total; ++e) {
        if (partner[static_cast<std::size_t>(e - L)] >= 0) continue;
        int cur = wiring[static_cast<std::size_t>(e)];
        while (cur < L) {
            seen[static_cast<std::size_t>(cur)] = 1;
            const int other = x.partner(cur);
            seen[static_cast<std::size_t>(other)] = 1;
            cur = wiring[static_cast<std::size_t>(other)];
        }
        partner[static_cast<std::size_t>(e - L)] = cur - L;
        partner[static_cast<std::size_t>(cur - L)] = e - L;
    }
    int loops = 0;
    for (int u = 0; u < L; ++u) {
        if (seen[static_cast<std::size_t>(u)]) continue;
        ++loops;
        int cur = u;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            const int other = x.partner(cur);
            seen[static_cast<std::size_t>(other)] = 1;
            cur = wiring[static_cast<std::size_t>(other)];
        } while (cur != u);
    }
    return {Diagram::from_partner(k, ell, std::move(partner)), loops};
}

DiagramSum glue(const DiagramSum& x, const std::vector<int>& wiring, int k, int ell) {
    DiagramSum out(k, ell);
    for (const auto& [d, c] : x.terms()) {
        ScaledDiagram s = glue(d, wiring, k, ell);
        out.add_term(s.diagram, c * Poly::delta(s.loops));
    }
    return out;
}

// ---- Young symmetrizers ----------------------------------------------------

YoungRectangleIdempotent young_idempotent(int m, int ell) {
    if (m < 0 || ell < 0) throw std::invalid_argument("young_idempotent: negative shape");
    const int N = (m + 1) * (ell + 1);
    if (N > 8) throw BudgetError("young_idempotent: (m+1)(l+1) must be at most 8");
    YoungRectangleIdempotent y;
    y.m = m;
    y.ell = ell;
    y.rows.assign(static_cast<std::size_t>(m + 1), {});
    y.columns.assign(static_cast<std::size_t>(ell + 1), {});
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= ell; ++b) {
            y.rows[static_cast<std::size_t>(a)].push_back(a * (ell + 1) + b);
            y.columns[static_cast<std::size_t>(b)].push_back(a * (ell + 1) + b);
        }
    const std::vector<Perm> R = block_group(N, y.rows);
    const std::vector<Perm> C = block_group(N, y.columns);
    y.row_group_order = R.size();
    y.column_group_order = C.size();

    std::map<Perm, Rational> acc;
    for (const Perm& pi : R)
        for (const Perm& sigma : C) acc[mult(pi, sigma)] += inversions(sigma) % 2 ? -1 : 1;
    y.element = DiagramSum(N, N);
    for (const auto& [p, c] : acc)
        if (c != 0) y.element.add_term(perm_diagram(p), Poly(c));

    // e² = κe and e has identity coefficient 1, so κ is the identity coefficient of e²
    Rational kappa = 0;
    for (const auto& [p, c] : acc) {
        auto it = acc.find(inverse(p));
        if (it != acc.end()) kappa += c * it->second;
    }
    y.kappa = kappa;
    return y;
}

bool is_quasi_idempotent(const YoungRectangleIdempotent& y) {
    const std::size_t n = y.element.size();
    if (n * n > 10'000'000) throw BudgetError("is_quasi_idempotent: product too large");
    std::vector<std::pair<Perm, Rational>> terms;
    for (const auto& [d, c] : y.element.terms()) terms.emplace_back(perm_of(d), c.coeff(0));
    std::map<Perm, Rational> sq;
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : terms) sq[mult(a, b)] += ca * cb;
    std::map<Perm, Rational> want;
    for (const auto& [a, ca] : terms) want[a] = y.kappa * ca;
    std::erase_if(sq, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    return sq == want;
}

// ---- orthogonal kernel -----------------------------------------------------

DiagramSum E_p(int m, int p) {
    if (m < 0 || p < 0 || p > m + 1) throw std::out_of_range("E_p: need 0 <= p <= m+1");
    const int r = m + 1;
    const int bent = r - p;
    // legs: Σ bottom 0..r-1, Σ top r..2r-1; externals: bottom 2r+i, top 3r+j
    std::vector<int> w(static_cast<std::size_t>(4 * r));
    for (int i = 0; i < p; ++i) {
        link(w, i, 2 * r + i);
        link(w, r + i, 3 * r + i);
    }
    for (int a = 0; a < bent; ++a) {
        link(w, p + a, 3 * r + (r - 1 - a));
        link(w, r + p + a, 2 * r + (r - 1 - a));
    }
    return glue(symmetrizer(r, 1), w, r, r);
}

DiagramSum F_p(int m, int p) {
    if (p < 0 || p > m + 1) throw std::out_of_range("F_p: need 0 <= p <= m+1");
    return tensor(symmetrizer(p, 1), symmetrizer(m + 1 - p, 1));
}

Diagram e_nested(int r, int p, int j) {
    std::vector<std::pair<int, int>> caps;
    for (int t = 0; t < j; ++t) {
        const int a = p - 1 - t, b = p + t;
        if (a < 0 || b >= r) throw std::out_of_range("e_nested: arcs leave the row");
        caps.emplace_back(a, b);
    }
    return pairs_diagram(r, caps);
}

Rational c_coefficient(int m, int i, int j) {
    return 1 / (factorial(i - j) * factorial(m + 1 - i - j) * factorial(j) * factorial(j));
}

DiagramSum E_p_formula(int m, int p) {
    if (m < 0 || p < 0 || p > m + 1) throw std::out_of_range("E_p_formula: need 0 <= p <= m+1");
    const int r = m + 1;
    const DiagramSum F = F_p(m, p);
    DiagramSum out(r, r);
    for (int j = 0; j <= std::min(p, r - p); ++j) {
        const Rational c = (j % 2 ? -1 : 1) * c_coefficient(m, p, j);
        out += chain({F, DiagramSum(e_nested(r, p, j)), F}) * Poly(c);
    }
    return out;
}

// ---- symplectic kernel -----------------------------------------------------

Diagram E_of_k(int n, int k) {
    std::vector<std::pair<int, int>> caps;
    for (int j = 1; j <= k; ++j) caps.emplace_back(n + 1 - 2 * j, n + 2 - 2 * j);
    if (!caps.empty() && caps.back().first < 0) throw std::out_of_range("E_of_k: too many caps");
    return pairs_diagram(n + 1, caps);
}

Rational a_coefficient(int n, int k) {
    const Rational t = Rational(1 << k) * factorial(k);
    return 1 / (t * t * factorial(n + 1 - 2 * k));
}

DiagramSum Phi(int n) {
    if (n < 0) throw std::out_of_range("Phi: negative n");
    const DiagramSum S = symmetrizer(n + 1, -1);
    DiagramSum out(n + 1, n + 1);
    for (int k = 0; k <= (n + 1) / 2; ++k)
        out += chain({S, DiagramSum(E_of_k(n, k)), S}) * Poly(a_coefficient(n, k));
    return out;
}

DiagramSum D_pq(int n, int p, int q) {
    if (q < 0 || q > p || p > n) throw std::out_of_range("D_pq: need 0 <= q <= p <= n");
    const int r = 2 * n + 1;
    const int k = r - p + q;
    const int straight_top = r - 2 * (p - q) - q;
    // legs: Σ bottom 0..r-1, Σ top r..2r-1; externals: bottom 2r+i, top 2r+k+j
    const int B = 2 * r, T = 2 * r + k;
    std::vector<int> w(static_cast<std::size_t>(2 * r + 2 * k));
    for (int i = 0; i < r - p; ++i) link(w, i, B + i);
    for (int a = 0; a < p; ++a) link(w, r - p + a, T + (k - 1 - a));
    for (int j = 0; j < straight_top; ++j) link(w, r + j, T + j);
    for (int b = 0; b < p - q; ++b) link(w, r + straight_top + b, r + straight_top + 2 * (p - q) - 1 - b);
    for (int c = 0; c < q; ++c) link(w, r + straight_top + 2 * (p - q) + c, B + (k - 1 - c));
    return glue(symmetrizer(r, -1), w, k, k);
}

Rational phi_binomial_sum(int n) {
    Rational s = 0;
    for (int k = 0; k <= (n + 1) / 2; ++k) {
        if (2 * n - 2 * k < n - 1) continue;
        s += (k % 2 ? -1 : 1) * binomial(n, k) * binomial(2 * n - 2 * k, n - 1);
    }
    return s;
}

Rational phi_trace_formula(int n) {
    Rational s = 0;
    for (int k = 0; k <= (n + 1) / 2; ++k) {
        if (k > n) continue;
        s += a_coefficient(n, k) * (k % 2 ? -1 : 1) * power(Rational(4), k) * factorial(k) *
             factorial(2 * n - 2 * k) / factorial(n - k);
    }
    return Rational(n) * s;
}

// ---- spans and kernels -----------------------------------------------------

DiagramBasis::DiagramBasis(int k, int ell, bool permutations_only) : k_(k), ell_(ell) {
    if (permutations_only) {
        if (k != ell) throw ValencyError("permutation basis needs k == l");
        for (const auto& p : all_permutations(k)) list_.push_back(perm_diagram(p));
        std::sort(list_.begin(), list_.end());
    } else {
        list_ = enumerate_diagrams(k, ell);
    }
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

DiagramBasis DiagramBasis::from_list(int k, int ell, std::vector<Diagram> list) {
    DiagramBasis b(0, 0, false);
    b.k_ = k;
    b.ell_ = ell;
    b.list_ = std::move(list);
    b.index_.clear();
    for (std::size_t i = 0; i < b.list_.size(); ++i) b.index_.emplace(b.list_[i], i);
    return b;
}

std::optional<std::size_t> DiagramBasis::find(const Diagram& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SparseVec DiagramBasis::vectorize(const DiagramSum& x, const Rational& delta0) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [d, p] : x.terms()) {
        const Rational c = p.eval(delta0);
        if (c == 0) continue;
        auto i = find(d);
        if (!i) throw std::invalid_argument("vectorize: " + to_string(d) + " is outside the basis");
        acc[*i] += c;
    }
    return SparseVec::from_map(acc);
}

DiagramSum DiagramBasis::sum_of(const SparseVec& v) const {
    DiagramSum out(k_, ell_);
    for (const auto& [i, c] : v.entries()) out.add_term(list_[i], Poly(c));
    return out;
}

namespace {

// v·D or D·v in the basis, δ specialised
SparseVec multiply(const DiagramBasis& basis, const SparseVec& v, const Diagram& d, bool d_on_left,
                   const Rational& delta0) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, c] : v.entries()) {
        const ScaledDiagram s = d_on_left ? compose(d, basis.at(i)) : compose(basis.at(i), d);
        auto j = basis.find(s.diagram);
        if (!j) throw std::invalid_argument("ideal product left the basis");
        acc[*j] += c * power(delta0, s.loops);
    }
    return SparseVec::from_map(acc);
}

} // namespace

SpanResult algebra_ideal_span(const std::vector<DiagramSum>& generators, const DiagramBasis& basis,
                              const Rational& delta0) {
    if (basis.k() != basis.ell()) throw ValencyError("algebra ideal needs an endomorphism basis");
    if (basis.k() > 5) throw BudgetError("algebra_ideal_span: r must be at most 5");
    // basis diagrams span the algebra, so the ideal is span{a·g·b} over basis a, b
    Echelon left(basis.size());
    for (const DiagramSum& g : generators) {
        const SparseVec v = basis.vectorize(g, delta0);
        if (v.empty()) continue;
        for (const Diagram& d : basis.diagrams()) {
            left.insert(multiply(basis, v, d, true, delta0));
            if (left.rank() == basis.size()) break;
        }
    }
    Echelon both(basis.size());
    for (const SparseVec& l : left.basis())
        for (const Diagram& d : basis.diagrams()) {
            both.insert(multiply(basis, l, d, false, delta0));
            if (both.rank() == basis.size()) return {both.basis()};
        }
    return {both.basis()};
}

namespace {

// node types for oriented wirings: an edge joins a 'T' node to an 'H' node
std::vector<char> wiring_types(const DiagramSum& x, const OrientedFrame& f) {
    const int a = x.k(), b = x.ell();
    if (length(f.gen_source) != a || length(f.gen_target) != b)
        throw ValencyError("oriented frame does not match the generator");
    std::vector<char> t;
    // generator legs: a tail of the generator's arc receives the path, so it is an H end
    for (char c : f.gen_source) t.push_back(c == '-' ? 'H' : 'T');
    for (char c : f.gen_target) t.push_back(c == '+' ? 'H' : 'T');
    // externals: a tail of the result starts the path
    for (char c : f.source) t.push_back(c == '-' ? 'T' : 'H');
    for (char c : f.target) t.push_back(c == '+' ? 'T' : 'H');
    return t;
}

std::uint64_t double_factorial_odd(int n) {
    std::uint64_t out = 1;
    for (int i = n - 1; i > 1; i -= 2) out *= static_cast<std::uint64_t>(i);
    return out;
}

} // namespace

namespace {

// partner array of at most 16 nodes packed 4 bits per node
std::uint64_t pack(const int* partner, int n) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key = (key << 4) | static_cast<std::uint64_t>(partner[i]);
    return key;
}

// glue without allocation; the hot loop of tensor_ideal_span
class FastGlue {
public:
    FastGlue(const std::vector<std::pair<Diagram, Rational>>& terms, const DiagramBasis& basis,
             const Rational& delta0)
        : k_(basis.k()), ell_(basis.ell()) {
        for (const auto& [d, c] : terms) {
            legs_ = d.nodes();
            partners_.insert(partners_.end(), d.partners().begin(), d.partners().end());
            coeffs_.push_back(c);
        }
        for (std::size_t i = 0; i < basis.size(); ++i)
            index_.emplace(pack(basis.at(i).partners().data(), basis.at(i).nodes()), i);
        Rational p = 1;
        for (int i = 0; i <= legs_; ++i, p *= delta0) powers_.push_back(p);
        // machine integers when every coefficient and power is a small integer
        small_ = true;
        for (const Rational& c : coeffs_)
            small_ = small_ && c.get_den() == 1 && abs(c.get_num()) < (1L << 20);
        for (const Rational& q : powers_) small_ = small_ && q.get_den() == 1 && abs(q.get_num()) < (1L << 20);
        if (small_) {
            for (const Rational& c : coeffs_) icoeffs_.push_back(c.get_num().get_si());
            for (const Rational& q : powers_) ipowers_.push_back(q.get_num().get_si());
            iacc_.assign(basis.size(), 0);
        }
        seen_.resize(static_cast<std::size_t>(legs_));
        out_.resize(static_cast<std::size_t>(k_ + ell_));
        acc_.assign(basis.size(), Rational(0));
    }

    SparseVec evaluate(const std::vector<int>& w) {
        const int L = legs_, total = L + k_ + ell_;
        touched_.clear();
        for (std::size_t t = 0; t < coeffs_.size(); ++t) {
            const int* x = partners_.data() + t * static_cast<std::size_t>(L);
            std::fill(seen_.begin(), seen_.end(), 0);
            std::fill(out_.begin(), out_.end(), -1);
            for (int e = L; e < total; ++e) {
                if (out_[static_cast<std::size_t>(e - L)] >= 0) continue;
                int cur = w[static_cast<std::size_t>(e)];
                while (cur < L) {
                    seen_[static_cast<std::size_t>(cur)] = 1;
                    const int other = x[cur];
                    seen_[static_cast<std::size_t>(other)] = 1;
                    cur = w[static_cast<std::size_t>(other)];
                }
                out_[static_cast<std::size_t>(e - L)] = cur - L;
                out_[static_cast<std::size_t>(cur - L)] = e - L;
            }
            int loops = 0;
            for (int u = 0; u < L; ++u) {
                if (seen_[static_cast<std::size_t>(u)]) continue;
                ++loops;
                int cur = u;
                do {
                    seen_[static_cast<std::size_t>(cur)] = 1;
                    const int other = x[cur];
                    seen_[static_cast<std::size_t>(other)] = 1;
                    cur = w[static_cast<std::size_t>(other)];
                } while (cur != u);
            }
            auto it = index_.find(pack(out_.data(), k_ + ell_));
            if (it == index_.end()) throw std::invalid_argument("tensor ideal left the basis");
            const std::size_t i = it->second;
            if (small_) {
                if (iacc_[i] == 0) touched_.push_back(i);
                iacc_[i] += icoeffs_[t] * ipowers_[static_cast<std::size_t>(loops)];
            } else {
                if (acc_[i] == 0) touched_.push_back(i);
                acc_[i] += coeffs_[t] * powers_[static_cast<std::size_t>(loops)];
            }
        }
        std::sort(touched_.begin(), touched_.end());
        touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
        SparseVec v;
        for (std::size_t i : touched_) {
            if (small_) {
                if (iacc_[i] != 0) v.push_back(i, Rational(static_cast<long>(iacc_[i])));
                iacc_[i] = 0;
            } else {
                if (acc_[i] != 0) v.push_back(i, acc_[i]);
                acc_[i] = 0;
            }
        }
        return v;
    }

private:
    int k_, ell_, legs_ = 0;
    std::vector<int> partners_;
    std::vector<Rational> coeffs_, powers_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<char> seen_;
    std::vector<int> out_;
    std::vector<Rational> acc_;
    std::vector<std::size_t> touched_;
    bool small_ = false;
    std::vector<std::int64_t> icoeffs_, ipowers_, iacc_;
};

} // namespace

SpanResult tensor_ideal_span(const DiagramSum& generator, const DiagramBasis& basis, const Rational& delta0,
                             const std::optional<OrientedFrame>& frame) {
    const int L = generator.k() + generator.ell();
    const int k = basis.k(), ell = basis.ell();
    const int total = L + k + ell;
    if (total % 2) return {};
    if (k + ell > 16) throw BudgetError("tensor_ideal_span: at most 16 external nodes");
    const auto terms = specialised_terms(generator, delta0);
    if (terms.empty() || basis.size() == 0) return {};
    const std::uint64_t work = double_factorial_odd(total) * terms.size();
    if (work > 500'000'000ULL) throw BudgetError("tensor_ideal_span: too many wirings");

    std::vector<char> types;
    if (frame) types = wiring_types(generator, *frame);

    if (total == 0) {
        FastGlue fast(terms, basis, delta0);
        Echelon span(basis.size());
        span.insert(fast.evaluate({}));
        return {span.basis()};
    }
    // one task per partner of node 0; each keeps its own echelon, merged in order
    std::vector<int> firsts;
    for (int j = 1; j < total; ++j)
        if (!frame || types[0] != types[static_cast<std::size_t>(j)]) firsts.push_back(j);
    std::vector<std::vector<SparseVec>> found(firsts.size());
    std::atomic<bool> full{false};
    parallel_for(firsts.size(), [&](std::size_t task) {
        FastGlue fast(terms, basis, delta0);
        Echelon span(basis.size());
        std::vector<int> w(static_cast<std::size_t>(total), -1);
        link(w, 0, firsts[task]);
        auto visit = [&](auto&& self) -> void {
            if (full) return;
            int first = -1;
            for (int i = 0; i < total; ++i)
                if (w[static_cast<std::size_t>(i)] < 0) {
                    first = i;
                    break;
                }
            if (first < 0) {
                SparseVec v = fast.evaluate(w);
                if (!v.empty() && !span.contains(v)) {
                    span.insert(v);
                    if (span.rank() == basis.size()) full = true;
                }
                return;
            }
            for (int j = first + 1; j < total; ++j) {
                if (w[static_cast<std::size_t>(j)] >= 0) continue;
                if (frame && types[static_cast<std::size_t>(first)] == types[static_cast<std::size_t>(j)]) continue;
                link(w, first, j);
                self(self);
                w[static_cast<std::size_t>(first)] = w[static_cast<std::size_t>(j)] = -1;
            }
        };
        visit(visit);
        found[task] = span.basis();
    });
    Echelon span(basis.size());
    for (const auto& part : found)
        for (const SparseVec& v : part) span.insert(v);
    return {span.basis()};
}

namespace {

struct FunctorImages {
    DiagramBasis basis;
    std::vector<SparseVec> images;
};

FunctorImages functor_images(const GroupSpec& g, const Signs& source, const Signs& target) {
    if (g.kind == GroupKind::GL) {
        std::vector<Diagram> list;
        std::vector<SparseVec> images;
        for (const OrientedDiagram& d : enumerate_oriented(source, target)) {
            list.push_back(d.diagram());
            images.push_back(functor(g, d).flatten());
        }
        return {DiagramBasis::from_list(length(source), length(target), std::move(list)), std::move(images)};
    }
    for (char c : source + target)
        if (c != '+') throw std::invalid_argument(g.name() + " uses words in V only");
    DiagramBasis basis(length(source), length(target));
    std::vector<SparseVec> images;
    for (const Diagram& d : basis.diagrams()) images.push_back(functor(g, d).flatten());
    return {std::move(basis), std::move(images)};
}

std::size_t flat_size(const GroupSpec& g, const Signs& source, const Signs& target) {
    return tensor_dim(g.dim(), source.size()) * tensor_dim(g.dim(), target.size());
}

SpanResult nullspace_of(const FunctorImages& fi) {
    std::map<std::size_t, std::map<std::size_t, Rational>> rows;
    for (std::size_t j = 0; j < fi.images.size(); ++j)
        for (const auto& [i, c] : fi.images[j].entries()) rows[i][j] = c;
    Echelon e(fi.basis.size());
    for (const auto& [i, row] : rows) e.insert(SparseVec::from_map(row));
    Echelon k(fi.basis.size());
    for (const SparseVec& v : e.nullspace()) k.insert(v);
    return {k.basis()};
}

} // namespace

SpanResult kernel_basis(const GroupSpec& g, const Signs& source, const Signs& target) {
    return nullspace_of(functor_images(g, source, target));
}

SpanResult kernel_basis(const GroupSpec& g, int k, int ell) {
    return kernel_basis(g, plus_word(k), plus_word(ell));
}

std::size_t functor_rank(const GroupSpec& g, const Signs& source, const Signs& target) {
    const FunctorImages fi = functor_images(g, source, target);
    return rank_of(fi.images, flat_size(g, source, target));
}

Report verify_fft(const GroupSpec& g, const Signs& source, const Signs& target) {
    Report rep;
    rep.name = "fft " + g.name() + " " + (source.empty() ? "∅" : source) + "→" + (target.empty() ? "∅" : target);
    const std::size_t rank = functor_rank(g, source, target);
    const std::size_t oracle = equivariant_dim(g, source, target);
    rep.add("rank F = dim Hom_G", std::to_string(rank), std::to_string(oracle), rank == oracle);
    return rep;
}

Report verify_fft(const GroupSpec& g, int k, int ell) { return verify_fft(g, plus_word(k), plus_word(ell)); }

Report verify_sft(const GroupSpec& g, int r) {
    if (r < 0) throw std::out_of_range("verify_sft: negative r");
    Report rep;
    rep.name = "sft " + g.name() + " r=" + std::to_string(r);
    const Signs word = plus_word(r);

    std::optional<DiagramSum> gen;
    std::string gen_name;
    Rational delta0 = g.sdim();
    bool perms = false;
    switch (g.kind) {
    case GroupKind::O:
        if (g.odd != 0) throw std::invalid_argument("verify_sft: O(m) expected");
        gen_name = "E_" + std::to_string((g.m + 1) / 2);
        if (r >= g.m + 1) gen = E_p(g.m, (g.m + 1) / 2);
        break;
    case GroupKind::Sp:
        gen_name = "Φ(" + std::to_string(g.odd / 2) + ")";
        if (r >= g.odd / 2 + 1) gen = Phi(g.odd / 2);
        break;
    case GroupKind::GL:
        gen_name = "e(" + std::to_string(g.m) + "," + std::to_string(g.odd) + ")";
        perms = true;
        if (r >= (g.m + 1) * (g.odd + 1)) gen = young_idempotent(g.m, g.odd).element;
        break;
    default:
        throw std::invalid_argument("verify_sft: no algebra generator for " + g.name());
    }
    if (gen && gen->k() < r) *gen = tensor(*gen, DiagramSum(identity(r - gen->k())));

    const SpanResult ker = kernel_basis(g, word, word);
    const DiagramBasis basis(r, r, perms);
    SpanResult ideal;
    if (gen) ideal = algebra_ideal_span({*gen}, basis, delta0);

    rep.add("dim Ker F = dim ⟨" + gen_name + "⟩", std::to_string(ker.dim()), std::to_string(ideal.dim()),
            ker.dim() == ideal.dim());
    bool inside = true;
    for (const SparseVec& v : ideal.basis) {
        const DiagramSum x = basis.sum_of(v);
        TensorOperator img = TensorOperator::zero(g.dim(), word, word);
        if (g.kind == GroupKind::GL) {
            for (const auto& [d, c] : x.terms())
                img += c.coeff(0) * functor(g, OrientedDiagram::from_signs(d, word, word));
        } else {
            img = functor(g, x);
        }
        inside = inside && img.is_zero();
    }
    rep.add("⟨" + gen_name + "⟩ ⊆ Ker F", inside ? "F = 0 on ideal" : "F ≠ 0 on ideal", "F = 0 on ideal", inside);
    return rep;
}

} // namespace bk
