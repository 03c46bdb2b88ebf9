#pragma once

#include "brauer/functor.hpp"
#include "brauer/report.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace bk {

// ---- gluing --------------------------------------------------------------

// Plugs every term of x into a wiring: a perfect matching (partner array) on
// x's nodes followed by k bottom and ell top external nodes. Closed
// components that never reach an external node contribute δ each.
DiagramSum glue(const DiagramSum& x, const std::vector<int>& wiring, int k, int ell);
ScaledDiagram glue(const Diagram& x, const std::vector<int>& wiring, int k, int ell);

// ---- Young symmetrizers ----------------------------------------------------

struct YoungRectangleIdempotent {
    int m = 0, ell = 0;
    // tableau rows are {i(ℓ+1), …, i(ℓ+1)+ℓ}, 0-based
    std::vector<std::vector<int>> rows, columns;
    DiagramSum element; // α⁺(R)α⁻(C)
    Rational kappa;     // e² = κe
    std::size_t row_group_order = 0, column_group_order = 0;
};

// size cap (m+1)(ℓ+1) ≤ 8
YoungRectangleIdempotent young_idempotent(int m, int ell);
// full product check e² = κe; throws BudgetError past |e|² > 10⁷
bool is_quasi_idempotent(const YoungRectangleIdempotent& y);

// ---- orthogonal kernel -----------------------------------------------------

// E_p in B_{m+1}^{m+1}: Σ_{+1}(m+1) with its m+1−p rightmost strands bent round
DiagramSum E_p(int m, int p);
// Σ_j (−1)^j c_p(j) F_p e_p(j) F_p
DiagramSum E_p_formula(int m, int p);
// F_p = A(1,p)A(p+1,m+1)
DiagramSum F_p(int m, int p);
// e_p(j) = e_{p,p+1} e_{p−1,p+2} ⋯ e_{p−j+1,p+j} in B_r^r
Diagram e_nested(int r, int p, int j);
Rational c_coefficient(int m, int i, int j);

// ---- symplectic kernel -----------------------------------------------------

// E(k) = Π_{j=1..k} e_{n+2−2j} in B_{n+1}^{n+1}
Diagram E_of_k(int n, int k);
Rational a_coefficient(int n, int k);
// Σ_k a_k Σ(n+1)E(k)Σ(n+1), Σ = Σ_{−1}
DiagramSum Phi(int n);
// Σ(2n+1) with q strands bent down, p bent up and p−q caps on top
DiagramSum D_pq(int n, int p, int q);
// Σ_k (−1)^k C(n,k) C(2n−2k, n−1)
Rational phi_binomial_sum(int n);
// the same trace through the a_k: n·Σ a_k (−1)^k 4^k k!(2n−2k)!/(n−k)!
Rational phi_trace_formula(int n);

// ---- spans and kernels -----------------------------------------------------

// basis diagrams of B_k^ℓ, or only permutations, with index lookup
class DiagramBasis {
public:
    DiagramBasis(int k, int ell, bool permutations_only = false);
    static DiagramBasis from_list(int k, int ell, std::vector<Diagram> list);
    int k() const { return k_; }
    int ell() const { return ell_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<Diagram>& diagrams() const { return list_; }
    const Diagram& at(std::size_t i) const { return list_[i]; }
    std::optional<std::size_t> find(const Diagram& d) const;
    // coefficients specialised at δ₀; throws if x leaves the basis
    SparseVec vectorize(const DiagramSum& x, const Rational& delta0) const;
    DiagramSum sum_of(const SparseVec& v) const;

private:
    int k_ = 0, ell_ = 0;
    std::vector<Diagram> list_;
    std::unordered_map<Diagram, std::size_t> index_;
};

struct SpanResult {
    std::vector<SparseVec> basis; // rows in reduced echelon form over the diagram basis
    std::size_t dim() const { return basis.size(); }
};

// two-sided ideal of B_r^r(δ₀) (or ℚSym_r) generated by the given elements
SpanResult algebra_ideal_span(const std::vector<DiagramSum>& generators, const DiagramBasis& basis,
                              const Rational& delta0);

// 𝒥_k^ℓ: every way of wiring one copy of the generator and the k+ℓ external
// nodes together. Optional signs restrict to oriented wirings: generator
// source/target and the external source/target.
struct OrientedFrame {
    Signs gen_source, gen_target, source, target;
};
SpanResult tensor_ideal_span(const DiagramSum& generator, const DiagramBasis& basis, const Rational& delta0,
                             const std::optional<OrientedFrame>& frame = std::nullopt);

// nullspace of the functor on the basis diagrams; GL needs the signs
SpanResult kernel_basis(const GroupSpec& g, int k, int ell);
SpanResult kernel_basis(const GroupSpec& g, const Signs& source, const Signs& target);
// rank of the functor images on the basis
std::size_t functor_rank(const GroupSpec& g, const Signs& source, const Signs& target);

// rank of F on the diagram basis against the equivariant oracle
Report verify_fft(const GroupSpec& g, const Signs& source, const Signs& target);
Report verify_fft(const GroupSpec& g, int k, int ell);
// Ker F on End(V^{⊗r}) against the ideal of the named generator: E_ℓ for O,
// Φ for Sp, e(m,ℓ) for GL; dimension match plus ideal ⊆ kernel
Report verify_sft(const GroupSpec& g, int r);

} // namespace bk
