#include "brauer/enhanced.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bk {

namespace {

std::string plus_word(int n) { return std::string(static_cast<std::size_t>(n), '+'); }

TensorOperator id_op(int d, int n) { return TensorOperator::identity(d, plus_word(n)); }

// index of e_{i₀}⊗…⊗e_{i_{n-1}}, leftmost most significant
std::size_t tensor_index(int d, const std::vector<int>& idx) {
    std::size_t out = 0;
    for (int i : idx) out = out * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
    return out;
}

} // namespace

DeltaGenerator build_delta(int m) {
    if (m < 2) throw std::invalid_argument("build_delta: need m >= 2");
    DeltaGenerator out;
    out.m = m;
    out.group = GroupSpec::SO(m);
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    const TensorOperator e = TensorOperator(m, "", plus_word(m), {SparseVec::unit(tensor_index(m, idx))});
    out.lambda = compose(functor(out.group, symmetrizer(m, 1)), e);
    out.lambda_star = adjoint(out.group, out.lambda);
    return out;
}

TensorOperator delta_diagram_image(const DeltaGenerator& delta, const Diagram& d, int s) {
    if (d.k() != delta.m + s) throw ValencyError("delta part needs a diagram from m+s nodes");
    return compose(functor(delta.group, d), tensor(delta.lambda, id_op(delta.m, s)));
}

TensorOperator functor(const DeltaGenerator& delta, const EnhancedMorphismSample& x) {
    TensorOperator out = TensorOperator::zero(delta.m, plus_word(x.s), plus_word(x.t));
    if (!x.brauer_part.is_zero()) {
        if (x.brauer_part.k() != x.s || x.brauer_part.ell() != x.t)
            throw ValencyError("brauer part has the wrong valency");
        out += functor(delta.group, x.brauer_part);
    }
    for (const auto& [d, c] : x.delta_part) {
        if (d.ell() != x.t) throw ValencyError("delta part has the wrong target");
        out += c * delta_diagram_image(delta, d, x.s);
    }
    return out;
}

std::string to_string(CycleReading r) {
    switch (r) {
    case CycleReading::AsPrinted: return "(c⊗I^m)(Δ⊗Δ⊗I)";
    case CycleReading::AsPrintedInverse: return "(c⁻¹⊗I^m)(Δ⊗Δ⊗I)";
    case CycleReading::AsDrawn: return "(c⊗I^m)(I⊗Δ⊗Δ)";
    case CycleReading::AsDrawnInverse: return "(c⁻¹⊗I^m)(I⊗Δ⊗Δ)";
    }
    return "?";
}

Diagram cycle_diagram(int m, bool inverse) {
    // c sends 1 ↦ m+1 and i ↦ i−1 otherwise (1-based)
    const int n = m + 1;
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i == 0 ? n - 1 : i - 1;
    if (inverse) {
        std::vector<int> inv(img.size());
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(img[static_cast<std::size_t>(i)])] = i;
        img = inv;
    }
    return perm_diagram(img);
}

namespace {

// F(perm_diagram(img) ⊗ I^{⊗rest}) ∘ op without building the permutation matrix;
// the factor in slot i moves to slot img[i]
TensorOperator permute_codomain(const TensorOperator& op, const std::vector<int>& img) {
    const std::size_t d = static_cast<std::size_t>(op.d());
    const std::size_t len = op.codomain().size();
    std::vector<SparseVec> cols;
    std::vector<std::size_t> digits(len), moved(len);
    for (const SparseVec& col : op.columns()) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [i, c] : col.entries()) {
            std::size_t x = i;
            for (std::size_t f = len; f-- > 0; x /= d) digits[f] = x % d;
            moved = digits;
            for (std::size_t f = 0; f < img.size(); ++f) moved[static_cast<std::size_t>(img[f])] = digits[f];
            std::size_t y = 0;
            for (std::size_t f = 0; f < len; ++f) y = y * d + moved[f];
            acc[y] += c;
        }
        cols.push_back(SparseVec::from_map(acc));
    }
    return TensorOperator(op.d(), op.domain(), op.codomain(), std::move(cols));
}

TensorOperator cycle_rhs(const DeltaGenerator& dg, CycleReading reading) {
    const int m = dg.m;
    const bool inv = reading == CycleReading::AsPrintedInverse || reading == CycleReading::AsDrawnInverse;
    const bool drawn = reading == CycleReading::AsDrawn || reading == CycleReading::AsDrawnInverse;
    const TensorOperator I = id_op(m, 1);
    const TensorOperator below = drawn ? tensor(I, tensor(dg.lambda, dg.lambda))
                                       : tensor(tensor(dg.lambda, dg.lambda), I);
    const Diagram c = cycle_diagram(m, inv);
    std::vector<int> img(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) img[static_cast<std::size_t>(i)] = c.partner(i) - (m + 1);
    return permute_codomain(below, img);
}

TensorOperator cycle_lhs(const DeltaGenerator& dg) {
    return tensor(tensor(dg.lambda, id_op(dg.m, 1)), dg.lambda);
}

// I^{⊗r} ⊗ x ⊗ I^{⊗rest}
TensorOperator pad(const GroupSpec& g, int r, const Diagram& x, int rest) {
    return functor(g, tensor(tensor(identity(r), x), identity(rest)));
}

// reflection diag(−1,1,…,1) applied to every tensor factor
TensorOperator reflect(const TensorOperator& op) {
    const int d = op.d();
    auto sign = [d](std::size_t index, std::size_t len) {
        int s = 1;
        for (std::size_t f = 0; f < len; ++f, index /= static_cast<std::size_t>(d))
            if (index % static_cast<std::size_t>(d) == 0) s = -s;
        return s;
    };
    std::vector<SparseVec> cols;
    for (std::size_t j = 0; j < op.cols(); ++j) {
        SparseVec v;
        for (const auto& [i, c] : op.columns()[j].entries())
            v.push_back(i, c * sign(i, op.codomain().size()) * sign(j, op.domain().size()));
        cols.push_back(std::move(v));
    }
    return TensorOperator(d, op.domain(), op.codomain(), std::move(cols));
}

} // namespace

bool cycle_relation_holds(const DeltaGenerator& delta, CycleReading reading) {
    return cycle_lhs(delta) == cycle_rhs(delta, reading);
}

Report check_relations(int m) {
    if (m < 2 || m > 4) throw std::invalid_argument("check_relations: need 2 <= m <= 4");
    const DeltaGenerator dg = build_delta(m);
    const GroupSpec& g = dg.group;
    const std::string M = std::to_string(m);
    Report rep;
    rep.name = "enhanced m=" + M;

    const TensorOperator ss = compose(dg.lambda_star, dg.lambda);
    const Rational mf = factorial(m);
    rep.add("Δ*∘Δ = m!", to_string(ss.entry(0, 0)), to_string(mf),
            ss.rows() == 1 && ss.cols() == 1 && ss.entry(0, 0) == mf);
    rep.add_equal("Δ∘Δ* = F(Σ_" + M + ")", compose(dg.lambda, dg.lambda_star) == functor(g, symmetrizer(m, 1)));

    rep.add_equal("Λ is SO(" + M + ")-invariant", is_equivariant(g, dg.lambda));
    rep.add_equal("reflection flips Λ", reflect(dg.lambda) == Rational(-1) * dg.lambda);

    for (int r = 0; r <= m - 2; ++r) {
        const std::string R = std::to_string(r);
        const TensorOperator a = compose(pad(g, r, cap(), m - r - 2), dg.lambda);
        rep.add_equal("harmonicity r=" + R, a.is_zero());
        const TensorOperator u = compose(dg.lambda_star, pad(g, r, cup(), m - r - 2));
        rep.add_equal("harmonicity* r=" + R, u.is_zero());
        const TensorOperator x = compose(pad(g, r, cross(), m - r - 2), dg.lambda);
        rep.add_equal("X sign r=" + R, x == Rational(-1) * dg.lambda);
        const TensorOperator xs = compose(dg.lambda_star, pad(g, r, cross(), m - r - 2));
        rep.add_equal("X sign* r=" + R, xs == Rational(-1) * dg.lambda_star);
    }

    // the cycle relation needs V^{⊗(2m+1)}; m = 4 is past the entry budget
    if (m <= 3) {
        const TensorOperator lhs = cycle_lhs(dg);
        const TensorOperator rhs = cycle_rhs(dg, CycleReading::AsDrawn);
        rep.add_equal("cycle relation " + to_string(CycleReading::AsDrawn), lhs == rhs);
        // * image built from Λ* and the matrix of c⁻¹, not from transposes
        const TensorOperator I = id_op(m, 1);
        const TensorOperator lhs_star = tensor(tensor(dg.lambda_star, I), dg.lambda_star);
        const TensorOperator rhs_star =
            compose(tensor(I, tensor(dg.lambda_star, dg.lambda_star)),
                    functor(g, tensor(cycle_diagram(m, true), identity(m))));
        rep.add_equal("cycle relation*", lhs_star == rhs_star);
    }
    return rep;
}

ForcedParameters forced_parameters(int m) {
    if (m < 1) throw std::invalid_argument("forced_parameters: need m >= 1");
    ForcedParameters out;
    Poly prod(1);
    for (int j = 0; j < m; ++j) prod *= Poly::delta() - Poly(j);
    out.product_rule = prod - Poly(factorial(m));
    Poly f(1);
    for (int j = 1; j <= m - 1; ++j) f *= Poly::delta() - Poly(j);
    out.f_m = f - Poly(factorial(m - 1));
    out.product_roots = out.product_rule.rational_roots();
    out.f_roots = out.f_m.rational_roots();
    std::sort(out.product_roots.begin(), out.product_roots.end());
    std::sort(out.f_roots.begin(), out.f_roots.end());
    std::set_intersection(out.product_roots.begin(), out.product_roots.end(), out.f_roots.begin(),
                          out.f_roots.end(), std::back_inserter(out.common));
    return out;
}

bool sigma_vanishing(int m) {
    if (m < 1) throw std::invalid_argument("sigma_vanishing: need m >= 1");
    return functor(GroupSpec::SO(m), symmetrizer(m + 1, 1)).is_zero();
}

FullnessResult fullness_check(int m, int s, int t) {
    if (m < 2) throw std::invalid_argument("fullness_check: need m >= 2");
    const DeltaGenerator dg = build_delta(m);
    const GroupSpec& g = dg.group;
    const std::size_t ncols = tensor_dim(m, static_cast<std::size_t>(s)) * tensor_dim(m, static_cast<std::size_t>(t));
    check_budget(ncols, "fullness_check");

    FullnessResult out;
    Echelon brauer(ncols), delta(ncols), both(ncols);
    if ((s + t) % 2 == 0)
        for (const Diagram& d : enumerate_diagrams(s, t)) {
            const SparseVec v = functor(g, d).flatten();
            brauer.insert(v);
            both.insert(v);
        }
    if ((m + s + t) % 2 == 0)
        for (const Diagram& d : enumerate_diagrams(m + s, t)) {
            const SparseVec v = delta_diagram_image(dg, d, s).flatten();
            delta.insert(v);
            both.insert(v);
        }
    out.brauer_rank = brauer.rank();
    out.delta_rank = delta.rank();
    out.combined_rank = both.rank();
    out.oracle_dim = equivariant_dim(g, plus_word(s), plus_word(t));
    return out;
}

} // namespace bk
