#pragma once

#include "brauer/functor.hpp"
#include "brauer/report.hpp"

#include <utility>
#include <vector>

namespace bk {

// Δ_m realised for SO(m): Λ = Σ_{+1}(m)(e₁⊗…⊗e_m) and its adjoint
struct DeltaGenerator {
    int m = 0;
    GroupSpec group;
    TensorOperator lambda;      // K → V^{⊗m}
    TensorOperator lambda_star; // V^{⊗m} → K
};

DeltaGenerator build_delta(int m);

// Brauer part plus one-Δ part Σ c·D∘(Δ_m⊗I^{⊗s}), D of valency (m+s, t)
struct EnhancedMorphismSample {
    int s = 0, t = 0;
    DiagramSum brauer_part;
    std::vector<std::pair<Diagram, Rational>> delta_part;
};

TensorOperator functor(const DeltaGenerator& delta, const EnhancedMorphismSample& x);
// F(D∘(Δ_m⊗I^{⊗s}))
TensorOperator delta_diagram_image(const DeltaGenerator& delta, const Diagram& d, int s);

// ways of reading the cycle relation between two Δ blocks
enum class CycleReading {
    AsPrinted,        // Δ⊗I⊗Δ = (c⊗I^m)(Δ⊗Δ⊗I)
    AsPrintedInverse, // same with c⁻¹
    AsDrawn,          // Δ⊗I⊗Δ = (c⊗I^m)(I⊗Δ⊗Δ)
    AsDrawnInverse,   // same with c⁻¹
};
std::string to_string(CycleReading r);
// the (m+1)-cycle (m+1, m, …, 1) as a permutation diagram
Diagram cycle_diagram(int m, bool inverse);
bool cycle_relation_holds(const DeltaGenerator& delta, CycleReading reading);

// harmonicity, sign, Δ∘Δ* = Σ_m and the cycle relation, plus * images
Report check_relations(int m);

struct ForcedParameters {
    Poly product_rule; // δ(δ−1)…(δ−m+1) − m!
    Poly f_m;          // (δ−(m−1))…(δ−1) − (m−1)!
    std::vector<Rational> product_roots, f_roots, common;
};
ForcedParameters forced_parameters(int m);

// F(Σ_{+1}(m+1)) = 0 on SO(m)
bool sigma_vanishing(int m);

struct FullnessResult {
    std::size_t brauer_rank = 0, delta_rank = 0, combined_rank = 0, oracle_dim = 0;
    bool pass() const { return brauer_rank + delta_rank == combined_rank && combined_rank == oracle_dim; }
};
FullnessResult fullness_check(int m, int s, int t);

} // namespace bk
