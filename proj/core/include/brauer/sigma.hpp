#pragma once

#include "brauer/dsum.hpp"

#include <string>
#include <vector>

namespace bk {

// One side-by-side identity instance: holds iff lhs == rhs exactly.
struct IdentityCheck {
    std::string name;
    DiagramSum lhs;
    DiagramSum rhs;
    bool holds() const { return lhs == rhs; }
};

// Σ(r) = Σ(r−1)⊗I − ε/(r−2)! (Σ(r−1)⊗I)(I^{r−2}⊗X)(Σ(r−1)⊗I), r ≥ 2
IdentityCheck sigma_recursion(int r, int eps);
// rightmost strand of Σ(r) closed = −ε(r−1−εδ) Σ(r−1), r ≥ 1
IdentityCheck sigma_strand_closure(int r, int eps);
// (I^{r−1}⊗A)(Σ(r)⊗I) = Σ_i (−ε)^i Σ(r−1)∘hook_i, r ≥ 1
IdentityCheck sigma_hook(int r, int eps);
// the ε = −1 identity with k cups below and one cap above, r ≥ 2, r ≥ 2k
IdentityCheck sigma_cup_cap(int r, int k);

// bottom node r−i is capped to the extra node r+1, the rest go straight up
Diagram hook_diagram(int r, int i);

std::vector<IdentityCheck> sigma_identities(int max_r = 5, int max_k = 2);

} // namespace bk
