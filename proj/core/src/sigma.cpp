#include "brauer/sigma.hpp"

#include <stdexcept>

namespace bk {

namespace {

DiagramSum I(int r) { return DiagramSum(identity(r)); }

DiagramSum tensor_power(const Diagram& d, int n) {
    Diagram acc = empty_diagram();
    for (int i = 0; i < n; ++i) acc = tensor(acc, d);
    return DiagramSum(acc);
}

std::string tag(const char* base, int r, int e) {
    return std::string(base) + " r=" + std::to_string(r) + " eps=" + (e > 0 ? "+1" : "-1");
}

} // namespace

IdentityCheck sigma_recursion(int r, int eps) {
    if (r < 2) throw std::out_of_range("sigma_recursion needs r >= 2");
    DiagramSum s1 = tensor(symmetrizer(r - 1, eps), I(1));
    DiagramSum mid(tensor(identity(r - 2), cross()));
    DiagramSum rhs = s1 - chain({s1, mid, s1}) * Poly(Rational(eps) / factorial(r - 2));
    return {tag("sigma recursion", r, eps), symmetrizer(r, eps), rhs};
}

IdentityCheck sigma_strand_closure(int r, int eps) {
    if (r < 1) throw std::out_of_range("sigma_strand_closure needs r >= 1");
    Poly c = Poly(-eps) * (Poly(r - 1) - Poly(eps) * Poly::delta());
    return {tag("sigma strand closure", r, eps), partial_close(symmetrizer(r, eps), 1),
            symmetrizer(r - 1, eps) * c};
}

Diagram hook_diagram(int r, int i) {
    if (i < 0 || i >= r) throw std::out_of_range("hook_diagram: need 0 <= i < r");
    // 0-based: bottom r−1−i joins bottom r; the others go to tops in order
    const int k = r + 1, ell = r - 1;
    std::vector<int> partner(static_cast<std::size_t>(k + ell));
    int capped = r - 1 - i, top = 0;
    for (int b = 0; b < r; ++b) {
        if (b == capped) continue;
        partner[static_cast<std::size_t>(b)] = k + top;
        partner[static_cast<std::size_t>(k + top)] = b;
        ++top;
    }
    partner[static_cast<std::size_t>(capped)] = r;
    partner[static_cast<std::size_t>(r)] = capped;
    return Diagram::from_partner(k, ell, std::move(partner));
}

IdentityCheck sigma_hook(int r, int eps) {
    if (r < 1) throw std::out_of_range("sigma_hook needs r >= 1");
    DiagramSum lhs = compose(DiagramSum(tensor(identity(r - 1), cap())),
                             tensor(symmetrizer(r, eps), I(1)));
    DiagramSum rhs(r + 1, r - 1);
    DiagramSum s = symmetrizer(r - 1, eps);
    for (int i = 0; i < r; ++i) {
        int sign = (eps == 1 && i % 2) ? -1 : 1;
        rhs += compose(s, DiagramSum(hook_diagram(r, i))) * Poly(sign);
    }
    return {tag("sigma hook", r, eps), lhs, rhs};
}

IdentityCheck sigma_cup_cap(int r, int k) {
    if (r < 2 || k < 0 || r < 2 * k) throw std::out_of_range("sigma_cup_cap: need r >= 2, r >= 2k");
    DiagramSum S = symmetrizer(r, -1);
    DiagramSum lhs = chain({DiagramSum(tensor(identity(r - 2), cap())), S,
                            tensor(I(r - 2 * k), tensor_power(cup(), k))});
    DiagramSum rhs(r - 2 * k, r - 2);
    DiagramSum S2 = symmetrizer(r - 2, -1);
    if (k >= 1) {
        // 4k(r + δ/2 − k − 1)
        Poly c = Poly(4 * k) * (Poly(r - k - 1) + Poly::delta() * Rational(1, 2));
        rhs += compose(S2, tensor(I(r - 2 * k), tensor_power(cup(), k - 1))) * c;
    }
    if (r - 2 * k >= 2) {
        Diagram ua = compose(tensor_power(cup(), k).terms().begin()->first, cap()).diagram;
        DiagramSum mid(tensor(identity(r - 2 * k - 2), ua));
        rhs += chain({S2, mid, symmetrizer(r - 2 * k, -1)}) *
               Poly(Rational(1) / factorial(r - 2 - 2 * k));
    }
    return {"sigma cup-cap r=" + std::to_string(r) + " k=" + std::to_string(k), lhs, rhs};
}

std::vector<IdentityCheck> sigma_identities(int max_r, int max_k) {
    std::vector<IdentityCheck> out;
    for (int eps : {1, -1}) {
        for (int r = 2; r <= max_r; ++r) out.push_back(sigma_recursion(r, eps));
        for (int r = 1; r <= max_r; ++r) out.push_back(sigma_strand_closure(r, eps));
        for (int r = 1; r <= max_r; ++r) out.push_back(sigma_hook(r, eps));
    }
    for (int r = 2; r <= max_r; ++r)
        for (int k = 0; k <= max_k && 2 * k <= r; ++k) out.push_back(sigma_cup_cap(r, k));
    return out;
}

} // namespace bk
