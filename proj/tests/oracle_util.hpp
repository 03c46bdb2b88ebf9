#pragma once
// Shared helpers for tests: independent reference implementations and random inputs.

#include "brauer/diagram.hpp"

#include <random>
#include <set>
#include <vector>

namespace oracle {

// Composition by walking paths through the glued node set, independent of the
// union-find code in the library.
inline bk::ScaledDiagram walk_compose(const bk::Diagram& d1, const bk::Diagram& d2) {
    const int k = d2.k(), mid = d2.ell(), p = d1.ell();
    // side 0 = d2 node ids, side 1 = d1 node ids
    std::vector<int> partner(static_cast<std::size_t>(k + p), -1);
    auto out_id = [&](int side, int node) {
        return side == 0 ? node : k + (node - mid);
    };
    auto is_outer = [&](int side, int node) { return side == 0 ? node < k : node >= mid; };
    for (int side = 0; side < 2; ++side) {
        const bk::Diagram& d = side == 0 ? d2 : d1;
        for (int n = 0; n < d.nodes(); ++n) {
            if (!is_outer(side, n)) continue;
            int s = side, cur = n;
            while (true) {
                const bk::Diagram& dd = s == 0 ? d2 : d1;
                int q = dd.partner(cur);
                if (is_outer(s, q)) {
                    partner[static_cast<std::size_t>(out_id(side, n))] = out_id(s, q);
                    break;
                }
                // q is a middle node: cross to the other diagram
                if (s == 0) {
                    s = 1;
                    cur = q - k;
                } else {
                    s = 0;
                    cur = k + q;
                }
            }
        }
    }
    // loops: middle nodes not visited by any outer path
    std::vector<bool> seen(static_cast<std::size_t>(mid), false);
    for (int n = 0; n < k; ++n) {
        int s = 0, cur = n;
        while (true) {
            const bk::Diagram& dd = s == 0 ? d2 : d1;
            int q = dd.partner(cur);
            if (is_outer(s, q)) break;
            int m = s == 0 ? q - k : q;
            seen[static_cast<std::size_t>(m)] = true;
            if (s == 0) { s = 1; cur = m; } else { s = 0; cur = k + m; }
        }
    }
    for (int n = mid; n < d1.nodes(); ++n) {
        int s = 1, cur = n;
        while (true) {
            const bk::Diagram& dd = s == 0 ? d2 : d1;
            int q = dd.partner(cur);
            if (is_outer(s, q)) break;
            int m = s == 0 ? q - k : q;
            seen[static_cast<std::size_t>(m)] = true;
            if (s == 0) { s = 1; cur = m; } else { s = 0; cur = k + m; }
        }
    }
    int loops = 0;
    for (int m = 0; m < mid; ++m) {
        if (seen[static_cast<std::size_t>(m)]) continue;
        ++loops;
        // mark the whole loop, starting on the d1 side at middle node m
        int cur = m;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            int a = d1.partner(cur);          // middle -> middle via d1
            seen[static_cast<std::size_t>(a)] = true;
            cur = d2.partner(k + a) - k;      // back via d2
        } while (cur != m);
    }
    return {bk::Diagram::from_partner(k, p, partner), loops};
}

inline bk::Diagram random_diagram(int k, int ell, std::mt19937_64& rng) {
    std::vector<int> nodes(static_cast<std::size_t>(k + ell));
    for (int i = 0; i < k + ell; ++i) nodes[static_cast<std::size_t>(i)] = i;
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::vector<int> partner(nodes.size());
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
        partner[static_cast<std::size_t>(nodes[i])] = nodes[i + 1];
        partner[static_cast<std::size_t>(nodes[i + 1])] = nodes[i];
    }
    return bk::Diagram::from_partner(k, ell, partner);
}

inline long double_factorial(int n) {
    long r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

} // namespace oracle
