#pragma once

#include "brauer/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bk {

// Signed sequences are strings over {'+','-'}.
using Signs = std::string;

void check_signs(const Signs& s);
Signs join(const Signs& a, const Signs& b);
Signs negative(const Signs& s);
Signs reverse(const Signs& s);
std::pair<int, int> sl(const Signs& s);
inline int length(const Signs& s) { return static_cast<int>(s.size()); }
// all '+' first, then all '-'
Signs sorted_signs(const Signs& s);

class OrientedDiagram {
public:
    OrientedDiagram() = default;
    // tail[n] is true when node n (0-based) is where its arc starts
    OrientedDiagram(Diagram d, std::vector<bool> tail);
    // the unique orientation of d with the given source and target
    static OrientedDiagram from_signs(const Diagram& d, const Signs& source, const Signs& target);

    const Diagram& diagram() const { return d_; }
    const std::vector<bool>& tails() const { return tail_; }
    bool is_tail(int node) const { return tail_[static_cast<std::size_t>(node)]; }
    Signs source() const;
    Signs target() const;
    int k() const { return d_.k(); }
    int ell() const { return d_.ell(); }

    bool operator==(const OrientedDiagram&) const = default;
    bool operator<(const OrientedDiagram& o) const;

private:
    Diagram d_;
    std::vector<bool> tail_;
};

struct ScaledOriented {
    OrientedDiagram diagram;
    int loops = 0;
    bool operator==(const ScaledOriented&) const = default;
};

class OrientationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// d1 after d2; needs t(d2) == s(d1)
ScaledOriented compose(const OrientedDiagram& d1, const OrientedDiagram& d2);
OrientedDiagram tensor(const OrientedDiagram& d1, const OrientedDiagram& d2);

OrientedDiagram oriented_identity(const Signs& eta);
std::vector<OrientedDiagram> enumerate_oriented(const Signs& source, const Signs& target);
std::vector<OrientedDiagram> walled_brauer_basis(int r, int s);

// stable sorting permutation from eta to its sorted form, and back
OrientedDiagram sorting_diagram(const Signs& eta);
OrientedDiagram unsorting_diagram(const Signs& eta);

struct TransportIso {
    Signs eta, eta_bar;
    OrientedDiagram to_sorted;   // X_η^{η̄}
    OrientedDiagram from_sorted; // X_{η̄}^η
    ScaledOriented forward(const OrientedDiagram& d) const;
    ScaledOriented backward(const OrientedDiagram& d) const;
};
TransportIso transport_iso(const Signs& eta);

// the generators: I⁺, I⁻, X on (+,+), caps A⁺ from (−,+), A⁻ from (+,−),
// cups U⁺ to (+,−), U⁻ to (−,+); also the crossings Pεε' from (ε,ε') to (ε',ε)
OrientedDiagram oriented_generator(const std::string& name);

// the arc-count identity: #₊t + #₋s == #₊s + #₋t == (l(s)+l(t))/2
bool arc_count_identity(const OrientedDiagram& d);

OrientedDiagram random_oriented(int k, int ell, std::uint64_t seed);

std::string to_string(const OrientedDiagram& d);
void PrintTo(const OrientedDiagram& d, std::ostream* os);

} // namespace bk
