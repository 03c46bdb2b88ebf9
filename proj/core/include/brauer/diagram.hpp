#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bk {

// Nodes are 1-based in the public interface: bottom 1..k, then top k+1..k+ell.
// Internally a diagram is its partner array over 0-based nodes, which is
// already canonical, so structural equality is plain vector equality.
class Diagram {
public:
    Diagram() = default;
    Diagram(int k, int ell, const std::vector<std::pair<int, int>>& pairs);

    static Diagram from_partner(int k, int ell, std::vector<int> partner);

    int k() const { return k_; }
    int ell() const { return ell_; }
    int nodes() const { return k_ + ell_; }

    // 0-based partner lookup
    int partner(int node) const { return partner_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& partners() const { return partner_; }

    bool is_top(int node) const { return node >= k_; }
    // position within its row, 0-based
    int pos(int node) const { return node < k_ ? node : node - k_; }
    int bottom(int i) const { return i; }
    int top(int j) const { return k_ + j; }

    // canonical 1-based pair list, each pair ascending, sorted by first
    std::vector<std::pair<int, int>> pairs() const;

    int through_strings() const;

    bool operator==(const Diagram& o) const {
        return k_ == o.k_ && ell_ == o.ell_ && partner_ == o.partner_;
    }
    bool operator!=(const Diagram& o) const { return !(*this == o); }
    bool operator<(const Diagram& o) const;

    std::size_t hash() const;

private:
    int k_ = 0;
    int ell_ = 0;
    std::vector<int> partner_;
};

struct ScaledDiagram {
    Diagram diagram;
    int loops = 0;
    bool operator==(const ScaledDiagram& o) const {
        return loops == o.loops && diagram == o.diagram;
    }
};

struct Valency {
    int k = 0;
    int ell = 0;
    bool operator==(const Valency&) const = default;
};

std::string to_string(Valency v);

class ValencyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// d1 after d2; requires d1.k() == d2.ell()
ScaledDiagram compose(const Diagram& d1, const Diagram& d2);
Diagram tensor(const Diagram& d1, const Diagram& d2);
Diagram star(const Diagram& d);
Diagram sharp(const Diagram& d);

Diagram identity(int r);
Diagram cap();
Diagram cup();
Diagram cross();
Diagram s_i(int r, int i);
Diagram e_i(int r, int i);
Diagram A_q(int q);
Diagram U_q(int q);
Diagram X_cross(int s, int t);
Diagram empty_diagram();
// permutation diagram: bottom i goes to top img[i] (0-based)
Diagram perm_diagram(const std::vector<int>& img);
// raising moves the last bottom node to the rightmost top slot, lowering the reverse
Diagram raise(const Diagram& d);
Diagram lower(const Diagram& d);

std::vector<Diagram> enumerate_diagrams(int k, int ell);
std::uint64_t count_diagrams(int k, int ell);

std::string render(const Diagram& d);

// compact form "(k,l)[1-4,2-3]"
std::string to_string(const Diagram& d);
// gtest pretty-printing hook
void PrintTo(const Diagram& d, std::ostream* os);
void PrintTo(const ScaledDiagram& d, std::ostream* os);

} // namespace bk

template <>
struct std::hash<bk::Diagram> {
    std::size_t operator()(const bk::Diagram& d) const noexcept { return d.hash(); }
};
