#include "brauer/oriented.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

namespace bk {

void check_signs(const Signs& s) {
    for (char c : s)
        if (c != '+' && c != '-') throw OrientationError("sign sequence may only contain '+' and '-'");
}

Signs join(const Signs& a, const Signs& b) { return a + b; }

Signs negative(const Signs& s) {
    Signs r = s;
    for (char& c : r) c = c == '+' ? '-' : '+';
    return r;
}

Signs reverse(const Signs& s) { return Signs(s.rbegin(), s.rend()); }

std::pair<int, int> sl(const Signs& s) {
    int p = static_cast<int>(std::count(s.begin(), s.end(), '+'));
    return {p, static_cast<int>(s.size()) - p};
}

Signs sorted_signs(const Signs& s) {
    auto [p, m] = sl(s);
    return Signs(static_cast<std::size_t>(p), '+') + Signs(static_cast<std::size_t>(m), '-');
}

OrientedDiagram::OrientedDiagram(Diagram d, std::vector<bool> tail) : d_(std::move(d)), tail_(std::move(tail)) {
    if (static_cast<int>(tail_.size()) != d_.nodes()) throw OrientationError("tail flags have the wrong length");
    for (int n = 0; n < d_.nodes(); ++n)
        if (tail_[static_cast<std::size_t>(n)] == tail_[static_cast<std::size_t>(d_.partner(n))])
            throw OrientationError("each arc needs exactly one tail");
}

OrientedDiagram OrientedDiagram::from_signs(const Diagram& d, const Signs& source, const Signs& target) {
    check_signs(source);
    check_signs(target);
    if (length(source) != d.k() || length(target) != d.ell())
        throw OrientationError("sign sequences do not match the valency");
    std::vector<bool> tail(static_cast<std::size_t>(d.nodes()));
    for (int i = 0; i < d.k(); ++i) tail[static_cast<std::size_t>(i)] = source[static_cast<std::size_t>(i)] == '-';
    for (int j = 0; j < d.ell(); ++j) tail[static_cast<std::size_t>(d.k() + j)] = target[static_cast<std::size_t>(j)] == '+';
    return OrientedDiagram(d, std::move(tail));
}

Signs OrientedDiagram::source() const {
    Signs s(static_cast<std::size_t>(k()), '+');
    for (int i = 0; i < k(); ++i) s[static_cast<std::size_t>(i)] = is_tail(i) ? '-' : '+';
    return s;
}

Signs OrientedDiagram::target() const {
    Signs s(static_cast<std::size_t>(ell()), '+');
    for (int j = 0; j < ell(); ++j) s[static_cast<std::size_t>(j)] = is_tail(k() + j) ? '+' : '-';
    return s;
}

bool OrientedDiagram::operator<(const OrientedDiagram& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    return tail_ < o.tail_;
}

ScaledOriented compose(const OrientedDiagram& d1, const OrientedDiagram& d2) {
    if (d2.target() != d1.source())
        throw OrientationError("cannot compose: target " + d2.target() + " differs from source " + d1.source());
    ScaledDiagram s = compose(d1.diagram(), d2.diagram());
    const int k = d2.k();
    std::vector<bool> tail(static_cast<std::size_t>(s.diagram.nodes()));
    for (int i = 0; i < k; ++i) tail[static_cast<std::size_t>(i)] = d2.is_tail(i);
    for (int j = 0; j < d1.ell(); ++j) tail[static_cast<std::size_t>(k + j)] = d1.is_tail(d1.k() + j);
    return {OrientedDiagram(std::move(s.diagram), std::move(tail)), s.loops};
}

OrientedDiagram tensor(const OrientedDiagram& d1, const OrientedDiagram& d2) {
    return OrientedDiagram::from_signs(tensor(d1.diagram(), d2.diagram()), d1.source() + d2.source(),
                                       d1.target() + d2.target());
}

OrientedDiagram oriented_identity(const Signs& eta) {
    return OrientedDiagram::from_signs(identity(length(eta)), eta, eta);
}

std::vector<OrientedDiagram> enumerate_oriented(const Signs& source, const Signs& target) {
    check_signs(source);
    check_signs(target);
    std::vector<OrientedDiagram> out;
    for (const auto& d : enumerate_diagrams(length(source), length(target))) {
        try {
            out.push_back(OrientedDiagram::from_signs(d, source, target));
        } catch (const OrientationError&) {
        }
    }
    return out;
}

std::vector<OrientedDiagram> walled_brauer_basis(int r, int s) {
    Signs eta = Signs(static_cast<std::size_t>(r), '+') + Signs(static_cast<std::size_t>(s), '-');
    return enumerate_oriented(eta, eta);
}

OrientedDiagram sorting_diagram(const Signs& eta) {
    check_signs(eta);
    std::vector<int> img(eta.size());
    int plus = sl(eta).first, np = 0, nm = 0;
    for (std::size_t i = 0; i < eta.size(); ++i) img[i] = eta[i] == '+' ? np++ : plus + nm++;
    return OrientedDiagram::from_signs(perm_diagram(img), eta, sorted_signs(eta));
}

OrientedDiagram unsorting_diagram(const Signs& eta) {
    OrientedDiagram s = sorting_diagram(eta);
    return OrientedDiagram::from_signs(star(s.diagram()), sorted_signs(eta), eta);
}

ScaledOriented TransportIso::forward(const OrientedDiagram& d) const {
    auto a = compose(d, from_sorted);
    auto b = compose(to_sorted, a.diagram);
    return {b.diagram, a.loops + b.loops};
}

ScaledOriented TransportIso::backward(const OrientedDiagram& d) const {
    auto a = compose(d, to_sorted);
    auto b = compose(from_sorted, a.diagram);
    return {b.diagram, a.loops + b.loops};
}

TransportIso transport_iso(const Signs& eta) {
    return {eta, sorted_signs(eta), sorting_diagram(eta), unsorting_diagram(eta)};
}

OrientedDiagram oriented_generator(const std::string& name) {
    if (name == "I+") return oriented_identity("+");
    if (name == "I-") return oriented_identity("-");
    if (name == "X") return OrientedDiagram::from_signs(cross(), "++", "++");
    if (name == "A+") return OrientedDiagram::from_signs(cap(), "-+", "");
    if (name == "A-") return OrientedDiagram::from_signs(cap(), "+-", "");
    if (name == "U+") return OrientedDiagram::from_signs(cup(), "", "+-");
    if (name == "U-") return OrientedDiagram::from_signs(cup(), "", "-+");
    if (name.size() == 3 && name[0] == 'P') {
        Signs in = name.substr(1), out{in[1], in[0]};
        check_signs(in);
        return OrientedDiagram::from_signs(cross(), in, out);
    }
    throw OrientationError("unknown oriented generator '" + name + "'");
}

bool arc_count_identity(const OrientedDiagram& d) {
    Signs s = d.source(), t = d.target();
    auto [sp, sm] = sl(s);
    auto [tp, tm] = sl(t);
    int total = length(s) + length(t);
    return total % 2 == 0 && tp + sm == sp + tm && 2 * (tp + sm) == total;
}

OrientedDiagram random_oriented(int k, int ell, std::uint64_t seed) {
    if ((k + ell) % 2) throw ValencyError("k+ell must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> nodes(static_cast<std::size_t>(k + ell));
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::vector<int> partner(nodes.size());
    std::vector<bool> tail(nodes.size());
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
        partner[static_cast<std::size_t>(nodes[i])] = nodes[i + 1];
        partner[static_cast<std::size_t>(nodes[i + 1])] = nodes[i];
        bool first = (rng() & 1u) != 0;
        tail[static_cast<std::size_t>(nodes[i])] = first;
        tail[static_cast<std::size_t>(nodes[i + 1])] = !first;
    }
    return OrientedDiagram(Diagram::from_partner(k, ell, partner), tail);
}

std::string to_string(const OrientedDiagram& d) {
    return to_string(d.diagram()) + " " + (d.source().empty() ? "()" : d.source()) + "->" +
           (d.target().empty() ? "()" : d.target());
}

void PrintTo(const OrientedDiagram& d, std::ostream* os) { *os << to_string(d); }

} // namespace bk
