#include "brauer/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bk {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

void check_partner(int k, int ell, const std::vector<int>& partner) {
    if (k < 0 || ell < 0) throw ValencyError("negative valency");
    if (static_cast<int>(partner.size()) != k + ell)
        throw ValencyError("partner array has wrong length");
    for (int i = 0; i < k + ell; ++i) {
        int j = partner[static_cast<std::size_t>(i)];
        if (j < 0 || j >= k + ell || j == i || partner[static_cast<std::size_t>(j)] != i)
            throw std::invalid_argument("not a perfect matching");
    }
}

} // namespace

std::string to_string(Valency v) {
    return "(" + std::to_string(v.k) + "," + std::to_string(v.ell) + ")";
}

Diagram::Diagram(int k, int ell, const std::vector<std::pair<int, int>>& pairs)
    : k_(k), ell_(ell), partner_(static_cast<std::size_t>(k + ell), -1) {
    if (k < 0 || ell < 0) throw ValencyError("negative valency");
    if ((k + ell) % 2 != 0)
        throw ValencyError("k+ell must be even, got " + to_string(Valency{k, ell}));
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > k + ell || b > k + ell || a == b)
            throw std::invalid_argument("pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") out of range");
        auto& pa = partner_[static_cast<std::size_t>(a - 1)];
        auto& pb = partner_[static_cast<std::size_t>(b - 1)];
        if (pa != -1 || pb != -1)
            throw std::invalid_argument("node used twice in pairs");
        pa = b - 1;
        pb = a - 1;
    }
    for (int p : partner_)
        if (p == -1) throw std::invalid_argument("pairs do not cover every node");
}

Diagram Diagram::from_partner(int k, int ell, std::vector<int> partner) {
    check_partner(k, ell, partner);
    Diagram d;
    d.k_ = k;
    d.ell_ = ell;
    d.partner_ = std::move(partner);
    return d;
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(partner_.size() / 2);
    for (int i = 0; i < nodes(); ++i)
        if (partner(i) > i) out.emplace_back(i + 1, partner(i) + 1);
    return out;
}

int Diagram::through_strings() const {
    int n = 0;
    for (int i = 0; i < k_; ++i)
        if (partner(i) >= k_) ++n;
    return n;
}

bool Diagram::operator<(const Diagram& o) const {
    if (k_ != o.k_) return k_ < o.k_;
    if (ell_ != o.ell_) return ell_ < o.ell_;
    return partner_ < o.partner_;
}

std::size_t Diagram::hash() const {
    std::size_t h = static_cast<std::size_t>(k_) * 1315423911u + static_cast<std::size_t>(ell_);
    for (int p : partner_) h = h * 1000003u ^ static_cast<std::size_t>(p + 1);
    return h;
}

ScaledDiagram compose(const Diagram& d1, const Diagram& d2) {
    if (d1.k() != d2.ell())
        throw ValencyError("cannot compose " + to_string(Valency{d1.k(), d1.ell()}) + " after " +
                           to_string(Valency{d2.k(), d2.ell()}));
    const int k = d2.k(), mid = d2.ell(), p = d1.ell();
    // global ids: d2 bottom [0,k), middle [k,k+mid), d1 top [k+mid, k+mid+p)
    auto g2 = [&](int n) { return n; };
    auto g1 = [&](int n) { return k + n; };
    DisjointSets ds(k + mid + p);
    for (int n = 0; n < d2.nodes(); ++n) ds.unite(g2(n), g2(d2.partner(n)));
    for (int n = 0; n < d1.nodes(); ++n) ds.unite(g1(n), g1(d1.partner(n)));

    std::vector<int> first_outer(static_cast<std::size_t>(k + mid + p), -1);
    std::vector<int> partner(static_cast<std::size_t>(k + p), -1);
    auto outer_local = [&](int g) { return g < k ? g : g - mid; };
    for (int g = 0; g < k + mid + p; ++g) {
        if (g >= k && g < k + mid) continue;
        int r = ds.find(g);
        int& f = first_outer[static_cast<std::size_t>(r)];
        if (f == -1) {
            f = g;
        } else {
            int a = outer_local(f), b = outer_local(g);
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
        }
    }
    int loops = 0;
    for (int g = k; g < k + mid; ++g) {
        int r = ds.find(g);
        if (r == g && first_outer[static_cast<std::size_t>(r)] == -1) ++loops;
    }
    // roots are minimal ids, so a loop's root is the first middle node in it
    ScaledDiagram out;
    out.diagram = Diagram::from_partner(k, p, std::move(partner));
    out.loops = loops;
    return out;
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
    const int k1 = d1.k(), k2 = d2.k(), l1 = d1.ell(), l2 = d2.ell();
    const int K = k1 + k2;
    auto map1 = [&](int n) { return n < k1 ? n : K + (n - k1); };
    auto map2 = [&](int n) { return n < k2 ? k1 + n : K + l1 + (n - k2); };
    std::vector<int> partner(static_cast<std::size_t>(K + l1 + l2));
    for (int n = 0; n < d1.nodes(); ++n) partner[static_cast<std::size_t>(map1(n))] = map1(d1.partner(n));
    for (int n = 0; n < d2.nodes(); ++n) partner[static_cast<std::size_t>(map2(n))] = map2(d2.partner(n));
    return Diagram::from_partner(K, l1 + l2, std::move(partner));
}

Diagram star(const Diagram& d) {
    const int k = d.k(), l = d.ell();
    // old bottom i -> new top i, old top j -> new bottom j
    auto m = [&](int n) { return n < k ? l + n : n - k; };
    std::vector<int> partner(static_cast<std::size_t>(k + l));
    for (int n = 0; n < k + l; ++n) partner[static_cast<std::size_t>(m(n))] = m(d.partner(n));
    return Diagram::from_partner(l, k, std::move(partner));
}

Diagram sharp(const Diagram& d) {
    const int k = d.k(), l = d.ell();
    auto m = [&](int n) { return n < k ? k - 1 - n : k + (l - 1 - (n - k)); };
    std::vector<int> partner(static_cast<std::size_t>(k + l));
    for (int n = 0; n < k + l; ++n) partner[static_cast<std::size_t>(m(n))] = m(d.partner(n));
    return Diagram::from_partner(k, l, std::move(partner));
}

Diagram identity(int r) {
    if (r < 0) throw std::out_of_range("identity: negative size");
    std::vector<int> partner(static_cast<std::size_t>(2 * r));
    for (int i = 0; i < r; ++i) {
        partner[static_cast<std::size_t>(i)] = r + i;
        partner[static_cast<std::size_t>(r + i)] = i;
    }
    return Diagram::from_partner(r, r, std::move(partner));
}

Diagram empty_diagram() { return Diagram::from_partner(0, 0, {}); }
Diagram cap() { return Diagram::from_partner(2, 0, {1, 0}); }
Diagram cup() { return Diagram::from_partner(0, 2, {1, 0}); }
Diagram cross() { return Diagram::from_partner(2, 2, {3, 2, 1, 0}); }

Diagram s_i(int r, int i) {
    if (i < 1 || i >= r) throw std::out_of_range("s_i: need 1 <= i < r");
    return tensor(tensor(identity(i - 1), cross()), identity(r - i - 1));
}

Diagram e_i(int r, int i) {
    if (i < 1 || i >= r) throw std::out_of_range("e_i: need 1 <= i < r");
    Diagram ua = compose(cup(), cap()).diagram;
    return tensor(tensor(identity(i - 1), ua), identity(r - i - 1));
}

Diagram A_q(int q) {
    if (q < 0) throw std::out_of_range("A_q: negative q");
    std::vector<int> partner(static_cast<std::size_t>(2 * q));
    for (int i = 0; i < 2 * q; ++i) partner[static_cast<std::size_t>(i)] = 2 * q - 1 - i;
    return Diagram::from_partner(2 * q, 0, std::move(partner));
}

Diagram U_q(int q) { return star(A_q(q)); }

Diagram X_cross(int s, int t) {
    if (s < 0 || t < 0) throw std::out_of_range("X_cross: negative size");
    std::vector<int> img(static_cast<std::size_t>(s + t));
    for (int i = 0; i < s; ++i) img[static_cast<std::size_t>(i)] = t + i;
    for (int j = 0; j < t; ++j) img[static_cast<std::size_t>(s + j)] = j;
    return perm_diagram(img);
}

Diagram perm_diagram(const std::vector<int>& img) {
    const int r = static_cast<int>(img.size());
    std::vector<int> partner(static_cast<std::size_t>(2 * r), -1);
    for (int i = 0; i < r; ++i) {
        int j = img[static_cast<std::size_t>(i)];
        if (j < 0 || j >= r) throw std::out_of_range("perm_diagram: image out of range");
        partner[static_cast<std::size_t>(i)] = r + j;
        partner[static_cast<std::size_t>(r + j)] = i;
    }
    return Diagram::from_partner(r, r, std::move(partner));
}

Diagram raise(const Diagram& d) {
    if (d.k() < 1) throw ValencyError("raise needs k >= 1");
    // (D ⊗ I) ∘ (I^{k-1} ⊗ U)
    Diagram top = tensor(d, identity(1));
    Diagram bot = tensor(identity(d.k() - 1), cup());
    return compose(top, bot).diagram;
}

Diagram lower(const Diagram& d) {
    if (d.ell() < 1) throw ValencyError("lower needs ell >= 1");
    Diagram top = tensor(identity(d.ell() - 1), cap());
    return compose(top, tensor(d, identity(1))).diagram;
}

namespace {

void matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
        out.push_back(partner);
        return;
    }
    int a = static_cast<int>(it - partner.begin());
    for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
        if (partner[static_cast<std::size_t>(b)] != -1) continue;
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        matchings(partner, out);
        partner[static_cast<std::size_t>(a)] = -1;
        partner[static_cast<std::size_t>(b)] = -1;
    }
}

} // namespace

std::vector<Diagram> enumerate_diagrams(int k, int ell) {
    std::vector<Diagram> out;
    if (k < 0 || ell < 0 || (k + ell) % 2) return out;
    std::vector<int> partner(static_cast<std::size_t>(k + ell), -1);
    std::vector<std::vector<int>> raw;
    matchings(partner, raw);
    out.reserve(raw.size());
    for (auto& p : raw) out.push_back(Diagram::from_partner(k, ell, std::move(p)));
    return out;
}

std::uint64_t count_diagrams(int k, int ell) {
    if (k < 0 || ell < 0 || (k + ell) % 2) return 0;
    std::uint64_t c = 1;
    for (int n = k + ell - 1; n > 1; n -= 2) c *= static_cast<std::uint64_t>(n);
    return c;
}

std::string render(const Diagram& d) {
    const int width = std::max({d.k(), d.ell(), 1});
    const std::size_t cols = static_cast<std::size_t>(4 * (width - 1) + 1);
    auto col = [](int i) { return static_cast<std::size_t>(4 * i); };

    // same-row arcs get nesting levels; level 1 sits next to the nodes
    struct Row {
        int len = 0;
        std::vector<int> level;   // per position, 0 for through strings
        std::vector<int> partner; // position of the other end in the row, or -1
        int depth = 0;
    };
    auto build = [&](bool top_row) {
        Row r;
        r.len = top_row ? d.ell() : d.k();
        r.level.assign(static_cast<std::size_t>(r.len), 0);
        r.partner.assign(static_cast<std::size_t>(r.len), -1);
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < r.len; ++i) {
            const int q = d.partner(top_row ? d.top(i) : d.bottom(i));
            if (d.is_top(q) != top_row) continue;
            r.partner[static_cast<std::size_t>(i)] = d.pos(q);
            if (d.pos(q) > i) arcs.emplace_back(i, d.pos(q));
        }
        std::stable_sort(arcs.begin(), arcs.end(),
                         [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
        for (auto [a, b] : arcs) {
            int lv = 1;
            for (int c = a + 1; c < b; ++c) lv = std::max(lv, r.level[static_cast<std::size_t>(c)] + 1);
            r.level[static_cast<std::size_t>(a)] = r.level[static_cast<std::size_t>(b)] = lv;
            r.depth = std::max(r.depth, lv);
        }
        return r;
    };
    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    auto nodes = [&](int len) {
        std::string s(cols, ' ');
        for (int i = 0; i < len; ++i) s[col(i)] = 'o';
        return trim(s);
    };
    // arcs at this level drawn horizontally, deeper arcs and through strings pass vertically
    auto arc_row = [&](const Row& r, int lv, char corner) {
        std::string s(cols, ' ');
        for (int i = 0; i < r.len; ++i) {
            const int l = r.level[static_cast<std::size_t>(i)];
            if (l == 0 || l > lv) s[col(i)] = '|';
        }
        for (int i = 0; i < r.len; ++i) {
            const int j = r.partner[static_cast<std::size_t>(i)];
            if (r.level[static_cast<std::size_t>(i)] != lv || j < i) continue;
            for (std::size_t c = col(i) + 1; c < col(j); ++c) s[c] = s[c] == '|' ? '+' : '-';
            s[col(i)] = s[col(j)] = corner;
        }
        return trim(s);
    };
    // through strings are matched up by letter
    std::vector<char> label(static_cast<std::size_t>(d.nodes()), ' ');
    char next = 'A';
    for (int j = 0; j < d.ell(); ++j) {
        const int q = d.partner(d.top(j));
        if (d.is_top(q)) continue;
        label[static_cast<std::size_t>(d.top(j))] = label[static_cast<std::size_t>(q)] = next;
        next = next == 'Z' ? 'a' : static_cast<char>(next + 1);
    }
    auto labels = [&](bool top_row) {
        std::string s(cols, ' ');
        const int len = top_row ? d.ell() : d.k();
        for (int i = 0; i < len; ++i) s[col(i)] = label[static_cast<std::size_t>(top_row ? d.top(i) : d.bottom(i))];
        return trim(s);
    };

    const Row top = build(true), bottom = build(false);
    std::string out = nodes(d.ell());
    for (int lv = 1; lv <= top.depth; ++lv) out += arc_row(top, lv, '\'');
    if (d.through_strings() > 0) out += labels(true) + labels(false);
    for (int lv = bottom.depth; lv >= 1; --lv) out += arc_row(bottom, lv, '.');
    out += nodes(d.k());
    return out;
}

std::string to_string(const Diagram& d) {
    std::string s = to_string(Valency{d.k(), d.ell()}) + "[";
    bool first = true;
    for (auto [a, b] : d.pairs()) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s + "]";
}

void PrintTo(const Diagram& d, std::ostream* os) { *os << to_string(d); }

void PrintTo(const ScaledDiagram& d, std::ostream* os) {
    *os << "d^" << d.loops << " " << to_string(d.diagram);
}

} // namespace bk
