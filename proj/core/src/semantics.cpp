#include "brauer/semantics.hpp"

namespace bk {

ScaledDiagram DiagramSemantics::leaf(const std::string& name) const {
    if (name == "I") return {identity(1), 0};
    if (name == "X") return {cross(), 0};
    if (name == "A") return {cap(), 0};
    if (name == "U") return {cup(), 0};
    throw std::invalid_argument("unknown generator '" + name + "'");
}

ScaledDiagram DiagramSemantics::tensor(const value_type& a, const value_type& b) const {
    return {bk::tensor(a.diagram, b.diagram), a.loops + b.loops};
}

ScaledDiagram DiagramSemantics::compose(const value_type& after, const value_type& before) const {
    auto s = bk::compose(after.diagram, before.diagram);
    return {s.diagram, s.loops + after.loops + before.loops};
}

ScaledOriented OrientedSemantics::tensor(const value_type& a, const value_type& b) const {
    return {bk::tensor(a.diagram, b.diagram), a.loops + b.loops};
}

ScaledOriented OrientedSemantics::compose(const value_type& after, const value_type& before) const {
    auto s = bk::compose(after.diagram, before.diagram);
    return {s.diagram, s.loops + after.loops + before.loops};
}

} // namespace bk

namespace bk {

namespace {

Expr slice_layer(const std::vector<std::string>& below_above_names) {
    std::vector<Expr> f;
    for (const auto& n : below_above_names) f.push_back(leaf(n));
    return tensor_of(std::move(f));
}

std::string id_name(char sign) { return sign == '+' ? "I+" : "I-"; }

} // namespace

Expr word_expr(const Word& w) {
    if (w.empty()) {
        std::vector<Expr> ids(static_cast<std::size_t>(w.k()), leaf("I"));
        return tensor_of(std::move(ids));
    }
    std::vector<Expr> layers;
    for (const auto& s : w.slices()) {
        std::vector<Expr> f;
        for (int i = 0; i < s.left; ++i) f.push_back(leaf("I"));
        f.push_back(leaf(std::string(1, gen_char(s.gen))));
        for (int i = 0; i < s.right; ++i) f.push_back(leaf("I"));
        layers.push_back(tensor_of(std::move(f)));
    }
    return chain_of(std::move(layers));
}

Expr oriented_word_expr(const OrientedDiagram& od) {
    const Diagram& d = od.diagram();
    const Word w = from_diagram(d);
    const int n = static_cast<int>(w.size());
    // level L (0 = bottom) sits below slice n-1-L
    auto width = [&](int L) { return L == 0 ? w.k() : w.width_at(static_cast<std::size_t>(n - L)); };
    std::vector<Signs> sign(static_cast<std::size_t>(n + 1));
    for (int L = 0; L <= n; ++L) sign[static_cast<std::size_t>(L)] = Signs(static_cast<std::size_t>(width(L)), '?');

    struct Seg {
        int level, pos;
    };
    // next segment when leaving (L,p) upward; {-1,node} means top node
    auto up = [&](Seg s, bool& now_up) -> Seg {
        if (s.level == n) return {-1, s.pos};
        const Slice& sl = w[static_cast<std::size_t>(n - 1 - s.level)];
        int l = sl.left, p = s.pos;
        now_up = true;
        if (p < l) return {s.level + 1, p};
        switch (sl.gen) {
        case Gen::X:
            if (p == l) return {s.level + 1, l + 1};
            if (p == l + 1) return {s.level + 1, l};
            return {s.level + 1, p};
        case Gen::A:
            if (p == l || p == l + 1) {
                now_up = false;
                return {s.level, p == l ? l + 1 : l};
            }
            return {s.level + 1, p - 2};
        case Gen::U:
            return {s.level + 1, p + 2};
        }
        return {};
    };
    auto down = [&](Seg s, bool& now_up) -> Seg {
        if (s.level == 0) return {-2, s.pos};
        const Slice& sl = w[static_cast<std::size_t>(n - s.level)];
        int l = sl.left, p = s.pos;
        now_up = false;
        if (p < l) return {s.level - 1, p};
        switch (sl.gen) {
        case Gen::X:
            if (p == l) return {s.level - 1, l + 1};
            if (p == l + 1) return {s.level - 1, l};
            return {s.level - 1, p};
        case Gen::U:
            if (p == l || p == l + 1) {
                now_up = true;
                return {s.level, p == l ? l + 1 : l};
            }
            return {s.level - 1, p - 2};
        case Gen::A:
            return {s.level - 1, p + 2};
        }
        return {};
    };

    for (int node = 0; node < d.nodes(); ++node) {
        if (!od.is_tail(node)) continue;
        bool going_up = !d.is_top(node);
        Seg s = going_up ? Seg{0, node} : Seg{n, node - d.k()};
        while (s.level >= 0) {
            sign[static_cast<std::size_t>(s.level)][static_cast<std::size_t>(s.pos)] = going_up ? '-' : '+';
            s = going_up ? up(s, going_up) : down(s, going_up);
        }
    }

    if (n == 0) {
        std::vector<std::string> ids;
        for (char c : sign[0]) ids.push_back(id_name(c));
        return slice_layer(ids);
    }
    std::vector<Expr> layers;
    for (int i = 0; i < n; ++i) {
        const Slice& sl = w[static_cast<std::size_t>(i)];
        const Signs& below = sign[static_cast<std::size_t>(n - 1 - i)];
        const Signs& above = sign[static_cast<std::size_t>(n - i)];
        std::vector<std::string> names;
        for (int p = 0; p < sl.left; ++p) names.push_back(id_name(below[static_cast<std::size_t>(p)]));
        const std::size_t l = static_cast<std::size_t>(sl.left);
        switch (sl.gen) {
        case Gen::X: {
            std::string pn = std::string("P") + below[l] + below[l + 1];
            names.push_back(pn == "P++" ? "X" : pn);
            break;
        }
        case Gen::A:
            names.push_back(below[l] == '-' ? "A+" : "A-");
            break;
        case Gen::U:
            names.push_back(above[l] == '+' ? "U+" : "U-");
            break;
        }
        const std::size_t right_start = sl.gen == Gen::U ? l : l + 2;
        for (int p = 0; p < sl.right; ++p) names.push_back(id_name(below[right_start + static_cast<std::size_t>(p)]));
        layers.push_back(slice_layer(names));
    }
    return chain_of(std::move(layers));
}

} // namespace bk
