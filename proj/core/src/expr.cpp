#include "brauer/expr.hpp"

#include <algorithm>
#include <sstream>

namespace bk {

Expr leaf(const std::string& name) {
    Expr e;
    e.kind = Expr::Kind::Leaf;
    e.name = name;
    return e;
}

Expr tensor_of(std::vector<Expr> factors) {
    if (factors.size() == 1 && factors[0].loops == 0) return factors[0];
    Expr e;
    e.kind = Expr::Kind::Tensor;
    e.parts = std::move(factors);
    return e;
}

Expr chain_of(std::vector<Expr> layers) {
    if (layers.size() == 1) return layers[0];
    Expr e;
    e.kind = Expr::Kind::Chain;
    e.parts = std::move(layers);
    return e;
}

Expr delta_power(int loops) {
    Expr e;
    e.kind = Expr::Kind::Tensor;
    e.loops = loops;
    return e;
}

Expr parse_expr(const std::string& text, const std::vector<std::pair<std::string, Expr>>& macros) {
    std::vector<Expr> layers;
    std::stringstream all(text);
    std::string layer;
    while (std::getline(all, layer, ';')) {
        std::istringstream in(layer);
        std::vector<Expr> factors;
        std::string tok;
        while (in >> tok) {
            auto it = std::find_if(macros.begin(), macros.end(), [&](const auto& m) { return m.first == tok; });
            factors.push_back(it != macros.end() ? it->second : leaf(tok));
        }
        layers.push_back(tensor_of(std::move(factors)));
    }
    if (layers.empty()) throw std::invalid_argument("empty expression");
    return chain_of(std::move(layers));
}

std::string to_string(const Expr& e) {
    std::string s;
    switch (e.kind) {
    case Expr::Kind::Leaf:
        s = e.name;
        break;
    case Expr::Kind::Tensor:
        if (e.parts.empty()) s = "1";
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i) s += "⊗";
            bool wrap = e.parts[i].kind == Expr::Kind::Chain;
            s += wrap ? "(" + to_string(e.parts[i]) + ")" : to_string(e.parts[i]);
        }
        break;
    case Expr::Kind::Chain:
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i) s += "∘";
            bool wrap = e.parts[i].kind != Expr::Kind::Leaf;
            s += wrap ? "(" + to_string(e.parts[i]) + ")" : to_string(e.parts[i]);
        }
        break;
    }
    if (e.loops == 1) s = "δ·" + s;
    if (e.loops > 1) s = "δ^" + std::to_string(e.loops) + "·" + s;
    return s;
}

Expr star(const Expr& e) {
    Expr r = e;
    if (e.kind == Expr::Kind::Leaf) {
        if (e.name == "A") r.name = "U";
        else if (e.name == "U") r.name = "A";
        else if (e.name != "I" && e.name != "X")
            throw std::invalid_argument("star is only defined on the unoriented generators");
        return r;
    }
    for (auto& p : r.parts) p = star(p);
    if (e.kind == Expr::Kind::Chain) std::reverse(r.parts.begin(), r.parts.end());
    return r;
}

Expr sharp(const Expr& e) {
    Expr r = e;
    if (e.kind == Expr::Kind::Leaf) return r;
    for (auto& p : r.parts) p = sharp(p);
    if (e.kind == Expr::Kind::Tensor) std::reverse(r.parts.begin(), r.parts.end());
    return r;
}

std::vector<RelationSpec> brauer_relations(bool with_transforms) {
    auto P = [](const std::string& t) { return parse_expr(t); };
    std::vector<RelationSpec> base = {
        {"identity-I", P("I ; I"), P("I")},
        {"identity-X", P("I I ; X"), P("X")},
        {"identity-A", P("A ; I I"), P("A")},
        {"identity-U", P("I I ; U"), P("U")},
        {"xx", P("X ; X"), P("I I")},
        {"braid", P("X I ; I X ; X I"), P("I X ; X I ; I X")},
        {"ax", P("A ; X"), P("A")},
        {"au", P("A ; U"), delta_power(1)},
        {"slide", P("A I ; I X"), P("I A ; X I")},
        {"straight", P("A I ; I U"), P("I")},
    };
    if (!with_transforms) return base;
    std::vector<RelationSpec> out = base;
    for (const auto& r : base) {
        out.push_back({r.name + "*", star(r.lhs), star(r.rhs)});
        out.push_back({r.name + "#", sharp(r.lhs), sharp(r.rhs)});
        out.push_back({r.name + "*#", sharp(star(r.lhs)), sharp(star(r.rhs))});
    }
    return out;
}

std::vector<std::pair<std::string, Expr>> oriented_macros() {
    std::vector<std::pair<std::string, Expr>> m;
    auto add = [&](const std::string& name, const std::string& text) { m.emplace_back(name, parse_expr(text, m)); };
    add("A2+", "A+ ; I- A+ I+");      // source - - + +
    add("U2+", "I+ U+ I- ; U+");      // target + + - -
    add("A2-", "A- ; I+ A- I-");      // source + + - -
    add("U2-", "I- U- I+ ; U-");      // target - - + +
    add("X--", "A2+ I- I- ; I- I- X I- I- ; I- I- U2+");
    add("Xmp", "A+ I+ I- ; I- X I- ; I- I+ U+"); // (-,+) -> (+,-)
    add("Xpm", "I- I+ A- ; I- X I- ; U- I+ I-"); // (+,-) -> (-,+)
    return m;
}

std::vector<RelationSpec> oriented_relations() {
    auto m = oriented_macros();
    auto P = [&](const std::string& t) { return parse_expr(t, m); };
    return {
        {"a:involution", P("X ; X"), P("I+ I+")},
        {"b:braid", P("X I+ ; I+ X ; X I+"), P("I+ X ; X I+ ; I+ X")},
        {"c:straight-1", P("I+ A+ ; U+ I+"), P("I+")},
        {"c:straight-2", P("A+ I- ; I- U+"), P("I-")},
        {"c:straight-3", P("A- I+ ; I+ U-"), P("I+")},
        {"c:straight-4", P("I- A- ; U- I-"), P("I-")},
        {"d:reversed-crossing", P("X--"), P("I- I- A2- ; I- I- X I- I- ; U2- I- I-")},
        {"e:slide-1", P("Xmp ; Xpm"), P("I+ I-")},
        {"e:slide-2", P("Xpm ; Xmp"), P("I- I+")},
        {"f:de-loop", P("I+ A- ; X I- ; I+ U+"), P("I+")},
        {"g:loop+", P("A+ ; U-"), delta_power(1)},
        {"g:loop-", P("A- ; U+"), delta_power(1)},
    };
}

} // namespace bk
