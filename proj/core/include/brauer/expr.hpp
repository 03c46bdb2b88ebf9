#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

// A small morphism expression: generator leaves combined by tensor and
// composition, times δ^loops.  Semantics are supplied by the caller, so the
// same relation list is checked on diagrams and on matrices.
struct Expr {
    enum class Kind { Leaf, Tensor, Chain };
    Kind kind = Kind::Tensor;
    std::string name;
    std::vector<Expr> parts; // Chain: top (applied last) first
    int loops = 0;

    bool operator==(const Expr&) const = default;
};

Expr leaf(const std::string& name);
Expr tensor_of(std::vector<Expr> factors);
Expr chain_of(std::vector<Expr> layers_top_first);
// the unit object identity scaled by δ^loops
Expr delta_power(int loops);

// "A I ; I U" : layers top to bottom split by ';', factors by spaces.
// Names found in macros are replaced by their expression.
Expr parse_expr(const std::string& text, const std::vector<std::pair<std::string, Expr>>& macros = {});
std::string to_string(const Expr& e);

// reflection in a horizontal line: chains reversed, A and U swapped
// (oriented names keep their sign suffix)
Expr star(const Expr& e);
// reflection in a vertical line: tensor factors reversed
Expr sharp(const Expr& e);

struct RelationSpec {
    std::string name;
    Expr lhs;
    Expr rhs;
};

// Brauer presentation relations; optionally with their * and ♯ images
std::vector<RelationSpec> brauer_relations(bool with_transforms = false);
// oriented presentation relations (a)-(g) over I+, I-, X, A+, A-, U+, U-
std::vector<RelationSpec> oriented_relations();
// named oriented composites used by the relations (A2+, U2+, A2-, U2-, X--, Xpm, Xmp)
std::vector<std::pair<std::string, Expr>> oriented_macros();

// Sem must provide: using value_type; value_type leaf(const std::string&) const;
// value_type unit() const; value_type tensor(const value_type&, const value_type&) const;
// value_type compose(const value_type& after, const value_type& before) const;
// value_type scale_delta(const value_type&, int loops) const.
template <class Sem>
typename Sem::value_type evaluate_expr(const Expr& e, const Sem& sem) {
    using V = typename Sem::value_type;
    V v;
    switch (e.kind) {
    case Expr::Kind::Leaf:
        v = sem.leaf(e.name);
        break;
    case Expr::Kind::Tensor: {
        v = sem.unit();
        bool first = true;
        for (const auto& p : e.parts) {
            V pv = evaluate_expr(p, sem);
            v = first ? pv : sem.tensor(v, pv);
            first = false;
        }
        break;
    }
    case Expr::Kind::Chain: {
        if (e.parts.empty()) throw std::invalid_argument("empty chain");
        v = evaluate_expr(e.parts.back(), sem);
        for (auto it = e.parts.rbegin() + 1; it != e.parts.rend(); ++it) v = sem.compose(evaluate_expr(*it, sem), v);
        break;
    }
    }
    return e.loops ? sem.scale_delta(v, e.loops) : v;
}

} // namespace bk
