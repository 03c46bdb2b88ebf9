#pragma once

#include "brauer/expr.hpp"
#include "brauer/oriented.hpp"
#include "brauer/word.hpp"

namespace bk {

struct DiagramSemantics {
    using value_type = ScaledDiagram;
    value_type leaf(const std::string& name) const;
    value_type unit() const { return {empty_diagram(), 0}; }
    value_type tensor(const value_type& a, const value_type& b) const;
    value_type compose(const value_type& after, const value_type& before) const;
    value_type scale_delta(const value_type& v, int loops) const { return {v.diagram, v.loops + loops}; }
};

struct OrientedSemantics {
    using value_type = ScaledOriented;
    value_type leaf(const std::string& name) const { return {oriented_generator(name), 0}; }
    value_type unit() const { return {oriented_identity(""), 0}; }
    value_type tensor(const value_type& a, const value_type& b) const;
    value_type compose(const value_type& after, const value_type& before) const;
    value_type scale_delta(const value_type& v, int loops) const { return {v.diagram, v.loops + loops}; }
};

// the word as an expression over I, X, A, U
Expr word_expr(const Word& w);
// a slice-by-slice expression for an oriented diagram over I±, A±, U± and
// the crossings X (= P++), P+-, P-+, P--; built on from_diagram
Expr oriented_word_expr(const OrientedDiagram& d);

// evaluates both sides under the given semantics and compares exactly
template <class Sem>
bool relation_holds(const RelationSpec& r, const Sem& sem) {
    return evaluate_expr(r.lhs, sem) == evaluate_expr(r.rhs, sem);
}

} // namespace bk
