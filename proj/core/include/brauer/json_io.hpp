#pragma once

#include "brauer/dsum.hpp"
#include "brauer/functor.hpp"
#include "brauer/oriented.hpp"
#include "brauer/report.hpp"

#include <nlohmann/json.hpp>

namespace bk {

using json = nlohmann::ordered_json;

// All readers throw std::invalid_argument on malformed input.

// {"k","ell","pairs"} with 1-based nodes, bottom first
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

// {"diagram": ..., "loops": n}
json to_json(const ScaledDiagram& s);

// [["num/den", power], ...] in increasing power
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

// {"valency":[k,l], "terms":[{"pairs":..., "coeff":...}]}
json to_json(const DiagramSum& x);
DiagramSum sum_from_json(const json& j);

// diagram fields plus "tails" (1-based) and derived "source"/"target";
// on input the sign strings are optional and must agree with the tails
json to_json(const OrientedDiagram& d);
OrientedDiagram oriented_from_json(const json& j);

// {"rows","cols","entries"} dense, entries as rational strings
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
// the operator's matrix plus its group dimension and sign words;
// refuses to densify past the entry budget
json to_json(const TensorOperator& t);

// {"name", "pass", "checks":[{claim, lhs, rhs, pass}]}
json to_json(const Report& r);

// shape sniffing for inputs that may hold either kind
bool is_sum_json(const json& j);
bool is_oriented_json(const json& j);

} // namespace bk
