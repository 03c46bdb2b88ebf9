#include "brauer/json_io.hpp"

#include <stdexcept>
#include <string>

namespace bk {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Rational rational_of(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    bad("rational must be a string \"num/den\" or an integer");
}

std::vector<std::pair<int, int>> pairs_of(const json& v) {
    if (!v.is_array()) bad("'pairs' must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& p : v) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            bad("each pair must be [a,b]");
        out.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return out;
}

json pairs_json(const Diagram& d) {
    json arr = json::array();
    for (auto [a, b] : d.pairs()) arr.push_back({a, b});
    return arr;
}

} // namespace

json to_json(const Diagram& d) {
    json j;
    j["k"] = d.k();
    j["ell"] = d.ell();
    j["pairs"] = pairs_json(d);
    return j;
}

Diagram diagram_from_json(const json& j) {
    return Diagram(int_field(j, "k"), int_field(j, "ell"), pairs_of(field(j, "pairs")));
}

json to_json(const ScaledDiagram& s) {
    json j;
    j["diagram"] = to_json(s.diagram);
    j["loops"] = s.loops;
    return j;
}

json to_json(const Poly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) arr.push_back({to_string(p.coeff(i)), i});
    return arr;
}

Poly poly_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Poly(rational_of(j));
    if (!j.is_array()) bad("coefficient must be [[\"num/den\", power], ...]");
    Poly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_number_integer() || t[1].get<int>() < 0)
            bad("coefficient term must be [\"num/den\", power]");
        p += Poly::delta(t[1].get<int>()) * rational_of(t[0]);
    }
    return p;
}

json to_json(const DiagramSum& x) {
    json j;
    j["valency"] = {x.k(), x.ell()};
    json terms = json::array();
    for (const auto& [d, c] : x.terms()) {
        json t;
        t["pairs"] = pairs_json(d);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

DiagramSum sum_from_json(const json& j) {
    const json& v = field(j, "valency");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        bad("'valency' must be [k,l]");
    const int k = v[0].get<int>(), ell = v[1].get<int>();
    if (k < 0 || ell < 0 || (k + ell) % 2) throw ValencyError("valency " + to_string(Valency{k, ell}));
    DiagramSum x(k, ell);
    const json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    for (const auto& t : terms) x.add_term(Diagram(k, ell, pairs_of(field(t, "pairs"))), poly_from_json(field(t, "coeff")));
    return x;
}

json to_json(const OrientedDiagram& d) {
    json j = to_json(d.diagram());
    json tails = json::array();
    for (int n = 0; n < d.diagram().nodes(); ++n)
        if (d.is_tail(n)) tails.push_back(n + 1);
    j["tails"] = std::move(tails);
    j["source"] = d.source();
    j["target"] = d.target();
    return j;
}

OrientedDiagram oriented_from_json(const json& j) {
    const Diagram d = diagram_from_json(j);
    OrientedDiagram od;
    if (j.contains("tails")) {
        const json& tl = j.at("tails");
        if (!tl.is_array()) bad("'tails' must be an array");
        std::vector<bool> tail(static_cast<std::size_t>(d.nodes()), false);
        for (const auto& n : tl) {
            if (!n.is_number_integer() || n.get<int>() < 1 || n.get<int>() > d.nodes()) bad("tail node out of range");
            tail[static_cast<std::size_t>(n.get<int>() - 1)] = true;
        }
        od = OrientedDiagram(d, std::move(tail));
    } else if (j.contains("source") && j.contains("target")) {
        od = OrientedDiagram::from_signs(d, j.at("source").get<std::string>(), j.at("target").get<std::string>());
    } else {
        bad("oriented diagram needs 'tails' or 'source'/'target'");
    }
    if (j.contains("source") && j.at("source").get<std::string>() != od.source()) bad("'source' disagrees with the tails");
    if (j.contains("target") && j.at("target").get<std::string>() != od.target()) bad("'target' disagrees with the tails");
    return od;
}

json to_json(const Matrix& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const json& j) {
    const int r = int_field(j, "rows"), c = int_field(j, "cols");
    if (r < 0 || c < 0) bad("negative matrix size");
    const json& e = field(j, "entries");
    if (!e.is_array() || e.size() != static_cast<std::size_t>(r)) bad("'entries' must have 'rows' rows");
    Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!e[i].is_array() || e[i].size() != m.cols()) bad("matrix row of the wrong length");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rational_of(e[i][k]);
    }
    return m;
}

json to_json(const TensorOperator& t) {
    check_budget(t.rows() * t.cols(), "dense output");
    json j = to_json(t.to_matrix());
    j["dim"] = t.d();
    j["domain"] = t.domain();
    j["codomain"] = t.codomain();
    return j;
}

json to_json(const Report& r) {
    json j;
    j["name"] = r.name;
    j["pass"] = r.ok();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["claim"] = c.claim;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

bool is_sum_json(const json& j) { return j.is_object() && j.contains("terms"); }

bool is_oriented_json(const json& j) {
    return j.is_object() && (j.contains("tails") || j.contains("source") || j.contains("target"));
}

} // namespace bk
