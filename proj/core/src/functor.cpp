#include "brauer/functor.hpp"

#include "brauer/semantics.hpp"
#include "brauer/word.hpp"

#include <map>
#include <stdexcept>

namespace bk {

// ---- groups ---------------------------------------------------------------

GroupSpec GroupSpec::parse(const std::string& s) {
    auto num = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad group '" + s + "'");
        return std::stoi(t);
    };
    auto split = [&](const std::string& t) {
        auto bar = t.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("bad group '" + s + "', expected a|b");
        return std::make_pair(num(t.substr(0, bar)), num(t.substr(bar + 1)));
    };
    if (s.rfind("osp", 0) == 0) {
        auto [m, n] = split(s.substr(3));
        if (n % 2) throw std::invalid_argument("odd part of osp must be even");
        return OSp(m, n);
    }
    if (s.rfind("gl", 0) == 0) {
        auto [m, n] = split(s.substr(2));
        return GL(m, n);
    }
    if (s.rfind("so", 0) == 0) return SO(num(s.substr(2)));
    if (s.rfind("sp", 0) == 0) {
        int n = num(s.substr(2));
        if (n % 2) throw std::invalid_argument("sp needs an even dimension");
        return Sp(n);
    }
    if (s.rfind("o", 0) == 0) return O(num(s.substr(1)));
    throw std::invalid_argument("unknown group '" + s + "'");
}

std::string GroupSpec::name() const {
    switch (kind) {
    case GroupKind::O: return "O(" + std::to_string(m) + ")";
    case GroupKind::SO: return "SO(" + std::to_string(m) + ")";
    case GroupKind::Sp: return "Sp(" + std::to_string(odd) + ")";
    case GroupKind::OSp: return "OSp(" + std::to_string(m) + "|" + std::to_string(odd) + ")";
    case GroupKind::GL: return "GL(" + std::to_string(m) + "|" + std::to_string(odd) + ")";
    }
    return {};
}

Matrix GroupSpec::gram() const {
    if (!has_form()) throw std::invalid_argument(name() + " carries no bilinear form");
    Matrix g(static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
    for (int i = 0; i < m; ++i) g(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    for (int i = m; i + 1 < dim(); i += 2) {
        g(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
        g(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i)) = -1;
    }
    return g;
}

Matrix GroupSpec::gram_inverse() const { return inverse(gram()); }

// ---- operators ------------------------------------------------------------

std::size_t tensor_dim(int d, std::size_t length) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < length; ++i) n *= static_cast<std::size_t>(d);
    return n;
}

int index_parity(const GroupSpec& g, std::size_t index, std::size_t length) {
    int p = 0;
    const std::size_t d = static_cast<std::size_t>(g.dim());
    for (std::size_t i = 0; i < length; ++i) {
        p ^= g.parity(static_cast<int>(index % d));
        index /= d;
    }
    return p;
}

TensorOperator::TensorOperator(int d, Signs domain, Signs codomain, std::vector<SparseVec> columns)
    : d_(d), dom_(std::move(domain)), cod_(std::move(codomain)), cols_(std::move(columns)) {
    rows_ = tensor_dim(d_, cod_.size());
    if (cols_.size() != tensor_dim(d_, dom_.size())) throw std::invalid_argument("operator has the wrong column count");
    std::size_t nnz = 0;
    for (const auto& c : cols_) nnz += c.nnz();
    check_budget(nnz, "operator " + dom_ + "->" + cod_);
}

TensorOperator TensorOperator::zero(int d, const Signs& domain, const Signs& codomain) {
    return TensorOperator(d, domain, codomain, std::vector<SparseVec>(tensor_dim(d, domain.size())));
}

TensorOperator TensorOperator::identity(int d, const Signs& word) {
    std::vector<SparseVec> c(tensor_dim(d, word.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = SparseVec::unit(i);
    return TensorOperator(d, word, word, std::move(c));
}

TensorOperator TensorOperator::from_matrix(int d, const Signs& domain, const Signs& codomain, const Matrix& m) {
    std::vector<SparseVec> c(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) c[j] = m.column(j);
    TensorOperator t(d, domain, codomain, std::move(c));
    if (t.rows() != m.rows()) throw std::invalid_argument("matrix has the wrong row count");
    return t;
}

Matrix TensorOperator::to_matrix() const {
    Matrix m(rows_, cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, c] : cols_[j].entries()) m(i, j) = c;
    return m;
}

SparseVec TensorOperator::flatten() const {
    SparseVec v;
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, c] : cols_[j].entries()) v.push_back(j * rows_ + i, c);
    return v;
}

bool TensorOperator::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
    if (o.d_ != d_ || o.dom_ != dom_ || o.cod_ != cod_) throw std::invalid_argument("adding operators of different shape");
    for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j].axpy(1, o.cols_[j]);
    return *this;
}

TensorOperator& TensorOperator::operator*=(const Rational& c) {
    for (auto& col : cols_) col.scale(c);
    return *this;
}

std::string to_string(const TensorOperator& t) {
    std::string s = "[" + (t.domain().empty() ? std::string("()") : t.domain()) + "->" +
                    (t.codomain().empty() ? std::string("()") : t.codomain()) + "]";
    for (std::size_t j = 0; j < t.cols(); ++j) {
        s += " c" + std::to_string(j) + ":{";
        bool first = true;
        for (const auto& [i, c] : t.columns()[j].entries()) {
            s += (first ? "" : ",") + std::to_string(i) + "=" + bk::to_string(c);
            first = false;
        }
        s += "}";
    }
    return s;
}

void PrintTo(const TensorOperator& t, std::ostream* os) { *os << to_string(t); }

TensorOperator compose(const TensorOperator& a, const TensorOperator& b) {
    if (a.d() != b.d() || a.domain() != b.codomain())
        throw std::invalid_argument("cannot compose operators: " + b.codomain() + " vs " + a.domain());
    std::vector<SparseVec> cols(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bc = b.columns()[j].entries();
        if (bc.size() == 1) {
            cols[j] = a.columns()[bc[0].first];
            cols[j].scale(bc[0].second);
            continue;
        }
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, c] : bc)
            for (const auto& [i, x] : a.columns()[k].entries()) acc[i] += c * x;
        cols[j] = SparseVec::from_map(acc);
    }
    return TensorOperator(a.d(), b.domain(), a.codomain(), std::move(cols));
}

TensorOperator tensor(const TensorOperator& a, const TensorOperator& b) {
    if (a.d() != b.d()) throw std::invalid_argument("tensoring operators over different spaces");
    const std::size_t rb = b.rows();
    std::vector<SparseVec> cols;
    cols.reserve(a.cols() * b.cols());
    std::size_t na = 0, nb = 0;
    for (const auto& c : a.columns()) na += c.nnz();
    for (const auto& c : b.columns()) nb += c.nnz();
    check_budget(na * nb, "tensor product");
    for (std::size_t ca = 0; ca < a.cols(); ++ca)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
            SparseVec v;
            for (const auto& [ra, x] : a.columns()[ca].entries())
                for (const auto& [rr, y] : b.columns()[cb].entries()) v.push_back(ra * rb + rr, x * y);
            cols.push_back(std::move(v));
        }
    return TensorOperator(a.d(), a.domain() + b.domain(), a.codomain() + b.codomain(), std::move(cols));
}

namespace {

Rational sgn(int p) { return p ? Rational(-1) : Rational(1); }

TensorOperator swap_op(const GroupSpec& g, const Signs& in) {
    const std::size_t d = static_cast<std::size_t>(g.dim());
    std::vector<SparseVec> cols(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            cols[a * d + b] = SparseVec::unit(b * d + a, sgn(g.parity(static_cast<int>(a)) * g.parity(static_cast<int>(b))));
    return TensorOperator(g.dim(), in, Signs{in[1], in[0]}, std::move(cols));
}

} // namespace

TensorOperator generator_op(const GroupSpec& g, const std::string& name) {
    const int d = g.dim();
    const std::size_t ud = static_cast<std::size_t>(d);
    if (g.has_form()) {
        if (name == "I") return TensorOperator::identity(d, "+");
        if (name == "X") return swap_op(g, "++");
        if (name == "U") {
            Matrix gi = g.gram_inverse();
            SparseVec v;
            for (std::size_t i = 0; i < ud; ++i)
                for (std::size_t k = 0; k < ud; ++k) v.push_back(i * ud + k, gi(i, k));
            return TensorOperator(d, "", "++", {v});
        }
        if (name == "A") {
            Matrix gm = g.gram();
            std::vector<SparseVec> cols(ud * ud);
            for (std::size_t i = 0; i < ud; ++i)
                for (std::size_t j = 0; j < ud; ++j) cols[i * ud + j] = SparseVec::unit(0, gm(i, j));
            return TensorOperator(d, "++", "", std::move(cols));
        }
        throw std::invalid_argument("unknown generator '" + name + "' for " + g.name());
    }
    if (name == "I+") return TensorOperator::identity(d, "+");
    if (name == "I-") return TensorOperator::identity(d, "-");
    if (name == "X") return swap_op(g, "++");
    if (name.size() == 3 && name[0] == 'P') {
        Signs in = name.substr(1);
        check_signs(in);
        return swap_op(g, in);
    }
    if (name == "U+" || name == "U-") {
        SparseVec v;
        for (std::size_t i = 0; i < ud; ++i)
            v.push_back(i * ud + i, name == "U+" ? Rational(1) : sgn(g.parity(static_cast<int>(i))));
        return TensorOperator(d, "", name == "U+" ? "+-" : "-+", {v});
    }
    if (name == "A+" || name == "A-") {
        std::vector<SparseVec> cols(ud * ud);
        for (std::size_t i = 0; i < ud; ++i)
            cols[i * ud + i] = SparseVec::unit(0, name == "A+" ? Rational(1) : sgn(g.parity(static_cast<int>(i))));
        return TensorOperator(d, name == "A+" ? "-+" : "+-", "", std::move(cols));
    }
    throw std::invalid_argument("unknown generator '" + name + "' for " + g.name());
}

TensorOperator FunctorSemantics::scale_delta(const TensorOperator& v, int loops) const {
    Rational s = 1;
    for (int i = 0; i < loops; ++i) s *= group.sdim();
    return s * v;
}

TensorOperator functor(const GroupSpec& g, const Word& w) {
    if (!g.has_form()) throw std::invalid_argument("unoriented diagrams need a group with a form");
    return evaluate_expr(word_expr(w), FunctorSemantics{g});
}

TensorOperator functor(const GroupSpec& g, const Diagram& d) { return functor(g, from_diagram(d)); }

TensorOperator functor(const GroupSpec& g, const DiagramSum& x) {
    TensorOperator out = TensorOperator::zero(g.dim(), Signs(static_cast<std::size_t>(x.k()), '+'),
                                              Signs(static_cast<std::size_t>(x.ell()), '+'));
    for (const auto& [d, c] : x.terms()) {
        Rational v = c.eval(g.sdim());
        if (v != 0) out += v * functor(g, d);
    }
    return out;
}

TensorOperator functor(const GroupSpec& g, const OrientedDiagram& d) {
    if (g.kind != GroupKind::GL) throw std::invalid_argument("oriented diagrams map to GL spaces");
    return evaluate_expr(oriented_word_expr(d), FunctorSemantics{g});
}

namespace {

// Gram matrix of ((v₁⊗…⊗v_t, w₁⊗…⊗w_t)) = ± Π (v_i, w_i), the sign from moving
// each w_j past the v_i with i > j
Matrix tensor_form(const GroupSpec& g, std::size_t t) {
    const std::size_t d = static_cast<std::size_t>(g.dim()), n = tensor_dim(g.dim(), t);
    const Matrix gm = g.gram();
    Matrix b(n, n);
    std::vector<std::size_t> v(t), w(t);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t rx = x, ry = y;
            for (std::size_t i = t; i-- > 0;) {
                v[i] = rx % d;
                w[i] = ry % d;
                rx /= d;
                ry /= d;
            }
            Rational val = 1;
            for (std::size_t i = 0; i < t && val != 0; ++i) val *= gm(v[i], w[i]);
            if (val == 0) continue;
            int sign = 0;
            for (std::size_t j = 0; j < t; ++j)
                for (std::size_t i = j + 1; i < t; ++i)
                    sign ^= g.parity(static_cast<int>(v[i])) & g.parity(static_cast<int>(w[j]));
            b(x, y) = sign ? -val : val;
        }
    return b;
}

} // namespace

TensorOperator adjoint(const GroupSpec& g, const TensorOperator& op) {
    for (char c : op.domain() + op.codomain())
        if (c != '+') throw std::invalid_argument("adjoint needs words in V only");
    check_budget(op.rows() * op.cols(), "adjoint");
    Matrix bt = tensor_form(g, op.domain().size()), bs = tensor_form(g, op.codomain().size());
    Matrix a = inverse(bt) * op.to_matrix().transpose() * bs;
    return TensorOperator::from_matrix(g.dim(), op.codomain(), op.domain(), a);
}

Rational supertrace(const GroupSpec& g, const TensorOperator& op) {
    if (op.domain() != op.codomain()) throw std::invalid_argument("supertrace of a non-square operator");
    Rational s = 0;
    for (std::size_t i = 0; i < op.cols(); ++i) {
        Rational e = op.entry(i, i);
        if (e != 0) s += sgn(index_parity(g, i, op.domain().size())) * e;
    }
    return s;
}

// ---- Lie algebras and the equivariance oracle ------------------------------

LieBasis lie_basis(const GroupSpec& g) {
    const std::size_t d = static_cast<std::size_t>(g.dim());
    LieBasis out;
    if (!g.has_form()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Matrix e(d, d);
                e(i, j) = 1;
                out.elements.push_back(e);
                out.parity.push_back(g.parity(static_cast<int>(i)) ^ g.parity(static_cast<int>(j)));
            }
        return out;
    }
    // (x b_a, b_b) + (-1)^{[x][a]} (b_a, x b_b) = 0, solved one parity at a time
    const Matrix gm = g.gram();
    for (int p = 0; p < 2; ++p) {
        std::vector<std::size_t> unknown(d * d, SIZE_MAX);
        std::vector<std::pair<std::size_t, std::size_t>> pos;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if ((g.parity(static_cast<int>(i)) ^ g.parity(static_cast<int>(j))) == p) {
                    unknown[i * d + j] = pos.size();
                    pos.emplace_back(i, j);
                }
        Echelon eq(pos.size());
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                std::map<std::size_t, Rational> row;
                Rational s = sgn(p * g.parity(static_cast<int>(a)));
                for (std::size_t i = 0; i < d; ++i) {
                    if (unknown[i * d + a] != SIZE_MAX && gm(i, b) != 0) row[unknown[i * d + a]] += gm(i, b);
                    if (unknown[i * d + b] != SIZE_MAX && gm(a, i) != 0) row[unknown[i * d + b]] += s * gm(a, i);
                }
                eq.insert(SparseVec::from_map(row));
            }
        for (const auto& v : eq.nullspace()) {
            Matrix x(d, d);
            for (const auto& [u, c] : v.entries()) x(pos[u].first, pos[u].second) = c;
            out.elements.push_back(x);
            out.parity.push_back(p);
        }
    }
    return out;
}

namespace {

// action of x on V^η as a sparse operator; odd x picks up Koszul signs
TensorOperator lie_action(const GroupSpec& g, const Matrix& x, int px, const Signs& word) {
    const std::size_t d = static_cast<std::size_t>(g.dim()), len = word.size();
    const std::size_t n = tensor_dim(g.dim(), len);
    std::vector<SparseVec> cols(n);
    std::vector<std::size_t> digit(len);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t rest = col;
        for (std::size_t i = len; i-- > 0;) {
            digit[i] = rest % d;
            rest /= d;
        }
        std::map<std::size_t, Rational> acc;
        int before = 0;
        std::size_t weight = n;
        for (std::size_t i = 0; i < len; ++i) {
            weight /= d;
            const std::size_t j = digit[i];
            const Rational koszul = sgn(px * before);
            for (std::size_t r = 0; r < d; ++r) {
                Rational c = word[i] == '+' ? x(r, j) : -sgn(px * g.parity(static_cast<int>(j))) * x(j, r);
                if (c == 0) continue;
                acc[col - j * weight + r * weight] += koszul * c;
            }
            before ^= g.parity(static_cast<int>(j));
        }
        cols[col] = SparseVec::from_map(acc);
    }
    return TensorOperator(g.dim(), word, word, std::move(cols));
}

bool has_reflection(const GroupSpec& g) {
    return (g.kind == GroupKind::O || g.kind == GroupKind::OSp) && g.m >= 1;
}

// sign of the reflection diag(-1,1,...,1) on a basis tensor
int reflection_sign(const GroupSpec& g, std::size_t index, std::size_t length) {
    const std::size_t d = static_cast<std::size_t>(g.dim());
    int s = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (index % d == 0) s ^= 1;
        index /= d;
    }
    return s;
}

} // namespace

std::vector<TensorOperator> equivariant_hom(const GroupSpec& g, const Signs& domain, const Signs& codomain) {
    if (g.has_form())
        for (char c : domain + codomain)
            if (c != '+') throw std::invalid_argument(g.name() + " uses words in V only");
    const std::size_t rows = tensor_dim(g.dim(), codomain.size()), cols = tensor_dim(g.dim(), domain.size());
    check_budget(rows * cols, "equivariant hom " + domain + "->" + codomain);
    // unknowns: even entries T(r,c), numbered column-major like flatten()
    std::vector<std::size_t> unknown(rows * cols, SIZE_MAX);
    std::vector<std::size_t> flat;
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            if (index_parity(g, r, codomain.size()) != index_parity(g, c, domain.size())) continue;
            if (has_reflection(g) && reflection_sign(g, r, codomain.size()) != reflection_sign(g, c, domain.size()))
                continue;
            unknown[c * rows + r] = flat.size();
            flat.push_back(c * rows + r);
        }
    Echelon eq(flat.size());
    const LieBasis lie = lie_basis(g);
    for (std::size_t e = 0; e < lie.elements.size(); ++e) {
        TensorOperator in = lie_action(g, lie.elements[e], lie.parity[e], domain);
        TensorOperator out = lie_action(g, lie.elements[e], lie.parity[e], codomain);
        // (out·T − T·in)(r,c) = Σ_k out(r,k)T(k,c) − Σ_k T(r,k)in(k,c)
        std::map<std::size_t, std::map<std::size_t, Rational>> rowsum; // equation (c*rows+r) -> terms
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t k = 0; k < rows; ++k) {
                std::size_t u = unknown[c * rows + k];
                if (u == SIZE_MAX) continue;
                for (const auto& [r, v] : out.columns()[k].entries()) rowsum[c * rows + r][u] += v;
            }
        for (std::size_t k = 0; k < cols; ++k)
            for (const auto& [kk, v] : in.columns()[k].entries()) {
                // in(kk, k): contributes −T(r,kk)·in(kk,k) to equation (r,k)
                for (std::size_t r = 0; r < rows; ++r) {
                    std::size_t u = unknown[kk * rows + r];
                    if (u == SIZE_MAX) continue;
                    rowsum[k * rows + r][u] -= v;
                }
            }
        for (const auto& [key, terms] : rowsum) {
            SparseVec row = SparseVec::from_map(terms);
            if (!row.empty()) eq.insert(row);
        }
        if (eq.rank() == flat.size()) break;
    }
    std::vector<TensorOperator> out;
    for (const auto& v : eq.nullspace()) {
        std::vector<SparseVec> colv(cols);
        std::vector<std::map<std::size_t, Rational>> tmp(cols);
        for (const auto& [u, c] : v.entries()) tmp[flat[u] / rows][flat[u] % rows] = c;
        for (std::size_t c = 0; c < cols; ++c) colv[c] = SparseVec::from_map(tmp[c]);
        out.emplace_back(g.dim(), domain, codomain, std::move(colv));
    }
    return out;
}

std::size_t equivariant_dim(const GroupSpec& g, const Signs& domain, const Signs& codomain) {
    return equivariant_hom(g, domain, codomain).size();
}

bool is_equivariant(const GroupSpec& g, const TensorOperator& op) {
    const LieBasis lie = lie_basis(g);
    for (std::size_t e = 0; e < lie.elements.size(); ++e) {
        auto in = lie_action(g, lie.elements[e], lie.parity[e], op.domain());
        auto out = lie_action(g, lie.elements[e], lie.parity[e], op.codomain());
        auto lhs = compose(out, op);
        auto rhs = compose(op, in);
        if (!(lhs == rhs)) return false;
    }
    if (has_reflection(g))
        for (std::size_t c = 0; c < op.cols(); ++c)
            for (const auto& [r, v] : op.columns()[c].entries())
                if (reflection_sign(g, r, op.codomain().size()) != reflection_sign(g, c, op.domain().size()))
                    return false;
    return true;
}

// ---- relation lists ---------------------------------------------------------

std::vector<RelationSpec> osp_functor_relations() {
    auto P = [](const std::string& t) { return parse_expr(t); };
    return {
        {"P^2=id", P("X ; X"), P("I I")},
        {"braid", P("X I ; I X ; X I"), P("I X ; X I ; I X")},
        {"P.Cv=Cv", P("X ; U"), P("U")},
        {"C^.P=C^", P("A ; X"), P("A")},
        {"C^.Cv=sdim", P("A ; U"), delta_power(1)},
        {"zigzag-left", P("A I ; I U"), P("I")},
        {"zigzag-right", P("I A ; U I"), P("I")},
        {"cap-slide", P("A I ; I X"), P("I A ; X I")},
        {"cup-slide", P("X I ; I U"), P("I X ; U I")},
    };
}

std::vector<RelationSpec> gl_functor_relations() {
    auto m = oriented_macros();
    auto P = [&](const std::string& t) { return parse_expr(t, m); };
    std::vector<RelationSpec> out;
    for (std::string e : {"++", "+-", "-+", "--"}) {
        std::string back{e[1], e[0]};
        std::string ids = std::string("I") + e[0] + " I" + e[1];
        out.push_back({"PP" + e, P("P" + back + " ; P" + e), P(ids)});
    }
    out.push_back({"braid", P("X I+ ; I+ X ; X I+"), P("I+ X ; X I+ ; I+ X")});
    out.push_back({"P--=cap2-cross-cup2", P("P--"), P("X--")});
    out.push_back({"P--=cup2-cross-cap2", P("P--"), P("I- I- A2- ; I- I- X I- I- ; U2- I- I-")});
    out.push_back({"P-+=rotated-cross", P("P-+"), P("Xmp")});
    out.push_back({"P+-=rotated-cross", P("P+-"), P("Xpm")});
    out.push_back({"C^+-.Cv+-=sdim", P("A- ; U+"), delta_power(1)});
    out.push_back({"C^-+.Cv-+=sdim", P("A+ ; U-"), delta_power(1)});
    out.push_back({"zigzag-V-left", P("A- I+ ; I+ U-"), P("I+")});
    out.push_back({"zigzag-V-right", P("I+ A+ ; U+ I+"), P("I+")});
    out.push_back({"zigzag-V*-left", P("A+ I- ; I- U+"), P("I-")});
    out.push_back({"zigzag-V*-right", P("I- A- ; U- I-"), P("I-")});
    out.push_back({"twist", P("I+ A- ; X I- ; I+ U+"), P("I+")});
    return out;
}

} // namespace bk
