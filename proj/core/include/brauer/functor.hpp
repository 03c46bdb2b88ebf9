#pragma once

#include "brauer/dsum.hpp"
#include "brauer/expr.hpp"
#include "brauer/linalg.hpp"
#include "brauer/oriented.hpp"
#include "brauer/word.hpp"

#include <string>
#include <vector>

namespace bk {

enum class GroupKind { O, SO, Sp, OSp, GL };

// The groups and their defining superspace. Basis: m even vectors, then
// `odd` odd ones. O/SO/Sp/OSp carry the form I_m ⊕ J ⊕ … ⊕ J.
struct GroupSpec {
    GroupKind kind = GroupKind::O;
    int m = 0;   // even dimension
    int odd = 0; // odd dimension (2n for Sp and OSp)

    static GroupSpec O(int m) { return {GroupKind::O, m, 0}; }
    static GroupSpec SO(int m) { return {GroupKind::SO, m, 0}; }
    static GroupSpec Sp(int twon) { return {GroupKind::Sp, 0, twon}; }
    static GroupSpec OSp(int m, int twon) { return {GroupKind::OSp, m, twon}; }
    static GroupSpec GL(int m, int n) { return {GroupKind::GL, m, n}; }
    // o3, so2, sp2, osp1|2, gl2|1
    static GroupSpec parse(const std::string& s);

    int dim() const { return m + odd; }
    int sdim() const { return m - odd; }
    int parity(int i) const { return i >= m ? 1 : 0; }
    bool has_form() const { return kind != GroupKind::GL; }
    Matrix gram() const;
    Matrix gram_inverse() const;
    std::string name() const;
};

// Exact operator V^η → V^ζ (η, ζ signed sequences; '-' factors are V*).
// Basis indices are mixed radix with the leftmost factor most significant.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(int d, Signs domain, Signs codomain, std::vector<SparseVec> columns);
    static TensorOperator zero(int d, const Signs& domain, const Signs& codomain);
    static TensorOperator identity(int d, const Signs& word);
    static TensorOperator from_matrix(int d, const Signs& domain, const Signs& codomain, const Matrix& m);

    int d() const { return d_; }
    const Signs& domain() const { return dom_; }
    const Signs& codomain() const { return cod_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    const std::vector<SparseVec>& columns() const { return cols_; }
    Rational entry(std::size_t i, std::size_t j) const { return cols_[j].get(i); }

    Matrix to_matrix() const;
    // column-major flattening, length rows·cols
    SparseVec flatten() const;
    bool is_zero() const;

    TensorOperator& operator+=(const TensorOperator& o);
    TensorOperator& operator*=(const Rational& c);
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator*(const Rational& c, TensorOperator a) { return a *= c; }
    bool operator==(const TensorOperator&) const = default;

private:
    int d_ = 0;
    Signs dom_, cod_;
    std::size_t rows_ = 1;
    std::vector<SparseVec> cols_;
};

std::string to_string(const TensorOperator& t);
void PrintTo(const TensorOperator& t, std::ostream* os);

// a after b
TensorOperator compose(const TensorOperator& a, const TensorOperator& b);
TensorOperator tensor(const TensorOperator& a, const TensorOperator& b);

std::size_t tensor_dim(int d, std::size_t length);
// parity of a basis tensor of the given length
int index_parity(const GroupSpec& g, std::size_t index, std::size_t length);

// the generator images: P, Č, Ĉ, id on V for form groups; for GL also the
// dual and mixed variants named as the oriented generators
TensorOperator generator_op(const GroupSpec& g, const std::string& name);

struct FunctorSemantics {
    using value_type = TensorOperator;
    GroupSpec group;
    value_type leaf(const std::string& name) const { return generator_op(group, name); }
    value_type unit() const { return TensorOperator::identity(group.dim(), ""); }
    value_type tensor(const value_type& a, const value_type& b) const { return bk::tensor(a, b); }
    value_type compose(const value_type& after, const value_type& before) const { return bk::compose(after, before); }
    value_type scale_delta(const value_type& v, int loops) const;
};

TensorOperator functor(const GroupSpec& g, const Diagram& d);
// coefficients are specialised at δ = sdim V
TensorOperator functor(const GroupSpec& g, const DiagramSum& x);
// through an explicit regular expression instead of the canonical one
TensorOperator functor(const GroupSpec& g, const Word& w);
TensorOperator functor(const GroupSpec& g, const OrientedDiagram& d);

// adjoint for the form ((v₁⊗…⊗v_t, w₁⊗…⊗w_t)) = ±Π (v_i, w_i), Koszul-signed
TensorOperator adjoint(const GroupSpec& g, const TensorOperator& op);
Rational supertrace(const GroupSpec& g, const TensorOperator& op);

// Lie (super)algebra basis acting on V, homogeneous; parity per element
struct LieBasis {
    std::vector<Matrix> elements;
    std::vector<int> parity;
};
LieBasis lie_basis(const GroupSpec& g);

// Basis of the even G-equivariant maps V^η → V^ζ, found by solving the
// commutation equations with every Lie generator (plus diag(-1,1,…,1) for O and OSp).
std::vector<TensorOperator> equivariant_hom(const GroupSpec& g, const Signs& domain, const Signs& codomain);
std::size_t equivariant_dim(const GroupSpec& g, const Signs& domain, const Signs& codomain);
// x·op − op·x (super)commutator with the action on the two tensor words; zero iff equivariant
bool is_equivariant(const GroupSpec& g, const TensorOperator& op);

// relations of the generator images for form groups and for GL
std::vector<RelationSpec> osp_functor_relations();
std::vector<RelationSpec> gl_functor_relations();

} // namespace bk
