#pragma once

#include "brauer/poly.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bk {

// Sparse rational vector: strictly increasing indices, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVec() = default;
    static SparseVec from_map(const std::map<std::size_t, Rational>& m);
    static SparseVec unit(std::size_t i, Rational c = 1);

    const std::vector<Entry>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    std::size_t nnz() const { return e_.size(); }
    Rational get(std::size_t i) const;

    // this += c·o
    void axpy(const Rational& c, const SparseVec& o);
    void scale(const Rational& c);
    // unchecked append, index must exceed every stored one
    void push_back(std::size_t i, Rational c);

    bool operator==(const SparseVec&) const = default;

private:
    std::vector<Entry> e_;
};

Rational dot(const SparseVec& a, const SparseVec& b);

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const;
    bool is_zero() const;
    Rational trace() const;
    SparseVec row(std::size_t i) const;
    SparseVec column(std::size_t j) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& q, const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
// throws std::domain_error when singular
Matrix inverse(const Matrix& a);

// Reduced row echelon form, built one row at a time.
class Echelon {
public:
    explicit Echelon(std::size_t ncols) : n_(ncols) {}

    std::size_t ncols() const { return n_; }
    std::size_t rank() const { return rows_.size(); }

    // returns true when the row was independent of the rows so far
    bool insert(const SparseVec& row);
    // v reduced against the stored rows; empty iff v lies in their span
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // basis of {x : r·x = 0 for every stored row r}, ordered by free column
    std::vector<SparseVec> nullspace() const;
    // the stored rows, ordered by pivot
    std::vector<SparseVec> basis() const;

private:
    std::size_t n_;
    std::map<std::size_t, SparseVec> rows_; // pivot column -> row with 1 at pivot
};

std::size_t rank_of(const std::vector<SparseVec>& vs, std::size_t ncols);

// entry budget for exact operators; env BRAUER_KIT_BUDGET overrides the default
std::size_t default_budget();
void set_budget(std::size_t entries);
std::size_t budget();

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
void check_budget(std::size_t entries, const std::string& what);

// worker threads for the heavy loops (default 1); results never depend on it
void set_threads(unsigned n);
unsigned threads();
// runs fn(0..n-1) on the worker threads; rethrows the first exception
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace bk
