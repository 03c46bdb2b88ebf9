#include "brauer/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bk {

SparseVec SparseVec::from_map(const std::map<std::size_t, Rational>& m) {
    SparseVec v;
    for (const auto& [i, c] : m)
        if (c != 0) v.e_.emplace_back(i, c);
    return v;
}

SparseVec SparseVec::unit(std::size_t i, Rational c) {
    SparseVec v;
    if (c != 0) v.e_.emplace_back(i, std::move(c));
    return v;
}

Rational SparseVec::get(std::size_t i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, std::size_t k) { return e.first < k; });
    return it != e_.end() && it->first == i ? it->second : Rational(0);
}

void SparseVec::axpy(const Rational& c, const SparseVec& o) {
    if (c == 0 || o.e_.empty()) return;
    if (&o == this) {
        scale(1 + c);
        return;
    }
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.cbegin();
    while (a != e_.end() || b != o.e_.cend()) {
        if (b == o.e_.cend() || (a != e_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == e_.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational s = a->second + c * b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
    if (c == 0) {
        e_.clear();
        return;
    }
    for (auto& e : e_) e.second *= c;
}

void SparseVec::push_back(std::size_t i, Rational c) {
    if (c != 0) e_.emplace_back(i, std::move(c));
}

Rational dot(const SparseVec& a, const SparseVec& b) {
    Rational s = 0;
    auto x = a.entries().begin(), y = b.entries().begin();
    while (x != a.entries().end() && y != b.entries().end()) {
        if (x->first < y->first) ++x;
        else if (y->first < x->first) ++y;
        else s += (x++)->second * (y++)->second;
    }
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0; });
}

Rational Matrix::trace() const {
    if (r_ != c_) throw std::invalid_argument("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
}

SparseVec Matrix::row(std::size_t i) const {
    SparseVec v;
    for (std::size_t j = 0; j < c_; ++j) v.push_back(j, (*this)(i, j));
    return v;
}

SparseVec Matrix::column(std::size_t j) const {
    SparseVec v;
    for (std::size_t i = 0; i < r_; ++i) v.push_back(i, (*this)(i, j));
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not match for product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& q, const Matrix& a) {
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= q;
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

Matrix inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix m = a, inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) throw std::domain_error("matrix is singular");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        Rational s = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec r = v;
    // rows are fully reduced, so pivot coefficients of v can be read up front
    std::vector<std::pair<const SparseVec*, Rational>> subs;
    for (const auto& [i, c] : v.entries()) {
        auto it = rows_.find(i);
        if (it != rows_.end()) subs.emplace_back(&it->second, -c);
    }
    for (const auto& [row, c] : subs) r.axpy(c, *row);
    return r;
}

bool Echelon::insert(const SparseVec& row) {
    for (const auto& e : row.entries())
        if (e.first >= n_) throw std::out_of_range("vector index beyond the echelon width");
    SparseVec r = reduce(row);
    if (r.empty()) return false;
    const std::size_t p = r.entries().front().first;
    r.scale(1 / r.entries().front().second);
    for (auto& [q, other] : rows_) {
        Rational c = other.get(p);
        if (c != 0) other.axpy(-c, r);
    }
    rows_.emplace(p, std::move(r));
    return true;
}

std::vector<SparseVec> Echelon::nullspace() const {
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < n_; ++f) {
        if (rows_.count(f)) continue;
        std::map<std::size_t, Rational> x;
        x[f] = 1;
        for (const auto& [p, row] : rows_) {
            Rational c = row.get(f);
            if (c != 0) x[p] = -c;
        }
        out.push_back(SparseVec::from_map(x));
    }
    return out;
}

std::vector<SparseVec> Echelon::basis() const {
    std::vector<SparseVec> out;
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

std::size_t rank_of(const std::vector<SparseVec>& vs, std::size_t ncols) {
    Echelon e(ncols);
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

namespace {
std::atomic<std::size_t> g_budget{0};
std::atomic<unsigned> g_threads{1};
}

void set_threads(unsigned n) { g_threads = n ? n : 1; }
unsigned threads() { return g_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads(), n));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::size_t default_budget() {
    if (const char* env = std::getenv("BRAUER_KIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

void set_budget(std::size_t entries) { g_budget = entries; }

std::size_t budget() {
    std::size_t b = g_budget;
    return b ? b : default_budget();
}

void check_budget(std::size_t entries, const std::string& what) {
    if (entries > budget())
        throw BudgetError(what + " needs " + std::to_string(entries) + " matrix entries, over the budget of " +
                          std::to_string(budget()));
}

} // namespace bk
