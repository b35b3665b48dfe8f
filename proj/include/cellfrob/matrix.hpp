#ifndef CELLFROB_MATRIX_HPP
#define CELLFROB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellfrob/scalar.hpp"

namespace cellfrob {

template <FieldScalar K>
using Vec = std::vector<K>;

/// Small dense row-major matrix over an exact field.  Immutable in spirit:
/// the algebra layers construct a matrix once and only read it afterwards.
template <FieldScalar K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n, one.zero());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, e_.empty() ? K() : e_.front().zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool is_zero() const {
        for (const K& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
            }
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        K z = a.e_.empty() ? (b.e_.empty() ? K() : b.e_.front().zero()) : a.e_.front().zero();
        Matrix p(a.rows_, b.cols_, z);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& ark = a.at(r, k);
                if (ark.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const K& bkc = b.at(k, c);
                    if (!bkc.is_zero()) p.at(r, c) += ark * bkc;
                }
            }
        return p;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum dimension mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.e_.size(); ++i) s.e_[i] += b.e_[i];
        return s;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference dimension mismatch");
        Matrix s = a;
        for (std::size_t i = 0; i < s.e_.size(); ++i) s.e_[i] -= b.e_[i];
        return s;
    }

    friend Matrix operator*(const K& s, const Matrix& m) {
        Matrix r = m;
        for (K& x : r.e_) x *= s;
        return r;
    }

    Vec<K> operator*(const Vec<K>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        K z = e_.empty() ? (v.empty() ? K() : v.front().zero()) : e_.front().zero();
        Vec<K> r(rows_, z);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    Vec<K> column(std::size_t c) const {
        Vec<K> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
        return v;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r ? "; " : "";
            for (std::size_t c = 0; c < cols_; ++c) s += (c ? " " : "") + at(r, c).str();
        }
        return s + "]";
    }

  private:
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

namespace detail {

/// In-place reduced row echelon form.  Pivot rule: for each column in order,
/// take the first row with a nonzero entry (deterministic, reproducible).
/// Returns the pivot columns.
template <FieldScalar K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pr, c));
        K inv = m.at(row, col).one() / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            K f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m.at(row, c).is_zero()) m.at(r, c) -= f * m.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

/// Rank over the exact field, by Gaussian elimination.
template <FieldScalar K>
std::size_t rank(Matrix<K> m) {
    return detail::rref(m).size();
}

/// Exact determinant by elimination with row swaps (sign tracked).
template <FieldScalar K>
K determinant(Matrix<K> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return K().one();
    K det = m.at(0, 0).one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m.at(pr, col).is_zero()) ++pr;
        if (pr == n) return m.at(0, 0).zero();
        if (pr != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(col, c), m.at(pr, c));
            det = -det;
        }
        det *= m.at(col, col);
        K inv = m.at(col, col).one() / m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            K f = m.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!m.at(col, c).is_zero()) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

/// Exact inverse; nullopt when the matrix is singular.
template <FieldScalar K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Matrix<K>();
    K zero = m.at(0, 0).zero();
    Matrix<K> aug(n, 2 * n, zero);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = m.at(0, 0).one();
    }
    auto pivots = detail::rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<K> inv(n, n, zero);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

/// Full solution set of a x = b: one particular solution plus a basis of the
/// kernel of a.  Empty optional when the system is inconsistent.
template <FieldScalar K>
struct AffineSolution {
    Vec<K> particular;
    std::vector<Vec<K>> nullspace;
};

template <FieldScalar K>
std::optional<AffineSolution<K>> solve_affine(const Matrix<K>& a, const Vec<K>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_affine dimension mismatch");
    K zero = b.empty() ? K() : b.front().zero();
    if (a.rows() > 0 && a.cols() > 0) zero = a.at(0, 0).zero();
    Matrix<K> aug(a.rows(), a.cols() + 1, zero);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // pivot in rhs column
    AffineSolution<K> sol;
    sol.particular.assign(a.cols(), zero);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        sol.particular[pivots[i]] = aug.at(i, a.cols());
    }
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<K> v(a.cols(), zero);
        v[free] = zero.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug.at(i, free);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

/// Basis of the kernel of a (convenience wrapper over solve_affine).
template <FieldScalar K>
std::vector<Vec<K>> nullspace(const Matrix<K>& a) {
    K zero = a.rows() > 0 && a.cols() > 0 ? a.at(0, 0).zero() : K();
    auto sol = solve_affine(a, Vec<K>(a.rows(), zero));
    return sol->nullspace;
}

} // namespace cellfrob

#endif
