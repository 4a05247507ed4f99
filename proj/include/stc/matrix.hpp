#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stc/scalars.hpp"

// Dense exact matrices over one of the scalar fields.  Rank / kernel / solve
// run a fraction-free (Bareiss) forward elimination after clearing row
// denominators, so intermediate entries stay in the subring and are bounded
// by minors of the input.

namespace stc {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix conj_transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = conj((*this)(i, j));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (int(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> out(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool all_zero() const {
        for (const T& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    // Horizontal concatenation [A | B].
    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hcat shape mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
        }
        return m;
    }

    static Matrix vcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vcat shape mismatch");
        Matrix m(a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
        return m;
    }

    static Matrix from_columns(int rows, const std::vector<std::vector<T>>& cols) {
        Matrix m(rows, int(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            assert(int(cols[j].size()) == rows);
            for (int i = 0; i < rows; ++i) m(i, int(j)) = cols[j][i];
        }
        return m;
    }

    std::vector<T> column(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

namespace detail {

template <typename T>
struct EchelonForm {
    Matrix<T> r;                 // upper echelon, fraction-free
    std::vector<int> pivot_col;  // per pivot row, ascending
    int rank = 0;
};

// Fraction-free Bareiss elimination.  Rows are first scaled by the lcm of
// their denominators, which changes neither rank, kernel, nor solvability
// (for solve, the right-hand side lives in the trailing columns and is
// scaled along with the row).
template <typename T>
EchelonForm<T> echelon(Matrix<T> m) {
    const int rows = m.rows(), cols = m.cols();
    for (int i = 0; i < rows; ++i) {
        Integer l(1);
        for (int j = 0; j < cols; ++j) {
            Integer dj = denominator_lcm(m(i, j));
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dj.get_mpz_t());
        }
        if (l != 1) {
            T f = T(Rational(l));
            for (int j = 0; j < cols; ++j) m(i, j) = m(i, j) * f;
        }
    }

    EchelonForm<T> e;
    e.pivot_col.clear();
    T prev = T(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (!is_zero(m(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
        const T p = m(row, col);
        for (int i = row + 1; i < rows; ++i) {
            const T f = m(i, col);
            for (int j = col; j < cols; ++j)
                m(i, j) = (m(i, j) * p - f * m(row, j)) / prev;
        }
        prev = p;
        e.pivot_col.push_back(col);
        ++row;
    }
    e.rank = row;
    e.r = std::move(m);
    return e;
}

}  // namespace detail

template <typename T>
int rank(const Matrix<T>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::echelon(m).rank;
}

/// Basis of the right kernel; size cols - rank.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    const int cols = m.cols();
    std::vector<std::vector<T>> basis;
    if (cols == 0) return basis;
    if (m.rows() == 0) {
        for (int f = 0; f < cols; ++f) {
            std::vector<T> v(cols, T(0));
            v[f] = T(1);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto e = detail::echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (int r = e.rank - 1; r >= 0; --r) {
            int pc = e.pivot_col[r];
            if (pc > f) continue;
            T acc = T(0);
            for (int j = pc + 1; j < cols; ++j)
                if (!is_zero(v[j])) acc += e.r(r, j) * v[j];
            v[pc] = -acc * inv(e.r(r, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of m x = rhs, or nullopt when inconsistent.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& rhs) {
    if (int(rhs.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const int cols = m.cols();
    Matrix<T> aug(m.rows(), cols + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = rhs[i];
    }
    auto e = detail::echelon(aug);
    if (e.rank > 0 && e.pivot_col[e.rank - 1] == cols) return std::nullopt;
    std::vector<T> x(cols, T(0));
    for (int r = e.rank - 1; r >= 0; --r) {
        int pc = e.pivot_col[r];
        T acc = e.r(r, cols);
        for (int j = pc + 1; j < cols; ++j)
            if (!is_zero(x[j])) acc -= e.r(r, j) * x[j];
        x[pc] = acc * inv(e.r(r, pc));
    }
    return x;
}

/// Solvability of m x = rhs without materializing a solution.
template <typename T>
bool solvable(const Matrix<T>& m, const std::vector<T>& rhs) {
    return solve(m, rhs).has_value();
}

template <typename T>
T det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const int n = m.rows();
    T result = T(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!is_zero(m(i, col))) { piv = i; break; }
        if (piv < 0) return T(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            result = -result;
        }
        result = result * m(col, col);
        const T ip = inv(m(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            const T f = m(i, col) * ip;
            for (int j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return result;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<T> aug = Matrix<T>::hcat(m, Matrix<T>::identity(n));
    // Gauss-Jordan over the field.
    int row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!is_zero(aug(i, col))) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != row)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(row, j));
        const T ip = inv(aug(row, col));
        for (int j = 0; j < 2 * n; ++j) aug(row, j) = aug(row, j) * ip;
        for (int i = 0; i < n; ++i) {
            if (i == row || is_zero(aug(i, col))) continue;
            const T f = aug(i, col);
            for (int j = 0; j < 2 * n; ++j) aug(i, j) = aug(i, j) - f * aug(row, j);
        }
        ++row;
    }
    if (row < n) return std::nullopt;
    Matrix<T> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/// Characteristic polynomial coefficients c_0..c_n of lambda^n + c_{n-1} lambda^{n-1} + ...
/// via Faddeev-LeVerrier; returned low degree first, monic coefficient included.
template <typename T>
std::vector<T> charpoly(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    const int n = m.rows();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix<T> mk = Matrix<T>::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        T tr = T(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        T ck = -tr * inv(T(k));
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

/// rank of [span_a | span_b] - rank span_a == 0, i.e. columns of b lie in the
/// column span of a.
template <typename T>
bool columns_contained(const Matrix<T>& a, const Matrix<T>& b) {
    if (b.cols() == 0) return true;
    if (a.cols() == 0) return b.all_zero();
    return rank(Matrix<T>::hcat(a, b)) == rank(a);
}

/// Basis (as columns) of the intersection of two column spans.
template <typename T>
Matrix<T> column_span_intersection(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), 0);
    Matrix<T> joint = Matrix<T>::hcat(a, b);
    auto ker = kernel_basis(joint);
    std::vector<std::vector<T>> cols;
    for (const auto& v : ker) {
        std::vector<T> w(a.rows(), T(0));
        for (int j = 0; j < a.cols(); ++j)
            if (!is_zero(v[j]))
                for (int i = 0; i < a.rows(); ++i) w[i] += a(i, j) * v[j];
        cols.push_back(std::move(w));
    }
    Matrix<T> raw = Matrix<T>::from_columns(a.rows(), cols);
    // prune to an independent subset
    auto e = detail::echelon(raw);
    std::vector<std::vector<T>> keep;
    for (int c : e.pivot_col) keep.push_back(raw.column(c));
    return Matrix<T>::from_columns(a.rows(), keep);
}

/// Independent column selection (in order); returns kept column indices.
template <typename T>
std::vector<int> independent_columns(const Matrix<T>& m) {
    if (m.cols() == 0) return {};
    return detail::echelon(m).pivot_col;
}

}  // namespace stc
