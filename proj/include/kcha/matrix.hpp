#ifndef KCHA_MATRIX_HPP
#define KCHA_MATRIX_HPP

#include <utility>
#include <vector>

#include "kcha/errors.hpp"
#include "kcha/ratfunc.hpp"
#include "kcha/rational.hpp"
#include "kcha/unipoly.hpp"

namespace kcha {

/// Dense rectangular matrix over a field element type (Rational or RatFunc).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return a_[idx(i, j)]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw MathError("matrix product dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero_elem(a(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("matrix sum dimension mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("matrix difference dimension mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const T& s) {
        Matrix r = a;
        for (auto& x : r.a_) x = x * s;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    static bool is_zero_elem(const Rational& x) { return x.is_zero(); }
    static bool is_zero_elem(const RatFunc& x) { return x.is_zero(); }

    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw MathError("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<T> a_;
};

namespace detail {
inline bool mat_zero(const Rational& x) { return x.is_zero(); }
inline bool mat_zero(const RatFunc& x) { return x.is_zero(); }
} // namespace detail

/// Determinant by field Gaussian elimination with partial (first nonzero)
/// pivoting. Exact over Rational and RatFunc.
template <class T>
T det_gauss(Matrix<T> m) {
    if (m.rows() != m.cols()) throw MathError("determinant of non-square matrix");
    const int n = m.rows();
    T det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!detail::mat_zero(m(i, k))) { piv = i; break; }
        if (piv < 0) return T(0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
            det = T(0) - det;
        }
        det = det * m(k, k);
        T inv = T(1) / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (detail::mat_zero(m(i, k))) continue;
            T f = m(i, k) * inv;
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

/// Fraction-free Bareiss determinant over the univariate polynomial ring;
/// every division is exact. Avoids rational-function blowup on polynomial
/// matrices.
inline UniPoly det_bareiss(std::vector<std::vector<UniPoly>> m, const std::string& var) {
    const int n = static_cast<int>(m.size());
    for (auto& row : m)
        if (static_cast<int>(row.size()) != n) throw MathError("determinant of non-square matrix");
    if (n == 0) return UniPoly::constant(var, Rational(1));
    UniPoly prev = UniPoly::constant(var, Rational(1));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return UniPoly(var);
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
            m[i][k] = UniPoly(var);
        }
        prev = m[k][k];
    }
    UniPoly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

/// matrix_det of the interface: Bareiss when every entry is a polynomial,
/// field elimination otherwise.
inline RatFunc matrix_det(const Matrix<RatFunc>& m) {
    if (m.rows() != m.cols()) throw MathError("determinant of non-square matrix");
    bool polynomial = true;
    std::string var;
    for (int i = 0; i < m.rows() && polynomial; ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).var().empty()) var = m(i, j).var();
            if (!m(i, j).is_polynomial()) { polynomial = false; break; }
        }
    if (!polynomial) return det_gauss(m);
    std::vector<std::vector<UniPoly>> p(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        p[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) p[static_cast<std::size_t>(i)].push_back(m(i, j).as_polynomial());
    }
    return RatFunc(det_bareiss(std::move(p), var));
}

inline Rational matrix_det(const Matrix<Rational>& m) { return det_gauss(m); }

/// In-place reduced row echelon form; returns the pivot column indices.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!detail::mat_zero(m(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || detail::mat_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the right null space, deterministic: reduced row echelon pivots,
/// each free variable set to 1 in symtab (column) order.
template <class T>
std::vector<std::vector<T>> matrix_kernel(Matrix<T> m) {
    const int cols = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<T> v(static_cast<std::size_t>(cols), T(0));
        v[static_cast<std::size_t>(free)] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = T(0) - m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
int matrix_rank(Matrix<T> m) {
    return static_cast<int>(rref(m).size());
}

/// Inverse by Gauss-Jordan; throws on singular input.
template <class T>
Matrix<T> matrix_inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw MathError("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw MathError("matrix is singular");
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace kcha

#endif
