#pragma once

#include <cstddef>
#include <vector>

#include "paralmi/error.hpp"
#include "paralmi/rational.hpp"

namespace paralmi {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator*(const Matrix& other) const {
        Matrix out(rows_, other.cols_, T());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += a * other(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& other) const {
        Matrix out = *this;
        for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
        return out;
    }

    Matrix scaled(const T& c) const {
        Matrix out = *this;
        for (auto& v : out.data_) v = v * c;
        return out;
    }

    T trace() const {
        T acc = T();
        for (size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
        return acc;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
        Matrix out(rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
        return out;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

// Determinant over any field type by Gaussian elimination with pivoting.
template <typename T>
T field_det(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::runtime_error("det of non-square matrix");
    size_t n = m.rows();
    T det = T();
    bool negate = false;
    if (n == 0) return det;  // caller treats empty det as 1 where needed
    // Start with multiplicative identity derived from the first nonzero pivot.
    std::vector<T> pivots;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col) == T()) ++piv;
        if (piv == n) return T();  // singular: zero of the field
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            negate = !negate;
        }
        pivots.push_back(m(col, col));
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T()) continue;
            T factor = m(i, col) / m(col, col);
            for (size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    det = pivots[0];
    for (size_t i = 1; i < pivots.size(); ++i) det = det * pivots[i];
    if (negate) det = T() - det;
    return det;
}

// Exact rank of a rational matrix (fraction-free Gaussian elimination).
inline size_t rational_rank(Matrix<Rational> m) {
    size_t rank = 0;
    size_t rows = m.rows(), cols = m.cols();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
        for (size_t i = row + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(row, col);
            for (size_t j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Coefficients (c_1..c_n) of det(lambda*I - A) = lambda^n + c_1 lambda^{n-1}
// + ... + c_n via the Faddeev-LeVerrier recurrence; exact over Q.
inline std::vector<Rational> char_poly(const Matrix<Rational>& a) {
    size_t n = a.rows();
    std::vector<Rational> coeffs(n);
    Matrix<Rational> m(n, n, Rational(0));
    for (size_t k = 1; k <= n; ++k) {
        if (k == 1) {
            m = a;
        } else {
            // M_k = A (M_{k-1} + c_{k-1} I)
            Matrix<Rational> tmp = m;
            for (size_t i = 0; i < n; ++i) tmp(i, i) += coeffs[k - 2];
            m = a * tmp;
        }
        coeffs[k - 1] = -m.trace() / Rational(static_cast<long>(k));
    }
    return coeffs;
}

struct SignatureResult {
    int rank = 0;
    int signature = 0;
};

// Exact rank and signature of a symmetric rational matrix, via Descartes'
// rule on the (real-rooted) characteristic polynomial.
inline SignatureResult signature(const Matrix<Rational>& m) {
    if (!m.is_symmetric()) throw NotSymmetric();
    size_t n = m.rows();
    std::vector<Rational> c = char_poly(m);
    // p(lambda) = lambda^n + c_1 lambda^{n-1} + ... + c_n, all roots real.
    // rank = n - multiplicity of the root 0; positives = sign variations.
    int rank = 0;
    for (size_t k = n; k >= 1; --k) {
        if (c[k - 1] != 0) {
            rank = static_cast<int>(k);
            break;
        }
    }
    int variations = 0;
    int prev = 1;  // leading coefficient of lambda^n
    for (size_t k = 1; k <= n; ++k) {
        int s = sign(c[k - 1]);
        if (s == 0) continue;
        if (s != prev) ++variations;
        prev = s;
    }
    SignatureResult out;
    out.rank = rank;
    out.signature = 2 * variations - rank;
    return out;
}

}  // namespace paralmi
