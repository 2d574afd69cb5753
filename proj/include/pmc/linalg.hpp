#ifndef PMC_LINALG_HPP
#define PMC_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/rational.hpp"

namespace pmc {

using RowVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.sign() == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline RowVector vec_mat_mul(const RowVector& v, const Matrix& m) {
    if (v.size() != m.rows()) throw DimensionError("vector-matrix product shape mismatch");
    RowVector out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].sign() == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

inline Rational dot(const RowVector& a, const RowVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product shape mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Every entry in [0,1] and every row sums to exactly 1.
inline bool is_stochastic(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& p = m.at(i, j);
            if (p < Rational(0) || p > Rational(1)) return false;
            sum += p;
        }
        if (sum != Rational(1)) return false;
    }
    return true;
}

/// Entries in [0,1] summing to exactly 1.
inline bool validate_distribution(const RowVector& v) {
    Rational sum(0);
    for (const Rational& p : v) {
        if (p < Rational(0) || p > Rational(1)) return false;
        sum += p;
    }
    return sum == Rational(1);
}

/// Exact Gaussian elimination, first nonzero pivot. `a` must be square and
/// nonsingular over the rationals.
inline RowVector solve_linear_system(const Matrix& a, const RowVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("solve_linear_system needs a square matrix");
    if (b.size() != n) throw DimensionError("right-hand side length mismatch");

    // Augmented copy.
    Matrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, n) = b[i];
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).sign() == 0) ++pivot;
        if (pivot == n) throw SingularSystemError("singular system (no pivot in column " +
                                                  std::to_string(col) + ")");
        if (pivot != col)
            for (std::size_t j = col; j <= n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        const Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t j = col; j <= n; ++j) m.at(col, j) *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m.at(row, col).sign() == 0) continue;
            const Rational factor = m.at(row, col);
            for (std::size_t j = col; j <= n; ++j) m.at(row, j) -= factor * m.at(col, j);
        }
    }

    RowVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m.at(i, n);
    return x;
}

}  // namespace pmc

#endif
