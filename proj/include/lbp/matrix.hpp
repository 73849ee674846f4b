#pragma once

#include "lbp/errors.hpp"
#include "lbp/scalar.hpp"
#include "lbp/xpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lbp {

// Dense rows x cols matrix.
template <Ring S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw UsageError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix block(std::size_t rows, std::size_t cols, std::size_t row0 = 0, std::size_t col0 = 0) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw UsageError("matrix block out of range");
    Matrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

// Position of the first differing entry in row-major order, if any. Matrices
// of different shapes mismatch at (0, 0).
template <Ring S>
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::pair{i, j};
  return std::nullopt;
}

// Square lower-triangular matrix; row n stores entries (n, 0..n).
template <Ring S>
class LowerTriangularMatrix {
 public:
  LowerTriangularMatrix() = default;
  explicit LowerTriangularMatrix(std::size_t dim) {
    for (std::size_t n = 0; n < dim; ++n) rows_.emplace_back(n + 1, S(0));
  }
  explicit LowerTriangularMatrix(std::vector<std::vector<S>> rows) : rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n)
      if (rows_[n].size() != n + 1) throw UsageError("row " + std::to_string(n) + " of a lower-triangular matrix must have " + std::to_string(n + 1) + " entries");
  }

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<S>>& rows() const { return rows_; }
  const std::vector<S>& row(std::size_t n) const { return rows_.at(n); }
  S at(std::size_t n, std::size_t k) const { return k <= n ? rows_.at(n).at(k) : S(0); }
  void set(std::size_t n, std::size_t k, S v) {
    if (k > n) throw UsageError("entry above the diagonal of a lower-triangular matrix");
    rows_.at(n).at(k) = std::move(v);
  }

  LowerTriangularMatrix leading_block(std::size_t dim) const {
    if (dim > rows_.size()) throw UsageError("leading block larger than matrix");
    return LowerTriangularMatrix(std::vector<std::vector<S>>(rows_.begin(), rows_.begin() + dim));
  }

  Matrix<S> to_dense() const {
    Matrix<S> m(dimension(), dimension());
    for (std::size_t n = 0; n < dimension(); ++n)
      for (std::size_t k = 0; k <= n; ++k) m(n, k) = rows_[n][k];
    return m;
  }

  std::vector<S> column(std::size_t k) const {
    std::vector<S> col;
    for (std::size_t n = k; n < dimension(); ++n) col.push_back(rows_[n][k]);
    return col;
  }

  friend LowerTriangularMatrix operator*(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b) {
    if (a.dimension() != b.dimension()) throw UsageError("matrix dimension mismatch");
    LowerTriangularMatrix r(a.dimension());
    for (std::size_t n = 0; n < a.dimension(); ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        S acc(0);
        for (std::size_t j = k; j <= n; ++j) acc = acc + a.rows_[n][j] * b.rows_[j][k];
        r.rows_[n][k] = acc;
      }
    return r;
  }
  friend bool operator==(const LowerTriangularMatrix& a, const LowerTriangularMatrix& b) {
    return a.rows_ == b.rows_;
  }

  // Forward substitution; throws MathError on a zero diagonal entry.
  LowerTriangularMatrix inverse() const {
    const std::size_t d = dimension();
    LowerTriangularMatrix inv(d);
    for (std::size_t n = 0; n < d; ++n)
      if (rows_[n][n].is_zero()) throw MathError("singular lower-triangular matrix: zero at diagonal " + std::to_string(n));
    for (std::size_t k = 0; k < d; ++k) {
      inv.rows_[k][k] = S(1) / rows_[k][k];
      for (std::size_t n = k + 1; n < d; ++n) {
        S acc(0);
        for (std::size_t j = k; j < n; ++j)
          if (!rows_[n][j].is_zero()) acc = acc + rows_[n][j] * inv.rows_[j][k];
        inv.rows_[n][k] = -acc / rows_[n][n];
      }
    }
    return inv;
  }

 private:
  std::vector<std::vector<S>> rows_;
};

template <Ring S>
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const LowerTriangularMatrix<S>& a,
                                                                   const LowerTriangularMatrix<S>& b) {
  return first_mismatch(a.to_dense(), b.to_dense());
}

namespace detail {

// Fraction-free Gaussian elimination (Bareiss). Every division is exact in the
// ring generated by the entries, so polynomial entries stay polynomial.
template <Ring S>
S bareiss_determinant(Matrix<S> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (n == 0) return S(1);
  bool negate = false;
  S prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return S(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  const S det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace detail

template <Ring S>
S determinant(const Matrix<S>& m) {
  return detail::bareiss_determinant(m);
}

// Over Q(b, c) each row is first scaled by the product of its distinct
// denominators so elimination runs on polynomials; the scale is divided out
// once at the end.
template <>
inline RationalFunction determinant(const Matrix<RationalFunction>& m) {
  Matrix<RationalFunction> scaled = m;
  RationalFunction scale(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<BivarPoly> dens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BivarPoly& d = m(i, j).denominator();
      if (d.is_constant()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || e == d;
      if (!seen) dens.push_back(d);
    }
    if (dens.empty()) continue;
    BivarPoly row_scale(1);
    for (const auto& d : dens) row_scale = row_scale * d;
    for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = scaled(i, j) * RationalFunction(row_scale);
    scale *= RationalFunction(row_scale);
  }
  return detail::bareiss_determinant(std::move(scaled)) / scale;
}

// Determinant of the square matrix whose first rows are `top` (an n x (n+1)
// block) and whose last row is 1, x, ..., x^n, by Laplace expansion along the
// last row.
template <Ring S>
XPoly<S> bordered_determinant(const Matrix<S>& top) {
  const std::size_t n = top.rows();
  if (top.cols() != n + 1) throw UsageError("bordered determinant needs an n x (n+1) block");
  std::vector<S> coeffs(n + 1, S(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<S> minor(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j <= n; ++j) {
        if (j == k) continue;
        minor(i, jj++) = top(i, j);
      }
    const S cof = determinant(minor);
    coeffs[k] = ((n + k) % 2 == 0) ? cof : -cof;
  }
  return XPoly<S>(std::move(coeffs));
}

}  // namespace lbp
