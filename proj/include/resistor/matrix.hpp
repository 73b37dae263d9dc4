#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "resistor/errors.hpp"
#include "resistor/scalar.hpp"

namespace resistor {

/// Dense row-major matrix over a scalar type.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, S fill = S(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init)
      for (const auto& x : row) data_.push_back(x);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

  /// Copy with row r and column c deleted.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(ii, jj) = (*this)(i, j);
        ++jj;
      }
      ++ii;
    }
    return m;
  }

  /// Copy with two rows and two columns deleted.
  Matrix minor_matrix2(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) const {
    Matrix m(rows_ - 2, cols_ - 2);
    for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
      if (i == r1 || i == r2) continue;
      for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
        if (j == c1 || j == c2) continue;
        m(ii, jj) = (*this)(i, j);
        ++jj;
      }
      ++ii;
    }
    return m;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

/*
 * Fraction-free (Bareiss) elimination. Over integers every intermediate
 * entry is a minor of the input, so growth is bounded by the final
 * determinant's size; over rationals it is simply exact.
 */
template <class S>
S det_bareiss(Matrix<S> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return S(1);
  S prev = S(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == S(0)) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == S(0)) ++p;
      if (p == n) return S(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = S(0);
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : S(-m(n - 1, n - 1));
}

/// Partial-pivot LU determinant for the float path.
inline double det_lu(Matrix<double> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

template <class S>
S determinant(const Matrix<S>& m) {
  if constexpr (is_exact_v<S>) {
    return det_bareiss(m);
  } else {
    return det_lu(m);
  }
}

namespace detail {

/// Gauss-Jordan on [A | B]; returns nullopt when A is singular.
template <class S>
std::optional<Matrix<S>> gauss_jordan(Matrix<S> a, Matrix<S> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    if constexpr (is_exact_v<S>) {
      while (p < n && a(p, k) == S(0)) ++p;
      if (p == n) return std::nullopt;
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (scalar_abs(a(i, k)) > scalar_abs(a(p, k))) p = i;
      if (a(p, k) == S(0)) return std::nullopt;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(p, j));
    }
    const S piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) a(k, j) = a(k, j) / piv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(k, j) = b(k, j) / piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == S(0)) continue;
      const S f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = b(i, j) - f * b(k, j);
    }
  }
  return b;
}

}  // namespace detail

/// Solves A x = rhs; singular A yields nullopt (explicit singularity result).
template <class S>
std::optional<std::vector<S>> try_solve(const Matrix<S>& a, const std::vector<S>& rhs) {
  Matrix<S> b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  auto x = detail::gauss_jordan(a, b);
  if (!x) return std::nullopt;
  std::vector<S> out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = (*x)(i, 0);
  return out;
}

template <class S>
std::vector<S> solve(const Matrix<S>& a, const std::vector<S>& rhs) {
  auto x = try_solve(a, rhs);
  if (!x) throw singular_error("solve: singular matrix");
  return *x;
}

template <class S>
std::optional<Matrix<S>> try_invert(const Matrix<S>& a) {
  return detail::gauss_jordan(a, Matrix<S>::identity(a.rows()));
}

template <class S>
Matrix<S> invert(const Matrix<S>& a) {
  auto inv = try_invert(a);
  if (!inv) throw singular_error("invert: singular matrix");
  return *inv;
}

template <class S>
std::vector<S> mat_vec(const Matrix<S>& a, const std::vector<S>& x) {
  std::vector<S> y(a.rows(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace resistor
