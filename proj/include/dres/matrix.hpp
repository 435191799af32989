#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pert.hpp"

namespace dres {

/// Dense row-major matrix over a commutative ring.
template <typename R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  R& operator()(int r, int c) { return a_[idx(r, c)]; }
  const R& operator()(int r, int c) const { return a_[idx(r, c)]; }

  /// Copy without row r.
  Matrix without_row(int r) const {
    Matrix m(rows_ - 1, cols_);
    for (int i = 0, k = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (int j = 0; j < cols_; ++j) m(k, j) = (*this)(i, j);
      ++k;
    }
    return m;
  }
  Matrix select_rows(const std::vector<int>& rs) const {
    Matrix m(static_cast<int>(rs.size()), cols_);
    for (std::size_t k = 0; k < rs.size(); ++k)
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(k), j) = (*this)(rs[k], j);
    return m;
  }
  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    Matrix<decltype(f(std::declval<const R&>()))> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  void swap_rows(int r1, int r2) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> a_;
};

template <typename R>
Matrix<R> identity(int n) {
  Matrix<R> m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ring_one<R>();
  return m;
}

/// Determinant.  Over a field: Gaussian elimination.  Over K[p]: Bareiss
/// fraction-free elimination with exact division.
template <typename R>
R det(Matrix<R> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return ring_one<R>();
  bool negate = false;
  if constexpr (is_field_v<R>) {
    R acc(1);
    for (int k = 0; k < n; ++k) {
      int piv = k;
      while (piv < n && is_zero_coeff(m(piv, k))) ++piv;
      if (piv == n) return R{};
      if (piv != k) {
        m.swap_rows(piv, k);
        negate = !negate;
      }
      const R inv = R(1) / m(k, k);
      acc = acc * m(k, k);
      for (int i = k + 1; i < n; ++i) {
        if (is_zero_coeff(m(i, k))) continue;
        const R f = m(i, k) * inv;
        for (int j = k + 1; j < n; ++j)
          if (!is_zero_coeff(m(k, j))) m(i, j) = m(i, j) - f * m(k, j);
      }
    }
    return negate ? R(-acc) : acc;
  } else {
    R prev = ring_one<R>();
    for (int k = 0; k < n - 1; ++k) {
      int piv = k;
      while (piv < n && is_zero_coeff(m(piv, k))) ++piv;
      if (piv == n) return R{};
      if (piv != k) {
        m.swap_rows(piv, k);
        negate = !negate;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) {
          R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
          m(i, j) = prev.degree() == 0 ? v.scaled(prev.lead().inverse()) : divexact(v, prev);
        }
        m(i, k) = R{};
      }
      prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
  }
}

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// In-place reduced row echelon form over a field, first-nonzero pivoting.
template <typename R>
Echelon rref(Matrix<R>& m) {
  static_assert(is_field_v<R>, "rref needs a field");
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = r;
    while (piv < m.rows() && is_zero_coeff(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const R inv = R(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j)
      if (!is_zero_coeff(m(r, j))) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero_coeff(m(i, c))) continue;
      const R f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero_coeff(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

/// Rank over a field by forward elimination.
template <typename R>
int rank(Matrix<R> m) {
  static_assert(is_field_v<R>, "rank needs a field");
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = r;
    while (piv < m.rows() && is_zero_coeff(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const R inv = R(1) / m(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (is_zero_coeff(m(i, c))) continue;
      const R f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j)
        if (!is_zero_coeff(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace dres
