#pragma once

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over a field (Rational or QuadExt).
 */

#include "okubo/quad_ext.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace okubo {

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
Matrix<F> zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix<F>(rows, std::vector<F>(cols, F(0)));
}

template <typename F>
Matrix<F> transpose(const Matrix<F>& a) {
  if (a.empty()) return {};
  Matrix<F> t = zero_matrix<F>(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <typename F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Matrix<F> r = zero_matrix<F>(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

/// Determinant by Gaussian elimination with exact field operations.
template <typename F>
F determinant(Matrix<F> a) {
  const std::size_t n = a.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const F f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Inverse of a square matrix; nullopt when singular.
template <typename F>
std::optional<Matrix<F>> inverse(Matrix<F> a) {
  const std::size_t n = a.size();
  Matrix<F> inv = zero_matrix<F>(n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const F piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const F f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/**
 * Coordinates of v in the span of the given rows: returns x with
 * sum_i x_i rows[i] = v, or nullopt if v is outside the span. The rows must be
 * linearly independent.
 */
template <typename F>
std::optional<std::vector<F>> coordinates_in(const Matrix<F>& rows, const std::vector<F>& v) {
  const std::size_t r = rows.size();
  const std::size_t n = v.size();
  // Augmented system A x = v with A = rows^T (n x r).
  Matrix<F> a = zero_matrix<F>(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
    a[i][r] = v[i];
  }
  std::vector<std::size_t> pivot_row(r);
  std::size_t row = 0;
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::invalid_argument("coordinates_in: rows are dependent");
    std::swap(a[p], a[row]);
    const F piv = a[row][c];
    for (std::size_t j = c; j <= r; ++j) a[row][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const F f = a[i][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!a[i][r].is_zero()) return std::nullopt;
  std::vector<F> x(r);
  for (std::size_t c = 0; c < r; ++c) x[c] = a[pivot_row[c]][r];
  return x;
}

/// Diagonal pivots of the LDL^T factorization of a symmetric matrix, without
/// pivoting. Stops early (shorter result) at the first zero pivot.
template <typename F>
std::vector<F> ldl_pivots(Matrix<F> a) {
  const std::size_t n = a.size();
  std::vector<F> d;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c][c].is_zero()) return d;
    d.push_back(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const F f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

/// Exact positive-definiteness test: all n LDL pivots positive.
template <typename F>
bool is_positive_definite(const Matrix<F>& a) {
  const auto d = ldl_pivots(a);
  if (d.size() != a.size()) return false;
  for (const auto& p : d)
    if (p.sign() <= 0) return false;
  return true;
}

/// (positive, negative) counts of a nondegenerate symmetric matrix via
/// symmetric elimination with diagonal pivoting. nullopt when degenerate.
template <typename F>
std::optional<std::pair<int, int>> signature(Matrix<F> a) {
  const std::size_t n = a.size();
  int pos = 0;
  int neg = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][p].is_zero()) ++p;
    if (p == n) {
      // Zero diagonal: add a row/column q with a[c][q] != 0 to c.
      std::size_t q = c + 1;
      while (q < n && a[c][q].is_zero()) ++q;
      if (q == n) return std::nullopt;
      for (std::size_t j = 0; j < n; ++j) a[c][j] += a[q][j];
      for (std::size_t j = 0; j < n; ++j) a[j][c] += a[j][q];
      p = c;
    }
    if (p != c) {
      std::swap(a[p], a[c]);
      for (auto& row : a) std::swap(row[p], row[c]);
    }
    (a[c][c].sign() > 0 ? pos : neg)++;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const F f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return std::pair{pos, neg};
}

}  // namespace okubo
