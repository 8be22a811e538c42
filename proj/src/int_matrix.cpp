#include "okubo/int_matrix.hpp"

#include <stdexcept>

namespace okubo {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Integer int_determinant(const IntMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  IntMatrix a = in;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix hermite_form(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix a = m;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c over rows r..end until a single nonzero remains.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(s.size(), s.empty() ? 0 : s[0].size());
  for (std::size_t i = 0; i < k; ++i) d.push_back(s[i][i]);
  return d;
}

SmithForm smith_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm f{int_identity(rows), m, int_identity(cols)};
  auto& s = f.s;
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q row src
    for (std::size_t j = 0; j < cols; ++j) s[dst][j] -= q * s[src][j];
    for (std::size_t j = 0; j < rows; ++j) f.u[dst][j] -= q * f.u[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
    for (std::size_t i = 0; i < rows; ++i) s[i][dst] -= q * s[i][src];
    for (std::size_t i = 0; i < cols; ++i) f.v[i][dst] -= q * f.v[i][src];
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(s[a], s[b]);
    std::swap(f.u[a], f.u[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : s) std::swap(row[a], row[b]);
    for (auto& row : f.v) std::swap(row[a], row[b]);
  };

  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows;
      std::size_t pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s[i][j] != 0 && (pi == rows || abs(s[i][j]) < abs(s[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return f;  // trailing block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
        row_op(i, t, q);
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
        col_op(j, t, q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (mpz_divisible_p(s[i][j].get_mpz_t(), s[t][t].get_mpz_t()) == 0) {
            row_op(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s[t][t] < 0) {
      for (auto& x : s[t]) x = -x;
      for (auto& x : f.u[t]) x = -x;
    }
  }
  return f;
}

}  // namespace okubo
