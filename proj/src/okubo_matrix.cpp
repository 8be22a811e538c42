#include "okubo/okubo_matrix.hpp"

#include <random>
#include <stdexcept>

namespace okubo {

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

ComplexQuad mat3_trace(const Mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

Mat3 mat3_adjoint(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i].conj();
  return r;
}

bool HermTraceless3::valid(const Mat3& m) { return mat3_adjoint(m) == m && mat3_trace(m).is_zero(); }

HermTraceless3::HermTraceless3(const Mat3& m) : m_(m) {
  if (!valid(m)) throw std::invalid_argument("matrix is not Hermitian traceless");
}

HermTraceless3 operator+(const HermTraceless3& a, const HermTraceless3& b) {
  HermTraceless3 r = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] += b.m_[i][j];
  return r;
}

HermTraceless3 operator-(const HermTraceless3& a, const HermTraceless3& b) {
  HermTraceless3 r = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m_[i][j] -= b.m_[i][j];
  return r;
}

HermTraceless3 operator*(const QuadExt& s, const HermTraceless3& a) {
  HermTraceless3 r = a;
  for (auto& row : r.m_)
    for (auto& x : row) x = ComplexQuad(s) * x;
  return r;
}

std::array<HermTraceless3, kDim> MatrixBasis::all() const {
  return {e, ek[0], ek[1], ek[2], ek[3], ek[4], ek[5], ek[6]};
}

MatrixBasis build_basis() {
  const ComplexQuad s3(QuadExt::sqrt3());
  const ComplexQuad is3(QuadExt(0), QuadExt::sqrt3());
  auto sym = [&](int a, int b, const ComplexQuad& upper) {
    Mat3 m{};
    m[a][b] = upper;
    m[b][a] = upper.conj();
    return HermTraceless3(m);
  };
  MatrixBasis b;
  Mat3 e{};
  e[0][0] = 2;
  e[1][1] = -1;
  e[2][2] = -1;
  b.e = HermTraceless3(e);
  b.ek[0] = sym(0, 1, s3);
  b.ek[1] = sym(0, 2, s3);
  b.ek[2] = sym(1, 2, s3);
  Mat3 d{};
  d[0][0] = s3;
  d[1][1] = -s3;
  b.ek[3] = HermTraceless3(d);
  b.ek[4] = sym(0, 1, -is3);
  b.ek[5] = sym(0, 2, -is3);
  b.ek[6] = sym(1, 2, -is3);
  return b;
}

ComplexQuad okubo_mu() { return {QuadExt(Rational(1, 2)), QuadExt(Rational(0), Rational(1, 6))}; }

HermTraceless3 matrix_mul(const HermTraceless3& x, const HermTraceless3& y) {
  const ComplexQuad mu = okubo_mu();
  const Mat3 xy = mat3_mul(x.m(), y.m());
  const Mat3 yx = mat3_mul(y.m(), x.m());
  const ComplexQuad third = ComplexQuad(QuadExt(Rational(1, 3))) * mat3_trace(xy);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = mu * xy[i][j] + mu.conj() * yx[i][j];
  for (int i = 0; i < 3; ++i) r[i][i] -= third;
  return HermTraceless3(r);
}

namespace {

QuadExt real_part_checked(const ComplexQuad& z) {
  if (!z.im().is_zero()) throw std::logic_error("trace of a Hermitian product is not real");
  return z.re();
}

}  // namespace

QuadExt matrix_norm(const HermTraceless3& x) {
  return real_part_checked(mat3_trace(mat3_mul(x.m(), x.m()))) * QuadExt(Rational(1, 6));
}

QuadExt matrix_form(const HermTraceless3& x, const HermTraceless3& y) {
  return real_part_checked(mat3_trace(mat3_mul(x.m(), y.m()))) * QuadExt(Rational(1, 3));
}

HermTraceless3 kaplansky(const HermTraceless3& e, const HermTraceless3& x, const HermTraceless3& y) {
  return matrix_mul(matrix_mul(e, x), matrix_mul(y, e));
}

Mat3 jordan_half(const HermTraceless3& x, const HermTraceless3& y) {
  const Mat3 xy = mat3_mul(x.m(), y.m());
  const Mat3 yx = mat3_mul(y.m(), x.m());
  Mat3 r{};
  const ComplexQuad h(QuadExt(Rational(1, 2)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = h * (xy[i][j] + yx[i][j]);
  return r;
}

HermTraceless3 combine(const std::array<HermTraceless3, kDim>& basis, const std::array<QuadExt, kDim>& c) {
  HermTraceless3 r;
  for (int k = 0; k < kDim; ++k)
    if (!c[k].is_zero()) r = r + c[k] * basis[k];
  return r;
}

namespace {

std::vector<QuadExt> flatten(const HermTraceless3& x) {
  std::vector<QuadExt> v;
  for (const auto& row : x.m())
    for (const auto& z : row) {
      v.push_back(z.re());
      v.push_back(z.im());
    }
  return v;
}

}  // namespace

std::optional<std::array<QuadExt, kDim>> coordinates(const std::array<HermTraceless3, kDim>& basis,
                                                     const HermTraceless3& x) {
  Matrix<QuadExt> rows;
  for (const auto& b : basis) rows.push_back(flatten(b));
  const auto c = coordinates_in(rows, flatten(x));
  if (!c) return std::nullopt;
  std::array<QuadExt, kDim> out{};
  std::copy(c->begin(), c->end(), out.begin());
  return out;
}

std::array<QuadExt, kDim> sample_coords(std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  std::array<QuadExt, kDim> c{};
  for (auto& x : c) x = QuadExt(Rational(static_cast<long>(rng() % 9) - 4, 2));
  return c;
}

MatrixLawsReport verify_laws(std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  const MatrixBasis mb = build_basis();
  const auto basis = mb.all();
  const HermTraceless3& e = mb.e;
  MatrixLawsReport r;
  r.samples = samples;
  r.idempotent = matrix_mul(e, e) == e;

  r.gram = zero_matrix<QuadExt>(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r.gram[i][j] = matrix_form(basis[i], basis[j]);
  r.signature = signature(r.gram);

  auto check_pair = [&](const HermTraceless3& x, const HermTraceless3& y, const HermTraceless3& z) {
    const HermTraceless3 xy = matrix_mul(x, y);
    const HermTraceless3 yx = matrix_mul(y, x);
    if (!HermTraceless3::valid(xy.m())) ++r.type_failures;
    if (!mat3_trace(xy.m()).is_zero()) ++r.trace_failures;
    if (matrix_mul(x, yx) != matrix_mul(xy, x)) ++r.flexibility_failures;
    if (matrix_norm(xy) != matrix_norm(x) * matrix_norm(y)) ++r.composition_failures;
    if (matrix_form(matrix_mul(x, z), y) != matrix_form(x, matrix_mul(z, y))) ++r.form_assoc_failures;
    const HermTraceless3 kxy = kaplansky(e, x, y);
    if (matrix_norm(kxy) != matrix_norm(x) * matrix_norm(y)) ++r.kaplansky_composition_failures;
    if (kaplansky(e, x, kaplansky(e, x, y)) != kaplansky(e, kaplansky(e, x, x), y))
      ++r.kaplansky_alternative_failures;
    if (jordan_half(x, y) != jordan_half(y, x)) ++r.jordan_commutative_failures;
    if (!mat3_trace(jordan_half(x, y)).is_zero()) r.jordan_leaves_type = true;
  };
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) check_pair(basis[i], basis[j], basis[(i + 2 * j + 1) % kDim]);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = combine(basis, sample_coords(seed, 3 * s));
    const auto y = combine(basis, sample_coords(seed, 3 * s + 1));
    const auto z = combine(basis, sample_coords(seed, 3 * s + 2));
    check_pair(x, y, z);
  }
  for (const auto& x : basis)
    if (kaplansky(e, x, e) != x || kaplansky(e, e, x) != x) ++r.kaplansky_unit_failures;

  // A two-sided unit u would solve u * b = b and b * u = b for every basis b.
  Matrix<QuadExt> rows(kDim);
  std::vector<QuadExt> target;
  for (int k = 0; k < kDim; ++k)
    for (const auto& b : basis) {
      for (const auto& v : flatten(matrix_mul(basis[k], b))) rows[k].push_back(v);
      for (const auto& v : flatten(matrix_mul(b, basis[k]))) rows[k].push_back(v);
    }
  for (const auto& b : basis)
    for (int t = 0; t < 2; ++t)
      for (const auto& v : flatten(b)) target.push_back(v);
  r.has_unit = coordinates_in(rows, target).has_value();
  return r;
}

namespace {

using Constants = std::array<std::array<std::array<QuadExt, kDim>, kDim>, kDim>;

struct MatchSearch {
  const Constants& m;  // matrix side, orthonormal basis f
  const Constants& p;  // Petersson side, basis e
  BasisMatch cur;
  std::array<bool, kDim> used{};
  std::size_t leaves = 0;
  std::optional<BasisMatch> found;

  bool consistent(int upto) const {
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j)
        for (int k = 0; k <= upto; ++k) {
          if (i != upto && j != upto && k != upto) continue;
          const int s = cur.sign[i] * cur.sign[j] * cur.sign[k];
          if (QuadExt(s) * p[cur.perm[i]][cur.perm[j]][cur.perm[k]] != m[i][j][k]) return false;
        }
    return true;
  }

  void rec(int k) {
    if (found) return;
    if (k == kDim) {
      ++leaves;
      // All 512 constants are covered once every index is assigned.
      found = cur;
      return;
    }
    for (int t = 1; t < kDim; ++t) {
      if (used[t]) continue;
      for (int s : {1, -1}) {
        cur.perm[k] = t;
        cur.sign[k] = s;
        if (!consistent(k)) continue;
        used[t] = true;
        rec(k + 1);
        used[t] = false;
        if (found) return;
      }
    }
  }
};

Constants matrix_constants(const std::array<HermTraceless3, kDim>& basis) {
  Constants c{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const auto x = coordinates(basis, matrix_mul(basis[i], basis[j]));
      if (!x) throw std::logic_error("product left the matrix span");
      c[i][j] = *x;
    }
  return c;
}

}  // namespace

CrossRealizationReport cross_realization(const Algebra& alg) {
  const MatrixBasis mb = build_basis();
  const auto raw = mb.all();
  auto ortho = raw;
  ortho[4] = QuadExt(2) * raw[4] - QuadExt::sqrt3() * raw[0];

  Constants pc{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) pc[i][j] = alg.okubo_mul(basis_elem(i), basis_elem(j));

  CrossRealizationReport r;
  r.raw_basis_orthonormal = true;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (matrix_form(raw[i], raw[j]) != QuadExt(i == j ? 2 : 0)) r.raw_basis_orthonormal = false;

  const Constants rc = matrix_constants(raw);
  const Constants oc = matrix_constants(ortho);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (rc[i][j] == pc[i][j]) ++r.raw_matches;
      if (oc[i][j] == pc[i][j]) ++r.orthonormal_matches;
    }

  MatchSearch s{oc, pc, {}, {}, 0, std::nullopt};
  s.cur.perm[0] = 0;
  s.cur.sign[0] = 1;
  s.used[0] = true;
  if (s.consistent(0)) s.rec(1);
  r.intertwiner = s.found;
  r.candidates = s.leaves;
  return r;
}

}  // namespace okubo
