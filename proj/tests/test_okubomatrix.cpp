#include "okubo/algebra.hpp"
#include "okubo/okubo_matrix.hpp"

#include <gtest/gtest.h>

using namespace okubo;

namespace {

HermTraceless3 sample_matrix(std::size_t i) { return combine(build_basis().all(), sample_coords(77, i)); }

Mat3 diag(const QuadExt& a, const QuadExt& b, const QuadExt& c) {
  Mat3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

}  // namespace

TEST(HermTraceless3, RejectsWrongType) {
  EXPECT_THROW(HermTraceless3(diag(QuadExt(1), QuadExt(0), QuadExt(0))), std::invalid_argument);
  Mat3 m{};
  m[0][1] = ComplexQuad::i();
  m[1][0] = ComplexQuad::i();  // not Hermitian
  EXPECT_FALSE(HermTraceless3::valid(m));
  EXPECT_THROW(HermTraceless3{m}, std::invalid_argument);
  m[1][0] = -ComplexQuad::i();
  EXPECT_TRUE(HermTraceless3::valid(m));
}

TEST(MatrixModel, MuAndIdempotent) {
  const ComplexQuad mu = okubo_mu();
  EXPECT_EQ(mu, ComplexQuad(QuadExt(Rational(1, 2)), QuadExt(Rational(0), Rational(1, 6))));
  // mu + conj(mu) = 1 and mu conj(mu) = 1/3.
  EXPECT_EQ(mu + mu.conj(), ComplexQuad(1));
  EXPECT_EQ(mu * mu.conj(), ComplexQuad(QuadExt(Rational(1, 3))));
  const MatrixBasis b = build_basis();
  EXPECT_EQ(b.e.m(), diag(QuadExt(2), QuadExt(-1), QuadExt(-1)));
  EXPECT_EQ(matrix_mul(b.e, b.e), b.e);
  EXPECT_EQ(matrix_norm(b.e), QuadExt(1));
}

TEST(MatrixModel, BasisNormsAndTheOffOrthogonalPair) {
  const auto all = build_basis().all();
  for (int i = 0; i < kDim; ++i) EXPECT_EQ(matrix_norm(all[i]), QuadExt(1)) << i;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      const QuadExt expected = (i == 0 && j == 4) ? QuadExt::sqrt3() : QuadExt(0);
      EXPECT_EQ(matrix_form(all[i], all[j]), expected) << i << "," << j;
    }
}

TEST(MatrixModel, ProductByHand) {
  // mu xy + conj(mu) yx - Tr(xy)/3 I, written out for two diagonal matrices.
  const HermTraceless3 x(diag(QuadExt(1), QuadExt(-1), QuadExt(0)));
  const HermTraceless3 y(diag(QuadExt(0), QuadExt(1), QuadExt(-1)));
  // xy = yx = diag(0, -1, 0), Tr = -1, so product = diag(1/3, -2/3, 1/3).
  const HermTraceless3 want(diag(QuadExt(Rational(1, 3)), QuadExt(Rational(-2, 3)), QuadExt(Rational(1, 3))));
  EXPECT_EQ(matrix_mul(x, y), want);
}

TEST(MatrixModel, LawsOnBasisAndSamples) {
  const auto r = verify_laws(100, 20240601);
  EXPECT_EQ(r.samples, 100u);
  EXPECT_TRUE(r.idempotent);
  EXPECT_EQ(r.type_failures, 0u);
  EXPECT_EQ(r.trace_failures, 0u);
  EXPECT_EQ(r.flexibility_failures, 0u);
  EXPECT_EQ(r.composition_failures, 0u);
  EXPECT_EQ(r.form_assoc_failures, 0u);
  EXPECT_FALSE(r.has_unit);
  ASSERT_TRUE(r.signature.has_value());
  EXPECT_EQ(*r.signature, (std::pair<int, int>{8, 0}));
  EXPECT_EQ(r.kaplansky_unit_failures, 0u);
  EXPECT_EQ(r.kaplansky_alternative_failures, 0u);
  EXPECT_EQ(r.kaplansky_composition_failures, 0u);
  EXPECT_EQ(r.jordan_commutative_failures, 0u);
  EXPECT_TRUE(r.jordan_leaves_type);
}

TEST(MatrixModel, KaplanskyUnitDirect) {
  const HermTraceless3 e = build_basis().e;
  for (std::size_t s = 0; s < 10; ++s) {
    const HermTraceless3 x = sample_matrix(s);
    EXPECT_EQ(kaplansky(e, e, x), x);
    EXPECT_EQ(kaplansky(e, x, e), x);
  }
}

TEST(MatrixModel, JordanFixtureLeavesTraceless) {
  const auto all = build_basis().all();
  const Mat3 j = jordan_half(all[1], all[1]);
  EXPECT_FALSE(mat3_trace(j).is_zero());
}

TEST(MatrixModel, CoordinatesRoundTrip) {
  const auto all = build_basis().all();
  for (std::size_t s = 0; s < 10; ++s) {
    const auto c = sample_coords(5, s);
    const auto back = coordinates(all, combine(all, c));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, c);
  }
  EXPECT_EQ(mat3_adjoint(build_basis().ek[0].m()), build_basis().ek[0].m());
}

TEST(CrossRealization, IntertwinerIsAnIsomorphism) {
  const Algebra alg(convention(default_convention_id()));
  const auto r = cross_realization(alg);
  EXPECT_FALSE(r.raw_basis_orthonormal);
  EXPECT_LT(r.raw_matches, 64u);
  ASSERT_TRUE(r.intertwiner.has_value());
  auto f = build_basis().all();
  f[4] = QuadExt(2) * f[4] - QuadExt::sqrt3() * f[0];
  const auto& m = *r.intertwiner;
  EXPECT_EQ(m.perm[0], 0);
  EXPECT_EQ(m.sign[0], 1);
  auto phi = [&](const std::array<QuadExt, kDim>& c) {
    AlgebraElem out{};
    for (int k = 0; k < kDim; ++k) out[m.perm[k]] += QuadExt(m.sign[k]) * c[k];
    return out;
  };
  auto unit_coords = [](int k) {
    std::array<QuadExt, kDim> c{};
    c[k] = QuadExt(1);
    return c;
  };
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const auto c = coordinates(f, matrix_mul(f[i], f[j]));
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(phi(*c), alg.okubo_mul(phi(unit_coords(i)), phi(unit_coords(j)))) << i << "," << j;
    }
}

TEST(Sampling, Deterministic) {
  EXPECT_EQ(sample_coords(1, 2), sample_coords(1, 2));
  EXPECT_NE(sample_coords(1, 2), sample_coords(1, 3));
  for (const auto& x : sample_coords(9, 9)) {
    EXPECT_TRUE(x.is_rational());
    EXPECT_TRUE((Rational(2) * x.rat()).is_integer());
    EXPECT_LE(abs(x.rat()), Rational(2));
  }
}
