#include "okubo/int_matrix.hpp"
#include "okubo/linalg.hpp"
#include "okubo/quad_ext.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace okubo;

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Integer t = m[0][c] * laplace_det(minor);
    d += (c % 2 == 0) ? t : Integer(-t);
  }
  return d;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(rows, std::vector<Integer>(cols));
  for (auto& r : m)
    for (auto& x : r) x = dist(rng);
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(4, 2), Rational(2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(-3, 2).denominator(), 2);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "123456789012345678901234567891/7"}) {
    const auto q = Rational::parse(s);
    ASSERT_TRUE(q.has_value()) << s;
    EXPECT_EQ(q->str(), s);
  }
  EXPECT_EQ(Rational::parse("  6/4 ")->str(), "3/2");
  EXPECT_FALSE(Rational::parse("1/0").has_value());
  EXPECT_FALSE(Rational::parse("abc").has_value());
  EXPECT_FALSE(Rational::parse("").has_value());
}

TEST(Rational, FloorCeilValuation) {
  EXPECT_EQ(floor(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil(Rational(-3, 2)), -1);
  EXPECT_EQ(floor(Rational(7)), 7);
  EXPECT_EQ(two_adic_valuation(Rational(3, 8)), -3);
  EXPECT_EQ(two_adic_valuation(Rational(12)), 2);
  EXPECT_FALSE(two_adic_valuation(Rational(0)).has_value());
  EXPECT_EQ(padic_valuation(Integer(48), 2), 4);
  EXPECT_EQ(odd_part_of_denominator(Rational(1, 24)), 3);
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), std::domain_error); }

TEST(QuadExt, MultiplicationMatchesFormula) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const Rational a(d(rng), 2), b(d(rng), 3), c(d(rng), 4), e(d(rng), 5);
    const QuadExt x(a, b), y(c, e);
    EXPECT_EQ(x * y, QuadExt(a * c + Rational(3) * b * e, a * e + b * c));
  }
  EXPECT_EQ(QuadExt::sqrt3() * QuadExt::sqrt3(), QuadExt(3));
}

TEST(QuadExt, DivisionInverts) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 200; ++t) {
    const QuadExt x(Rational(d(rng), 3), Rational(d(rng), 2));
    const QuadExt y(Rational(d(rng), 5), Rational(d(rng), 7));
    if (y.is_zero()) {
      EXPECT_THROW(x / y, std::domain_error);
      EXPECT_FALSE(checked_div(x, y).has_value());
      continue;
    }
    EXPECT_EQ((x / y) * y, x);
  }
}

TEST(QuadExt, NormTraceConjugate) {
  const QuadExt x(Rational(1, 2), Rational(-3, 2));
  EXPECT_EQ(x.conjugate(), QuadExt(Rational(1, 2), Rational(3, 2)));
  EXPECT_EQ(x.trace(), Rational(1));
  EXPECT_EQ(x.norm(), Rational(1, 4) - Rational(27, 4));
  EXPECT_EQ(QuadExt(x.norm()), x * x.conjugate());
  const QuadExt y(Rational(2), Rational(1, 3));
  EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
}

TEST(QuadExt, SignAgreesWithDouble) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int t = 0; t < 2000; ++t) {
    const Rational a(d(rng), 7), b(d(rng), 4);
    const double v = a.to_double() + b.to_double() * std::sqrt(3.0);
    const int s = QuadExt(a, b).sign();
    if (std::abs(v) > 1e-9)
      EXPECT_EQ(s, v > 0 ? 1 : -1);
    else
      EXPECT_EQ(s, 0);
  }
  // 7 - 4 sqrt3 is positive but tiny; 26 - 15 sqrt3 too.
  EXPECT_EQ(QuadExt(Rational(7), Rational(-4)).sign(), 1);
  EXPECT_EQ(QuadExt(Rational(-26), Rational(15)).sign(), -1);
  EXPECT_TRUE(QuadExt(1) < QuadExt::sqrt3());
}

TEST(QuadExt, TextRoundTrip) {
  const std::vector<std::pair<QuadExt, std::string>> cases = {
      {QuadExt(0), "0"},
      {QuadExt(Rational(3, 2)), "3/2"},
      {QuadExt(Rational(0), Rational(-3, 2)), "-3/2*s3"},
      {QuadExt(Rational(1, 2), Rational(-1, 2)), "1/2 - 1/2*s3"},
      {QuadExt(Rational(-2), Rational(5)), "-2 + 5*s3"},
  };
  for (const auto& [x, s] : cases) {
    EXPECT_EQ(x.str(), s);
    const auto p = QuadExt::parse(s);
    ASSERT_TRUE(p.has_value()) << s;
    EXPECT_EQ(*p, x);
  }
  EXPECT_FALSE(QuadExt::parse("1/2 +").has_value());
  EXPECT_FALSE(QuadExt::parse("s4").has_value());
}

TEST(QuadExt, RingMembership) {
  const QuadExt half_sqrt3(Rational(0), Rational(1, 2));
  EXPECT_FALSE(is_member(half_sqrt3, RingTag::Zsqrt3));
  EXPECT_TRUE(is_member(half_sqrt3, RingTag::K));
  EXPECT_FALSE(is_member(half_sqrt3, RingTag::Q));
  EXPECT_TRUE(is_member(QuadExt(Rational(3), Rational(-2)), RingTag::Zsqrt3));
  EXPECT_FALSE(is_member(QuadExt(Rational(3), Rational(-2)), RingTag::Z));
  EXPECT_TRUE(is_member(QuadExt(Rational(-5)), RingTag::Z));
  EXPECT_FALSE(is_member(QuadExt(Rational(1, 2)), RingTag::Z));
  EXPECT_TRUE(is_member(QuadExt(Rational(1, 2)), RingTag::Q));
  for (RingTag t : {RingTag::Z, RingTag::Zsqrt3, RingTag::Q, RingTag::K})
    EXPECT_EQ(parse_ring_tag(to_string(t)), t);
}

TEST(ComplexQuad, Arithmetic) {
  const ComplexQuad i = ComplexQuad::i();
  EXPECT_EQ(i * i, ComplexQuad(-1));
  const ComplexQuad z(QuadExt(Rational(1, 2)), QuadExt(Rational(0), Rational(1, 6)));
  EXPECT_EQ(z * z.conj(), ComplexQuad(z.norm()));
  EXPECT_EQ(z.norm(), QuadExt(Rational(1, 4) + Rational(1, 12)));
}

TEST(IntMatrix, DeterminantMatchesLaplace) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    const IntMatrix m = random_int_matrix(rng, n, n, 9);
    EXPECT_EQ(int_determinant(m), laplace_det(m));
  }
}

TEST(IntMatrix, SmithFormProperties) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    const IntMatrix m = random_int_matrix(rng, r, c, 12);
    const SmithForm f = smith_form(m);
    EXPECT_EQ(int_multiply(int_multiply(f.u, m), f.v), f.s);
    EXPECT_EQ(iabs(int_determinant(f.u)), 1);
    EXPECT_EQ(iabs(int_determinant(f.v)), 1);
    const auto inv = f.invariants();
    for (std::size_t i = 0; i < f.s.size(); ++i)
      for (std::size_t j = 0; j < f.s[i].size(); ++j)
        if (i != j) EXPECT_EQ(f.s[i][j], 0);
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
      EXPECT_GE(inv[i], 0);
      if (inv[i] != 0) EXPECT_EQ(inv[i + 1] % inv[i], 0);
      else EXPECT_EQ(inv[i + 1], 0);
    }
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : inv) prod *= x;
      EXPECT_EQ(prod, iabs(int_determinant(m)));
    }
  }
}

TEST(IntMatrix, SmithKnownExample) {
  const IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto inv = smith_form(m).invariants();
  EXPECT_EQ(inv, (std::vector<Integer>{2, 6, 12}));
}

TEST(IntMatrix, HermiteFormIsCanonical) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix m = random_int_matrix(rng, 4, 4, 7);
    if (int_determinant(m) == 0) continue;
    const IntMatrix h = hermite_form(m);
    EXPECT_EQ(hermite_form(h), h);
    // Same row lattice after a unimodular row operation.
    IntMatrix m2 = m;
    for (std::size_t k = 0; k < 4; ++k) m2[0][k] += 3 * m2[1][k];
    std::swap(m2[2], m2[3]);
    EXPECT_EQ(hermite_form(m2), h);
    EXPECT_EQ(iabs(int_determinant(h)), iabs(int_determinant(m)));
  }
}

TEST(Linalg, InverseAndSolve) {
  const Matrix<Rational> a = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  const auto id = multiply(a, *inv);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id[i][j], Rational(i == j ? 1 : 0));
  EXPECT_EQ(determinant(a), Rational(18));
  EXPECT_FALSE(inverse(Matrix<Rational>{{1, 2}, {2, 4}}).has_value());
  const auto c = coordinates_in(a, std::vector<Rational>{3, 5, 5});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<Rational>{1, 1, 1}));
  EXPECT_FALSE(coordinates_in(Matrix<Rational>{{1, 0, 0}}, std::vector<Rational>{0, 1, 0}).has_value());
}

TEST(Linalg, SignatureAndDefiniteness) {
  EXPECT_TRUE(is_positive_definite(Matrix<Rational>{{2, -1}, {-1, 2}}));
  EXPECT_FALSE(is_positive_definite(Matrix<Rational>{{1, 2}, {2, 1}}));
  EXPECT_EQ(signature(Matrix<Rational>{{1, 2}, {2, 1}}), (std::pair<int, int>{1, 1}));
  EXPECT_EQ(signature(Matrix<Rational>{{0, 1}, {1, 0}}), (std::pair<int, int>{1, 1}));
  const Matrix<QuadExt> k = {{QuadExt(1), QuadExt::sqrt3()}, {QuadExt::sqrt3(), QuadExt(4)}};
  EXPECT_EQ(signature(k), (std::pair<int, int>{2, 0}));
}
