#include "okubo/algebra.hpp"
#include "okubo/okubo_matrix.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace okubo;

namespace {

const Algebra& default_alg() {
  static const Algebra alg(convention(default_convention_id()));
  return alg;
}

AlgebraElem sample(std::size_t i) { return sample_coords(424242, i); }

// tau written out by hand: fixes e0, e1, e3, e7 and rotates (e2, e5), (e4, e6)
// by 120 degrees.
AlgebraElem tau_oracle(const AlgebraElem& x) {
  const QuadExt h(Rational(-1, 2));
  const QuadExt s(Rational(0), Rational(1, 2));
  AlgebraElem y = x;
  y[2] = h * x[2] - s * x[5];
  y[5] = s * x[2] + h * x[5];
  y[4] = h * x[4] - s * x[6];
  y[6] = s * x[4] + h * x[6];
  return y;
}

}  // namespace

TEST(MultTable, EveryConventionIsAnOctonionTable) {
  for (const auto& id : convention_ids()) {
    const Algebra alg(convention(id));
    for (int i = 1; i < kDim; ++i) {
      EXPECT_EQ(alg.oct_mul(basis_elem(i), basis_elem(i)), basis_elem(0, -1)) << id;
      for (int j = 1; j < kDim; ++j)
        if (i != j)
          EXPECT_EQ(alg.oct_mul(basis_elem(i), basis_elem(j)), -alg.oct_mul(basis_elem(j), basis_elem(i))) << id;
    }
    std::set<int> seen;
    for (const auto& line : alg.conv().table.lines())
      for (int a : line) seen.insert(a);
    EXPECT_EQ(seen.size(), 7u) << id;
  }
}

TEST(MultTable, RejectsNonAlternativeTable) {
  // Repeating a line is not a Fano plane.
  EXPECT_THROW(MultTable("bad", {{{1, 2, 3}, {1, 2, 3}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}}}),
               std::invalid_argument);
}

TEST(Conventions, LookupAndDefault) {
  EXPECT_EQ(default_convention_id(), "fano124b");
  EXPECT_THROW(convention("nope"), std::invalid_argument);
  EXPECT_EQ(convention_ids().size(), 4u);
}

TEST(Octonion, CompositionAndMoufangOnSamples) {
  const Algebra& alg = default_alg();
  for (std::size_t s = 0; s < 60; ++s) {
    const AlgebraElem x = sample(3 * s), y = sample(3 * s + 1), z = sample(3 * s + 2);
    EXPECT_EQ(norm(alg.oct_mul(x, y)), norm(x) * norm(y));
    // Left Moufang: z(x(zy)) = ((zx)z)y
    EXPECT_EQ(alg.oct_mul(z, alg.oct_mul(x, alg.oct_mul(z, y))), alg.oct_mul(alg.oct_mul(alg.oct_mul(z, x), z), y));
    EXPECT_EQ(alg.oct_mul(x, conj(x)), norm(x) * basis_elem(0));
  }
}

TEST(Octonion, NotAssociative) {
  const Algebra& alg = default_alg();
  bool found = false;
  for (int i = 1; i < kDim && !found; ++i)
    for (int j = 1; j < kDim && !found; ++j)
      for (int k = 1; k < kDim && !found; ++k) {
        const auto a = alg.oct_mul(alg.oct_mul(basis_elem(i), basis_elem(j)), basis_elem(k));
        const auto b = alg.oct_mul(basis_elem(i), alg.oct_mul(basis_elem(j), basis_elem(k)));
        found = a != b;
      }
  EXPECT_TRUE(found);
}

TEST(Forms, NormTraceInner) {
  const AlgebraElem x = sample(1);
  EXPECT_EQ(inner(x, x), QuadExt(2) * norm(x));
  EXPECT_EQ(trace(x), QuadExt(2) * x[0]);
  EXPECT_EQ(norm(basis_elem(5, -1)), QuadExt(1));
  EXPECT_EQ(inner(basis_elem(2), basis_elem(3)), QuadExt(0));
}

TEST(Tau, MatchesHandWrittenRotation) {
  const Algebra& alg = default_alg();
  for (std::size_t s = 0; s < 20; ++s) {
    const AlgebraElem x = sample(s);
    EXPECT_EQ(alg.tau(x), tau_oracle(x));
    EXPECT_EQ(alg.tau(x, 2), tau_oracle(tau_oracle(x)));
    EXPECT_EQ(alg.tau(x, 3), x);
  }
  for (int k : {0, 1, 3, 7}) EXPECT_EQ(alg.tau(basis_elem(k)), basis_elem(k));
}

TEST(Tau, MatrixHasOrderThree) {
  const AutMatrix t = tau_matrix();
  EXPECT_NE(t, identity_matrix());
  EXPECT_NE(mat_mul(t, t), identity_matrix());
  EXPECT_EQ(mat_mul(t, mat_mul(t, t)), identity_matrix());
}

TEST(Tau, AutomorphismExceptForLiteralCayleyDickson) {
  for (const auto& id : convention_ids()) {
    const Algebra alg(convention(id));
    std::size_t good = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        if (alg.tau(alg.oct_mul(basis_elem(i), basis_elem(j))) ==
            alg.oct_mul(alg.tau(basis_elem(i)), alg.tau(basis_elem(j))))
          ++good;
    if (id == "cd1946")
      EXPECT_LT(good, 64u);
    else
      EXPECT_EQ(good, 64u) << id;
  }
}

TEST(Products, DefinitionsFromOctonionProduct) {
  const Algebra& alg = default_alg();
  for (std::size_t s = 0; s < 30; ++s) {
    const AlgebraElem x = sample(2 * s), y = sample(2 * s + 1);
    EXPECT_EQ(alg.para_mul(x, y), alg.oct_mul(conj(x), conj(y)));
    EXPECT_EQ(alg.okubo_mul(x, y), alg.oct_mul(tau_oracle(conj(x)), tau_oracle(tau_oracle(conj(y)))));
    EXPECT_EQ(alg.mul(Product::Okubo, x, y), alg.okubo_mul(x, y));
    EXPECT_EQ(alg.mul(Product::Para, x, y), alg.para_mul(x, y));
    EXPECT_EQ(alg.mul(Product::Octonion, x, y), alg.oct_mul(x, y));
  }
}

TEST(Products, OkuboFlexibleCompositionNotAlternative) {
  const Algebra& alg = default_alg();
  bool alternative_fails = false;
  for (std::size_t s = 0; s < 40; ++s) {
    const AlgebraElem x = sample(2 * s), y = sample(2 * s + 1);
    EXPECT_EQ(alg.okubo_mul(x, alg.okubo_mul(y, x)), alg.okubo_mul(alg.okubo_mul(x, y), x));
    EXPECT_EQ(norm(alg.okubo_mul(x, y)), norm(x) * norm(y));
    const AlgebraElem z = sample(1000 + s);
    EXPECT_EQ(inner(alg.okubo_mul(x, y), z), inner(x, alg.okubo_mul(y, z)));
    if (alg.okubo_mul(x, alg.okubo_mul(x, y)) != alg.okubo_mul(alg.okubo_mul(x, x), y)) alternative_fails = true;
  }
  EXPECT_TRUE(alternative_fails);
}

TEST(Products, OkuboFlexibilityFailsForLiteralCayleyDickson) {
  const Algebra alg(convention("cd1946"));
  bool fails = false;
  for (int i = 0; i < kDim && !fails; ++i)
    for (int j = 0; j < kDim && !fails; ++j) {
      const AlgebraElem x = basis_elem(i) + basis_elem(j == i ? 0 : j);
      const AlgebraElem y = basis_elem(j) + basis_elem(5);
      fails = alg.okubo_mul(x, alg.okubo_mul(y, x)) != alg.okubo_mul(alg.okubo_mul(x, y), x);
    }
  EXPECT_TRUE(fails);
}

TEST(Products, ParaUnitAndParaIdempotents) {
  const Algebra& alg = default_alg();
  const AlgebraElem one = basis_elem(0);
  for (std::size_t s = 0; s < 20; ++s) {
    const AlgebraElem x = sample(s);
    EXPECT_EQ(alg.para_mul(one, x), conj(x));
    EXPECT_EQ(alg.para_mul(x, one), conj(x));
  }
  const QuadExt h(Rational(1, 2));
  EXPECT_TRUE(para_idempotent_check(alg, h * (basis_elem(2) + basis_elem(3) + basis_elem(6))));
  EXPECT_FALSE(para_idempotent_check(alg, basis_elem(4)));
  EXPECT_FALSE(para_idempotent_check(alg, h * basis_elem(4)));
}

TEST(Bridges, AllBasisPairsEveryTauCompatibleConvention) {
  for (const auto& id : {"fano124b", "coxeter240", "fano124"}) {
    const Algebra alg(convention(id));
    const AlgebraElem one = basis_elem(0);
    for (int i = 0; i < kDim; ++i) {
      const AlgebraElem x = basis_elem(i);
      for (int j = 0; j < kDim; ++j) {
        const AlgebraElem y = basis_elem(j);
        EXPECT_EQ(alg.okubo_mul(x, y), alg.para_mul(alg.tau(x), alg.tau(y, 2))) << id;
        EXPECT_EQ(alg.para_mul(x, y), alg.okubo_mul(alg.tau(x, 2), alg.tau(y))) << id;
        EXPECT_EQ(alg.oct_mul(x, y), alg.para_mul(alg.para_mul(one, x), alg.para_mul(y, one))) << id;
      }
      EXPECT_EQ(alg.tau(x), alg.okubo_mul(conj(x), one));
      EXPECT_EQ(conj(x), alg.tau(alg.okubo_mul(one, x)));
      EXPECT_EQ(conj(x), alg.okubo_mul(alg.okubo_mul(alg.okubo_mul(x, one), one), one));
      EXPECT_EQ(alg.tau(x), alg.okubo_mul(alg.okubo_mul(alg.okubo_mul(alg.okubo_mul(x, one), one), one), one));
    }
  }
}

TEST(Elements, ToStringAndArithmetic) {
  const AlgebraElem x = basis_elem(2) + QuadExt(Rational(1, 2)) * basis_elem(5, -1);
  EXPECT_EQ(to_string(x), "[0, 0, 1, 0, 0, -1/2, 0, 0]");
  EXPECT_TRUE(is_zero(x - x));
  EXPECT_EQ(-(-x), x);
}
