#include "okubo/conductor.hpp"
#include "okubo/lattice.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace okubo;

namespace {

const Algebra& alg() {
  static const Algebra a(convention(default_convention_id()));
  return a;
}

Rational quad_form(const GramMatrix& g, const std::vector<long>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += g[i][j] * Rational(x[i] * x[j]);
  return s;
}

// All nonzero x in the box |x_i| <= r with x^T G x <= bound.
std::vector<std::vector<long>> box_search(const GramMatrix& g, const Rational& bound, long r) {
  const std::size_t n = g.size();
  std::vector<std::vector<long>> out;
  std::vector<long> x(n, -r);
  while (true) {
    bool nonzero = false;
    for (long v : x) nonzero = nonzero || v != 0;
    if (nonzero && quad_form(g, x) <= bound) out.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == r) x[k++] = -r;
    if (k == n) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The box radius needed: |x_i| <= sqrt(bound * (G^-1)_ii).
long box_radius(const GramMatrix& g, const Rational& bound) {
  const auto inv = *inverse(g);
  double m = 0;
  for (std::size_t i = 0; i < g.size(); ++i) m = std::max(m, (bound * inv[i][i]).to_double());
  return static_cast<long>(std::floor(std::sqrt(m) + 1e-9));
}

Integer sigma3_oracle(int n) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += Integer(d) * d * d;
  return s;
}

const GramMatrix kA2 = {{2, -1}, {-1, 2}};
const GramMatrix kD4 = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};

}  // namespace

TEST(ShortVectors, MatchNaiveBoxSearch) {
  std::mt19937_64 rng(17);
  std::vector<GramMatrix> grams = {kA2, kD4, {{3, 1, 1}, {1, 4, 2}, {1, 2, 5}}};
  // A few random positive definite Grams B B^T.
  std::uniform_int_distribution<int> d(-2, 2);
  while (grams.size() < 7) {
    IntMatrix b(4, std::vector<Integer>(4));
    for (auto& r : b)
      for (auto& x : r) x = d(rng);
    if (int_determinant(b) == 0) continue;
    IntMatrix bt(4, std::vector<Integer>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) bt[i][j] = b[j][i];
    grams.push_back(to_rational_matrix(int_multiply(b, bt)));
  }
  for (const auto& g : grams) {
    for (int bound : {2, 5, 8}) {
      const auto fast = short_vectors(g, Rational(bound));
      const auto naive = box_search(g, Rational(bound), box_radius(g, Rational(bound)));
      ASSERT_EQ(fast.size(), naive.size()) << "bound " << bound;
      for (std::size_t i = 0; i < fast.size(); ++i) {
        EXPECT_EQ(fast[i].coords, naive[i]);
        EXPECT_EQ(fast[i].norm, quad_form(g, naive[i]));
      }
    }
  }
}

TEST(ShortVectors, RejectsIndefiniteGram) {
  EXPECT_THROW(short_vectors(GramMatrix{{1, 2}, {2, 1}}, Rational(4)), std::invalid_argument);
}

TEST(ShortVectors, MinimumAndKissing) {
  EXPECT_EQ(minimum_and_kissing(kA2).kissing, 6u);
  EXPECT_EQ(minimum_and_kissing(kD4).kissing, 24u);
  EXPECT_EQ(minimum_and_kissing(kD4).minimum, Rational(2));
  const auto h = norm_histogram(kA2, Rational(6));
  EXPECT_EQ(h.at(Rational(2)), 6u);
  EXPECT_EQ(h.at(Rational(6)), 6u);
  EXPECT_EQ(h.count(Rational(4)), 0u);
}

TEST(Shells, E8CountsMatchDivisorSums) {
  const GramMatrix g = rational_gram(cd_basis(alg()));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(sigma3(n), sigma3_oracle(n));
  const auto rows = shell_counts_vs_sigma3(g, 4);
  ASSERT_EQ(rows.size(), 4u);
  const std::size_t frozen[] = {240, 2160, 6720, 17520};
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(rows[n - 1].n, n);
    EXPECT_EQ(rows[n - 1].count, frozen[n - 1]);
    EXPECT_EQ(rows[n - 1].formula, 240 * sigma3_oracle(n));
    EXPECT_TRUE(rows[n - 1].match);
  }
  EXPECT_THROW(shell_counts_vs_sigma3(g, 7), std::out_of_range);
  EXPECT_THROW(shell_counts_vs_sigma3(g, 0), std::out_of_range);
}

TEST(Sublattice, ContainmentAndCanonicalBasis) {
  const LatticeZ z2 = standard_lattice(GramMatrix{{1, 0}, {0, 1}});
  const LatticeZ two = scaled(z2, Rational(2));
  EXPECT_TRUE(contains(z2, two));
  EXPECT_FALSE(contains(two, z2));
  try {
    relative_coordinates(z2, two);
    FAIL();
  } catch (const NotContainedError& e) {
    EXPECT_EQ(e.row, 0u);
    EXPECT_EQ(e.coords[0], Rational(1, 2));
  }
  const LatticeZ other = sublattice_from_rows(z2, IntMatrix{{2, 0}, {4, 2}});
  EXPECT_TRUE(same_lattice(other, two));
  const auto inv = sublattice_invariants(sublattice_from_rows(z2, IntMatrix{{2, 0}, {0, 6}}), z2);
  EXPECT_EQ(inv.index, 12);
  EXPECT_EQ(inv.smith, (std::vector<Integer>{2, 6}));
}

TEST(Conductor, Invariants) {
  const auto r = conductor_report(alg());
  EXPECT_EQ(r.inv.index, 4096);
  EXPECT_EQ(r.inv.det_l, Rational(16777216));
  EXPECT_EQ(r.inv.det_m, Rational(1));
  EXPECT_EQ(r.inv.smith, (std::vector<Integer>{2, 2, 2, 2, 4, 4, 4, 4}));
  EXPECT_TRUE(r.inv.contains_4m);
  EXPECT_TRUE(r.inv.inside_2m);
  EXPECT_TRUE(r.even);
  EXPECT_TRUE(r.positive_definite);
  EXPECT_EQ(r.minimum, Rational(8));
  EXPECT_TRUE(r.witness_2b0);
  EXPECT_EQ(r.norm_2, 0u);
  EXPECT_EQ(r.below_8, 0u);
  // 2 b0 in L_Ok coordinates is the first basis row.
  const GramMatrix gl = conductor_lattice(alg()).gram();
  EXPECT_EQ(gl[0][0], Rational(8));
}

TEST(Discriminant, ExponentOracle) {
  const LatticeZ l = conductor_lattice(alg());
  const auto a = discriminant_group_and_form(l);
  EXPECT_EQ(a.order(), 16777216);
  const auto inv = *inverse(l.gram());
  bool eight = true;
  bool four = true;
  for (const auto& row : inv)
    for (const auto& x : row) {
      eight = eight && (Rational(8) * x).is_integer();
      four = four && (Rational(4) * x).is_integer();
    }
  // Exponent 8 and 8 generators with order 8^8 force (Z/8)^8.
  EXPECT_TRUE(eight);
  EXPECT_FALSE(four);
  EXPECT_EQ(a.invariants, (std::vector<Integer>(8, 8)));
}

TEST(Discriminant, SmallExamples) {
  const auto a2 = discriminant_group_and_form(standard_lattice(kA2));
  EXPECT_EQ(a2.invariants, (std::vector<Integer>{3}));
  EXPECT_EQ(a2.q_values, (std::vector<Rational>{Rational(2, 3)}));
  const auto d4 = discriminant_group_and_form(standard_lattice(kD4));
  EXPECT_EQ(d4.invariants, (std::vector<Integer>{2, 2}));
  for (const auto& q : d4.q_values) EXPECT_EQ(q, Rational(1));
}

TEST(Discriminant, QIsIndependentOfLift) {
  const LatticeZ l = conductor_lattice(alg());
  const GramMatrix g = l.gram();
  const auto a = discriminant_group_and_form(l);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> h = a.generators[gi];
      for (auto& x : h) x += Rational(d(rng));
      Rational q = 0;
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) q += h[i] * g[i][j] * h[j];
      EXPECT_EQ(mod2(q), a.q_values[gi]);
    }
  }
}

TEST(Discriminant, Helpers) {
  EXPECT_EQ(mod2(Rational(-1, 2)), Rational(3, 2));
  EXPECT_EQ(mod2(Rational(5)), Rational(1));
  EXPECT_EQ(reduce_mod_lattice({Rational(-1, 4), Rational(7, 3)}),
            (std::vector<Rational>{Rational(3, 4), Rational(1, 3)}));
  EXPECT_EQ(enumerate_subgroup({{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 4)}}).size(), 8u);
  EXPECT_THROW(enumerate_subgroup({{Rational(1, 64), Rational(1, 63)}}, 100), std::length_error);
}

TEST(Glue, RejectsAnisotropicGenerator) {
  // A1 = <2>: the glue vector 1/2 has q = 1/2.
  const LatticeZ a1 = standard_lattice(GramMatrix{{2}});
  EXPECT_THROW(glue(a1, {{Rational(1, 2)}}), NotIsotropicError);
  // A1 + A1 + A1 + A1 glued along (1/2,1/2,1/2,1/2) gives D4 ... here Z^4 scaled: q = 2.
  const LatticeZ a1x4 = standard_lattice(GramMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  const LatticeZ g = glue(a1x4, {{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
  EXPECT_EQ(determinant(g.gram()), Rational(4));
  EXPECT_TRUE(is_even(g.gram()));
  EXPECT_EQ(minimum_and_kissing(g.gram()).kissing, 24u);
}

TEST(Glue, ConductorRecoversE8) {
  const auto r = glue_report(alg());
  EXPECT_EQ(r.h_invariants, (std::vector<Integer>{2, 2, 2, 2, 4, 4, 4, 4}));
  EXPECT_EQ(r.h_order, 4096);
  EXPECT_EQ(r.h_elements, 4096u);
  EXPECT_EQ(r.q_nonzero, 0u);
  EXPECT_TRUE(r.maximal);
  EXPECT_TRUE(r.glued_even);
  EXPECT_EQ(r.glued_det, Rational(1));
  EXPECT_TRUE(r.glued_is_lambda);
  EXPECT_TRUE(same_lattice(r.glued, cd_lattice(alg())));
  EXPECT_TRUE(r.saturation_is_lambda);
  EXPECT_TRUE(r.saturation_idempotent);
  EXPECT_FALSE(r.okubo_closed_on_saturation);
  EXPECT_FALSE(r.okubo_violations.empty());
}

TEST(Saturation, TwoAdicOnly) {
  const LatticeZ z2 = standard_lattice(GramMatrix{{1, 0}, {0, 1}});
  const LatticeZ l = sublattice_from_rows(z2, IntMatrix{{4, 0}, {0, 6}});
  const LatticeZ s = saturate(l, z2, 2);
  EXPECT_TRUE(same_lattice(s, sublattice_from_rows(z2, IntMatrix{{1, 0}, {0, 3}})));
  EXPECT_TRUE(same_lattice(saturate(s, z2, 2), s));
  EXPECT_TRUE(same_lattice(saturate(l, z2, 3), sublattice_from_rows(z2, IntMatrix{{4, 0}, {0, 2}})));
  const LatticeZ e8 = cd_lattice(alg());
  const LatticeZ lok = conductor_lattice(alg());
  EXPECT_TRUE(same_lattice(saturate(lok, e8, 2), e8));
  EXPECT_TRUE(same_lattice(saturate(lok, e8, 3), lok));
}

TEST(Saturation, RandomDiagonalScalingsAreUndone) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(0, 3);
  const Algebra& a = alg();
  for (int t = 0; t < 5; ++t) {
    ScalingVector s;
    for (auto& x : s) x = d(rng);
    const LatticeZ l = conductor_lattice(a, s);
    const auto inv = sublattice_invariants(l, cd_lattice(a));
    Integer idx = 1;
    for (int x : s) idx *= Integer(1) << x;
    EXPECT_EQ(inv.index, idx);
    EXPECT_TRUE(same_lattice(saturate(l, cd_lattice(a), 2), cd_lattice(a)));
  }
}

TEST(TraceLattice, EvenPositiveMinimum16) {
  const auto r = trace_lattice_16(alg());
  EXPECT_EQ(r.gram.size(), 16u);
  EXPECT_TRUE(r.even);
  EXPECT_TRUE(r.positive_definite);
  EXPECT_EQ(r.minimum, Rational(16));
  EXPECT_EQ(r.below_16, 0u);
  EXPECT_GT(r.minimal_vectors, 0u);
}

TEST(Fixture, JsonRoundTrip) {
  const LatticeZ l = conductor_lattice(alg());
  const std::string text = lattice_fixture_json(l);
  const LatticeZ back = parse_lattice_fixture(text);
  EXPECT_EQ(back.basis, l.basis);
  EXPECT_EQ(back.ambient_gram, l.ambient_gram);
  EXPECT_EQ(lattice_fixture_json(back), text);
  EXPECT_THROW(parse_lattice_fixture(R"({"basis": [["1"]], "ambient_gram": [["2"]], "gram": [["3"]]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_lattice_fixture("{"), std::invalid_argument);
}
