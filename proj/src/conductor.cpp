#include "okubo/conductor.hpp"

namespace okubo {

LatticeZ cd_lattice(const Algebra& alg) { return standard_lattice(rational_gram(cd_basis(alg))); }

LatticeZ conductor_lattice(const Algebra& alg, const ScalingVector& a) {
  LatticeZ l = cd_lattice(alg);
  for (int i = 0; i < kDim; ++i) l.basis[i][i] = Rational(1L << a[i]);
  return l;
}

ConductorReport conductor_report(const Algebra& alg) {
  const LatticeZ lambda = cd_lattice(alg);
  const LatticeZ l = conductor_lattice(alg);
  ConductorReport r;
  r.inv = sublattice_invariants(l, lambda);
  const GramMatrix g = l.gram();
  r.even = is_even(g);
  r.positive_definite = is_positive_definite(g);
  const auto vs = short_vectors(g, Rational(8));
  r.minimum = vs.empty() ? Rational(0) : vs.front().norm;
  for (const auto& v : vs) {
    if (v.norm < Rational(8)) ++r.below_8;
    if (v.norm == Rational(2)) ++r.norm_2;
    if (r.minimum.is_zero() || v.norm < r.minimum) r.minimum = v.norm;
  }
  for (const auto& v : vs) {
    if (v.norm == r.minimum) ++r.minimal_vectors;
    // 2 b0 = u0, i.e. coordinates (1, 0, ..., 0) in the u-basis
    bool is_u0 = v.coords[0] == 1;
    for (int k = 1; k < kDim; ++k) is_u0 = is_u0 && v.coords[k] == 0;
    if (is_u0 && v.norm == Rational(8)) r.witness_2b0 = true;
  }
  return r;
}

std::vector<std::vector<Rational>> quotient_generators(const LatticeZ& l, const LatticeZ& m) {
  const auto t = to_rational_matrix(relative_coordinates(l, m));
  const auto tinv = inverse(t);
  if (!tinv) throw std::invalid_argument("degenerate sublattice");
  return *tinv;
}

GlueReport glue_report(const Algebra& alg) {
  const LatticeZ lambda = cd_lattice(alg);
  const LatticeZ l = conductor_lattice(alg);
  GlueReport r;
  r.discriminant = discriminant_group_and_form(l);
  for (const auto& s : smith_form(relative_coordinates(l, lambda)).invariants())
    if (s != 1) r.h_invariants.push_back(s);
  r.h_order = 1;
  for (const auto& s : r.h_invariants) r.h_order *= s;
  const auto gens = quotient_generators(l, lambda);
  const GramMatrix g = l.gram();
  const auto elems = enumerate_subgroup(gens);
  r.h_elements = elems.size();
  for (const auto& h : elems) {
    Rational q = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) q += h[i] * g[i][j] * h[j];
    if (!mod2(q).is_zero()) ++r.q_nonzero;
  }
  r.maximal = r.h_order * r.h_order == r.discriminant.order();
  r.glued = glue(l, gens);
  const GramMatrix gg = r.glued.gram();
  r.glued_even = is_even(gg);
  r.glued_det = determinant(gg);
  r.glued_is_lambda = same_lattice(r.glued, lambda);
  r.saturation = saturate(l, lambda, 2);
  r.saturation_is_lambda = same_lattice(r.saturation, lambda);
  r.saturation_idempotent = same_lattice(saturate(r.saturation, lambda, 2), r.saturation);
  // Okubo closure on the saturated lattice, in its own basis.
  const OrderBasis cd = cd_basis(alg);
  OrderBasis sat;
  sat.label = "saturation";
  for (int i = 0; i < kDim; ++i) {
    AlgebraElem v{};
    for (int k = 0; k < kDim; ++k)
      if (!r.saturation.basis[i][k].is_zero()) v = v + QuadExt(r.saturation.basis[i][k]) * cd.b[k];
    sat.b[i] = v;
  }
  const auto rep = closure_test(structure_constants(alg, Product::Okubo, sat), RingTag::Zsqrt3);
  r.okubo_closed_on_saturation = rep.pass;
  r.okubo_violations = rep.violations;
  return r;
}

TraceLatticeReport trace_lattice_16(const Algebra& alg) {
  const OrderBasis u = scaled_basis(cd_basis(alg), kOkuboScaling);
  std::vector<AlgebraElem> v(u.b.begin(), u.b.end());
  for (const auto& x : u.b) v.push_back(QuadExt::sqrt3() * x);
  TraceLatticeReport r;
  r.gram = zero_matrix<Rational>(v.size(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) r.gram[a][b] = inner(v[a], v[b]).trace();
  r.even = is_even(r.gram);
  r.positive_definite = is_positive_definite(r.gram);
  if (!r.positive_definite) return r;
  const auto h = norm_histogram(r.gram, Rational(16));
  if (!h.empty()) {
    r.minimum = h.begin()->first;
    r.minimal_vectors = h.begin()->second;
  }
  for (const auto& [n, c] : h)
    if (n < Rational(16)) r.below_16 += c;
  return r;
}

}  // namespace okubo
