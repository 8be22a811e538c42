#include "okubo/catalog.hpp"

#include <unordered_set>

namespace okubo {

std::vector<std::string> classical_names() {
  return {"gaussian", "eisenstein", "hamilton", "hurwitz", "cayley-graves", "coxeter-dickson"};
}

ClassicalOrderSpec build_classical(const Algebra& alg, std::string_view name) {
  const auto& line = alg.conv().table.lines()[0];
  const AlgebraElem one = basis_elem(0);
  const AlgebraElem i = basis_elem(line[0]);
  const AlgebraElem j = basis_elem(line[1]);
  const AlgebraElem k = basis_elem(line[2]);
  const QuadExt half(Rational(1, 2));
  ClassicalOrderSpec s;
  s.name = std::string(name);
  if (name == "gaussian") {
    s = {s.name, "complex", {one, i}, 4, "C2", 4, 2, 4};
  } else if (name == "eisenstein") {
    const AlgebraElem omega = QuadExt(Rational(-1, 2)) * one + QuadExt(Rational(0), Rational(1, 2)) * i;
    s = {s.name, "complex", {one, omega}, 6, "A2", 3, 2, 6};
  } else if (name == "hamilton") {
    s = {s.name, "quaternion", {one, i, j, k}, 8, "C2+C2", 16, 2, 8};
  } else if (name == "hurwitz") {
    s = {s.name, "quaternion", {one, i, j, half * (one + i + j + k)}, 24, "D4", 4, 2, 24};
  } else if (name == "cayley-graves") {
    std::vector<AlgebraElem> b;
    for (int t = 0; t < kDim; ++t) b.push_back(basis_elem(t));
    s = {s.name, "octonion", b, 16, "C8", 256, 2, 16};
  } else if (name == "coxeter-dickson") {
    const OrderBasis cd = cd_basis(alg);
    s = {s.name, "octonion", {cd.b.begin(), cd.b.end()}, 240, "E8", 1, 2, 240};
  } else if (name == "hybrid" || name == "4A2" || name == "2D4" || name == "compounded-eisenstein" ||
             name == "coupled-hurwitz") {
    throw OutOfScopeError("construction not specified: " + std::string(name));
  } else {
    throw std::invalid_argument("unknown classical order: " + std::string(name));
  }
  return s;
}

ClassicalReport verify_classical(const Algebra& alg, const ClassicalOrderSpec& spec) {
  const std::size_t n = spec.basis.size();
  ClassicalReport r;
  r.name = spec.name;
  GramMatrix g = zero_matrix<Rational>(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const QuadExt v = inner(spec.basis[a], spec.basis[b]);
      if (!is_member(v, RingTag::Z)) ++r.trace_norm_violations;
      g[a][b] = v.rat();
    }
  for (const auto& b : spec.basis) {
    if (!is_member(trace(b), RingTag::Z)) ++r.trace_norm_violations;
    if (!is_member(norm(b), RingTag::Z)) ++r.trace_norm_violations;
  }
  r.det = determinant(g);
  const auto mk = minimum_and_kissing(g);
  r.minimum = mk.minimum;
  r.kissing = mk.kissing;

  Matrix<QuadExt> rows;
  for (const auto& b : spec.basis) rows.emplace_back(b.begin(), b.end());
  for (const auto& x : spec.basis)
    for (const auto& y : spec.basis) {
      const AlgebraElem p = alg.oct_mul(x, y);
      const auto c = coordinates_in(rows, std::vector<QuadExt>(p.begin(), p.end()));
      bool ok = c.has_value();
      if (ok)
        for (const auto& v : *c) ok = ok && is_member(v, RingTag::Z);
      if (!ok) ++r.constant_violations;
    }

  std::vector<AlgebraElem> units;
  for (const auto& sv : short_vectors(g, Rational(2))) {
    AlgebraElem u{};
    for (std::size_t a = 0; a < n; ++a)
      if (sv.coords[a] != 0) u = u + QuadExt(Rational(sv.coords[a])) * spec.basis[a];
    units.push_back(u);
  }
  r.units = units.size();
  std::unordered_set<std::string> keys;
  for (const auto& u : units) keys.insert(to_string(u));
  for (const auto& x : units) {
    if (!keys.count(to_string(conj(x)))) ++r.missing_inverses;
    for (const auto& y : units)
      if (!keys.count(to_string(alg.oct_mul(x, y)))) ++r.unit_products_outside;
  }
  return r;
}

}  // namespace okubo
