#include "okubo/orders.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace okubo {

namespace {

AlgebraElem signed_unit(const SignedUnit& u) { return basis_elem(u.index, u.sign); }

QuadExt half() { return QuadExt(Rational(1, 2)); }

Rational pow2(int e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

Matrix<QuadExt> coordinate_matrix(const OrderBasis& b) {
  Matrix<QuadExt> m;
  for (const auto& v : b.b) m.emplace_back(v.begin(), v.end());
  return m;
}

AlgebraElem combine(const OrderBasis& b, const std::vector<QuadExt>& coeffs) {
  AlgebraElem r{};
  for (int k = 0; k < kDim; ++k)
    if (!coeffs[k].is_zero()) r = r + coeffs[k] * b.b[k];
  return r;
}

}  // namespace

OrderBasis cd_basis(const Algebra& alg) {
  const auto& g = alg.conv().dickson_ijkl;
  const AlgebraElem i = signed_unit(g[0]);
  const AlgebraElem j = signed_unit(g[1]);
  const AlgebraElem k = signed_unit(g[2]);
  const AlgebraElem l = signed_unit(g[3]);
  const AlgebraElem h = half() * (i + j + k + l);
  return {{basis_elem(0), i, j, k, h, alg.oct_mul(i, h), alg.oct_mul(j, h), alg.oct_mul(k, h)},
          "coxeter-dickson"};
}

OrderBasis scaled_basis(const OrderBasis& b, const std::array<int, kDim>& exponents) {
  OrderBasis r = b;
  for (int i = 0; i < kDim; ++i) {
    r.b[i] = QuadExt(pow2(exponents[i])) * b.b[i];
  }
  r.label = b.label + "-scaled";
  return r;
}

Matrix<QuadExt> gram_of(const OrderBasis& b) {
  Matrix<QuadExt> g = zero_matrix<QuadExt>(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) g[i][j] = inner(b.b[i], b.b[j]);
  return g;
}

GramMatrix rational_gram(const OrderBasis& b) {
  const auto g = gram_of(b);
  GramMatrix r = zero_matrix<Rational>(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (!g[i][j].is_rational()) throw std::invalid_argument("Gram entry has a sqrt 3 part");
      r[i][j] = g[i][j].rat();
    }
  return r;
}

QuadraticPoly published_cd_norm_poly() {
  QuadraticPoly p{};
  for (int i = 0; i < kDim; ++i) p[i][i] = 1;
  p[0][5] = p[0][6] = p[0][7] = -1;
  p[1][4] = p[1][6] = 1;
  p[2][4] = p[2][5] = 1;
  p[3][4] = 1;
  return p;
}

LinearPoly published_cd_trace_poly() { return {2, 0, 0, 0, 0, -1, -1, -1}; }

CdBasisReport cd_basis_and_gram(const Algebra& alg) {
  CdBasisReport r;
  r.basis = cd_basis(alg);
  r.gram = rational_gram(r.basis);
  r.det = determinant(r.gram);
  const auto mk = minimum_and_kissing(r.gram);
  r.minimum = mk.minimum;
  r.kissing = mk.kissing;
  // n(sum a_i b_i) = sum n(b_i) a_i^2 + sum_{i<j} <b_i, b_j> a_i a_j
  const auto pub = published_cd_norm_poly();
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      r.norm_poly[i][j] = i == j ? r.gram[i][i] / Rational(2) : r.gram[i][j];
      if (r.norm_poly[i][j] != pub[i][j]) r.norm_mismatches.push_back({i, j, pub[i][j], r.norm_poly[i][j]});
    }
  const auto pub_tr = published_cd_trace_poly();
  for (int i = 0; i < kDim; ++i) {
    const QuadExt t = trace(r.basis.b[i]);
    r.trace_poly[i] = t.rat();
    if (!t.is_rational() || t.rat() != pub_tr[i]) r.trace_mismatches.push_back({i, -1, pub_tr[i], t.rat()});
  }
  return r;
}

std::vector<std::array<int, 4>> published_unit_shapes() {
  return {{0, 2, 3, 5}, {1, 4, 6, 7}, {0, 1, 3, 6}, {2, 4, 5, 7}, {0, 1, 2, 7}, {3, 4, 5, 6}, {0, 5, 6, 7},
          {1, 2, 3, 4}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}, {0, 3, 4, 7}, {1, 2, 5, 6}};
}

UnitsReport units240(const Algebra& alg) {
  const OrderBasis b = cd_basis(alg);
  const GramMatrix g = rational_gram(b);
  UnitsReport r;
  for (const auto& sv : short_vectors(g, Rational(2))) {
    std::vector<QuadExt> c(sv.coords.begin(), sv.coords.end());
    std::transform(sv.coords.begin(), sv.coords.end(), c.begin(), [](long v) { return QuadExt(Rational(v)); });
    r.units.push_back(combine(b, c));
  }
  std::unordered_set<std::string> keys;
  for (const auto& u : r.units) keys.insert(to_string(u));
  for (const auto& x : r.units) {
    if (!keys.count(to_string(conj(x)))) ++r.missing_inverses;
    for (const auto& y : r.units) {
      ++r.products_checked;
      if (!keys.count(to_string(alg.oct_mul(x, y)))) ++r.products_not_units;
    }
  }
  r.axes_present = true;
  for (int k = 0; k < kDim; ++k)
    for (int s : {1, -1})
      if (!keys.count(to_string(basis_elem(k, s)))) r.axes_present = false;
  for (const auto& shape : published_unit_shapes()) {
    bool all = true;
    for (int mask = 0; mask < 16 && all; ++mask) {
      AlgebraElem v{};
      for (int t = 0; t < 4; ++t) v[shape[t]] = QuadExt(Rational((mask >> t) & 1 ? -1 : 1, 2));
      all = keys.count(to_string(v)) > 0;
    }
    if (!all) r.missing_shapes.push_back(shape);
  }
  return r;
}

StructureConstants structure_constants(const Algebra& alg, Product p, const OrderBasis& basis) {
  const auto inv = inverse(coordinate_matrix(basis));
  if (!inv) throw SingularBasisError();
  StructureConstants sc;
  sc.product = p;
  sc.convention = alg.convention_id();
  sc.basis = basis;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const AlgebraElem prod = alg.mul(p, basis.b[i], basis.b[j]);
      // prod = c B, so c = prod B^{-1}
      for (int k = 0; k < kDim; ++k) {
        QuadExt s(0);
        for (int t = 0; t < kDim; ++t)
          if (!prod[t].is_zero()) s += prod[t] * (*inv)[t][k];
        sc.c[i][j][k] = s;
      }
    }
  return sc;
}

bool reconstruction_holds(const Algebra& alg, const StructureConstants& sc) {
  if (!sc.basis) return false;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const std::vector<QuadExt> c(sc.c[i][j].begin(), sc.c[i][j].end());
      if (combine(*sc.basis, c) != alg.mul(sc.product, sc.basis->b[i], sc.basis->b[j])) return false;
    }
  return true;
}

std::vector<Integer> denominators(const StructureConstants& sc) {
  std::vector<Integer> d;
  for (const auto& a : sc.c)
    for (const auto& b : a)
      for (const auto& x : b)
        for (const Rational* q : {&x.rat(), &x.irr()})
          if (std::find(d.begin(), d.end(), q->denominator()) == d.end()) d.push_back(q->denominator());
  std::sort(d.begin(), d.end());
  return d;
}

IntegralSystemReport closure_test(const StructureConstants& sc, RingTag ring) {
  IntegralSystemReport r;
  r.ring = ring;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (!is_member(sc.c[i][j][k], ring)) r.violations.push_back({i, j, k, sc.c[i][j][k]});
  if (sc.basis) {
    for (const auto& b : sc.basis->b) {
      r.trace_values.push_back(inner(b, basis_elem(0)));
      r.norm_values.push_back(norm(b));
    }
  }
  r.pass = r.violations.empty();
  for (const auto* vals : {&r.trace_values, &r.norm_values})
    for (const auto& v : *vals)
      if (!is_member(v, ring)) r.pass = false;
  return r;
}

bool is_half_odd_sqrt3(const QuadExt& x) {
  return x.irr().denominator() == 2 && x.irr().numerator() % 2 != 0;
}

namespace {

struct Constraint {
  int i, j, k;
  long need;  // a_i + a_j - a_k >= need
};

std::vector<std::vector<Constraint>> constraints_by_last(const StructureConstants& sc) {
  std::vector<std::vector<Constraint>> by(kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const QuadExt& c = sc.c[i][j][k];
        if (c.is_zero()) continue;
        long v = 0;
        bool first = true;
        for (const Rational* q : {&c.rat(), &c.irr()}) {
          if (q->is_zero()) continue;
          if (odd_part_of_denominator(*q) != 1)
            throw NoScalingError("coefficient " + c.str() + " has an odd denominator; no 2-power scaling works");
          const long vq = *two_adic_valuation(*q);
          v = first ? vq : std::min(v, vq);
          first = false;
        }
        by[std::max({i, j, k})].push_back({i, j, k, -v});
      }
  return by;
}

bool dominates(const ScalingVector& a, const ScalingVector& b) {  // b <= a componentwise
  for (int t = 0; t < kDim; ++t)
    if (b[t] > a[t]) return false;
  return true;
}

}  // namespace

bool scaling_is_integral(const StructureConstants& sc, const ScalingVector& a) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const QuadExt& c = sc.c[i][j][k];
        if (c.is_zero()) continue;
        if (!is_member(QuadExt(pow2(a[i] + a[j] - a[k])) * c, RingTag::Zsqrt3)) return false;
      }
  return true;
}

StructureConstants rescale(const StructureConstants& sc, const ScalingVector& a) {
  StructureConstants r = sc;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        r.c[i][j][k] = QuadExt(pow2(a[i] + a[j] - a[k])) * sc.c[i][j][k];
      }
  if (r.basis) r.basis = scaled_basis(*r.basis, a);
  return r;
}

ScalingSearchResult scaling_search(const StructureConstants& sc, int max_exp) {
  if (max_exp < 0) throw std::invalid_argument("max_exp must be nonnegative");
  const auto by_last = constraints_by_last(sc);
  ScalingSearchResult r;
  r.max_exp = max_exp;
  std::vector<ScalingVector> sols;
  ScalingVector a{};
  auto dfs = [&](auto&& self, int t) -> void {
    for (int v = 0; v <= max_exp; ++v) {
      a[t] = v;
      ++r.nodes;
      bool ok = true;
      for (const auto& c : by_last[t])
        if (a[c.i] + a[c.j] - a[c.k] < c.need) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (t + 1 == kDim)
        sols.push_back(a);
      else
        self(self, t + 1);
    }
    a[t] = 0;
  };
  dfs(dfs, 0);
  r.solutions = sols.size();
  if (sols.empty())
    throw NoScalingError("no R-integral scaling with exponents <= " + std::to_string(max_exp));
  auto sum = [](const ScalingVector& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
  };
  std::stable_sort(sols.begin(), sols.end(), [&](const auto& x, const auto& y) { return sum(x) < sum(y); });
  for (const auto& s : sols) {
    const bool dominated =
        std::any_of(r.minimal.begin(), r.minimal.end(), [&](const ScalingVector& m) { return dominates(s, m); });
    if (!dominated) r.minimal.push_back(s);
  }
  std::sort(r.minimal.begin(), r.minimal.end());
  return r;
}

IntegralSystemReport scaled_order_verify(const Algebra& alg, const ScalingVector& a) {
  const OrderBasis u = scaled_basis(cd_basis(alg), a);
  const StructureConstants m = structure_constants(alg, Product::Okubo, u);
  IntegralSystemReport r;
  r.ring = RingTag::Zsqrt3;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        if (!is_member(m.c[i][j][k], r.ring)) r.violations.push_back({i, j, k, m.c[i][j][k]});
  const AlgebraElem e = basis_elem(0);
  for (int i = 0; i < kDim; ++i) {
    r.trace_values.push_back(inner(u.b[i], e));
    r.norm_values.push_back(norm(u.b[i]));
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      r.trace_values.push_back(inner(alg.okubo_mul(u.b[i], u.b[j]), e));
      r.norm_values.push_back(inner(u.b[i], u.b[j]));
    }
  r.pass = r.violations.empty();
  for (const auto* vals : {&r.trace_values, &r.norm_values})
    for (const auto& v : *vals)
      if (!is_member(v, r.ring)) r.pass = false;
  return r;
}

std::array<QuadExt, kDim> okubo_b0_b2(const Algebra& alg) {
  const OrderBasis b = cd_basis(alg);
  const auto sc = structure_constants(alg, Product::Okubo, b);
  return sc.c[0][2];
}

std::array<QuadExt, kDim> published_b0_b2() {
  const QuadExt s3 = QuadExt::sqrt3();
  return {QuadExt(Rational(0), Rational(-3, 2)),
          QuadExt(Rational(0), Rational(1, 2)),
          QuadExt(Rational(1, 2), Rational(-1, 2)),
          QuadExt(0),
          QuadExt(0),
          -s3,
          -s3,
          -s3};
}

std::string dump_constants(const StructureConstants& sc) {
  std::ostringstream os;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const QuadExt& c = sc.c[i][j][k];
        if (c.is_zero()) continue;
        os << i << ' ' << j << ' ' << k << ' ' << c.rat().str() << ' ' << c.irr().str() << '\n';
      }
  return os.str();
}

StructureConstants parse_constants(std::string_view text, Product p, std::string convention) {
  StructureConstants sc;
  sc.product = p;
  sc.convention = std::move(convention);
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, c, q1, q2, extra;
    if (!(ls >> a)) continue;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("constants line " + std::to_string(lineno) + ": " + why);
    };
    if (!(ls >> b >> c >> q1 >> q2) || (ls >> extra)) throw fail("expected \"i j k a/b c/d\"");
    int idx[3];
    const std::string* parts[3] = {&a, &b, &c};
    for (int t = 0; t < 3; ++t) {
      try {
        std::size_t used = 0;
        idx[t] = std::stoi(*parts[t], &used);
        if (used != parts[t]->size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw fail("bad index \"" + *parts[t] + "\"");
      }
      if (idx[t] < 0 || idx[t] >= kDim) throw fail("index out of range");
    }
    const auto r = Rational::parse(q1);
    const auto s = Rational::parse(q2);
    if (!r || !s) throw fail("bad coefficient");
    sc.c[idx[0]][idx[1]][idx[2]] = QuadExt(*r, *s);
  }
  return sc;
}

}  // namespace okubo
