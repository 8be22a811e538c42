#include "okubo/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace okubo {

GramMatrix LatticeZ::gram() const {
  return multiply(multiply(basis, ambient_gram), transpose(basis));
}

LatticeZ standard_lattice(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  Matrix<Rational> b = zero_matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  return {b, gram};
}

LatticeZ scaled(const LatticeZ& l, const Rational& c) {
  LatticeZ r = l;
  for (auto& row : r.basis)
    for (auto& x : row) x *= c;
  return r;
}

LatticeZ sublattice_from_rows(const LatticeZ& m, const IntMatrix& rows) {
  return {multiply(to_rational_matrix(rows), m.basis), m.ambient_gram};
}

bool is_integral(const Matrix<Rational>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_integer()) return false;
  return true;
}

bool is_even(const GramMatrix& g) {
  if (!is_integral(g)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i][i].numerator() % 2 != 0) return false;
  return true;
}

IntMatrix to_integer_matrix(const Matrix<Rational>& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) {
      if (!x.is_integer()) throw std::invalid_argument("non-integral entry " + x.str());
      r[i].push_back(x.numerator());
    }
  return r;
}

Matrix<Rational> to_rational_matrix(const IntMatrix& m) {
  Matrix<Rational> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) r[i].emplace_back(x);
  return r;
}

HnfSnf hnf_snf(const IntMatrix& m) {
  HnfSnf r{hermite_form(m), {}, smith_form(m)};
  r.smith = r.transforms.invariants();
  return r;
}

NotContainedError::NotContainedError(std::size_t row_, std::vector<Rational> coords_)
    : std::runtime_error("basis row " + std::to_string(row_) + " is not in the outer lattice"),
      row(row_),
      coords(std::move(coords_)) {}

IntMatrix relative_coordinates(const LatticeZ& inner, const LatticeZ& outer) {
  IntMatrix t;
  for (std::size_t i = 0; i < inner.rank(); ++i) {
    const auto x = coordinates_in(outer.basis, inner.basis[i]);
    if (!x) throw NotContainedError(i, {});
    std::vector<Integer> row;
    for (const auto& c : *x) {
      if (!c.is_integer()) throw NotContainedError(i, *x);
      row.push_back(c.numerator());
    }
    t.push_back(std::move(row));
  }
  return t;
}

bool contains(const LatticeZ& outer, const LatticeZ& inner) {
  try {
    relative_coordinates(inner, outer);
    return true;
  } catch (const NotContainedError&) {
    return false;
  }
}

IntMatrix canonical_basis(const LatticeZ& l, Integer* scale) {
  Integer den = 1;
  for (const auto& row : l.basis)
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  if (scale) *scale = den;
  return hermite_form(to_integer_matrix(scaled(l, Rational(den)).basis));
}

bool same_lattice(const LatticeZ& a, const LatticeZ& b) {
  if (!contains(a, b) || !contains(b, a)) return false;
  Integer sa;
  Integer sb;
  const IntMatrix ha = canonical_basis(a, &sa);
  const IntMatrix hb = canonical_basis(b, &sb);
  return sa == sb && ha == hb;
}

SublatticeInvariants sublattice_invariants(const LatticeZ& l, const LatticeZ& m) {
  const IntMatrix t = relative_coordinates(l, m);
  SublatticeInvariants r;
  r.index = abs(int_determinant(t));
  r.det_l = determinant(l.gram());
  r.det_m = determinant(m.gram());
  r.smith = smith_form(t).invariants();
  r.contains_4m = contains(l, scaled(m, 4));
  r.inside_2m = contains(scaled(m, 2), l);
  return r;
}

namespace {

struct Enumerator {
  std::size_t n;
  std::vector<mpq_class> d;               // LDL pivots
  std::vector<std::vector<mpq_class>> mu;  // mu[j][i] = L_ji, j > i
  mpq_class bound;
  const ShortVectorVisitor* visit;
  std::vector<long> x;

  // Integer endpoint of {t : (t - c)^2 <= r2}, moving from the float guess.
  static long endpoint(const mpq_class& c, const mpq_class& r2, bool lower) {
    const double guess = c.get_d() + (lower ? -1.0 : 1.0) * std::sqrt(std::max(0.0, r2.get_d()));
    long t = lower ? static_cast<long>(std::ceil(guess)) : static_cast<long>(std::floor(guess));
    auto inside = [&](long v) {
      mpq_class diff = mpq_class(v) - c;
      return diff * diff <= r2;
    };
    const long step = lower ? -1 : 1;
    while (inside(t + step)) t += step;
    while (!inside(t) && (lower ? mpq_class(t) < c : mpq_class(t) > c)) t -= step;
    return t;
  }

  void rec(int i, const mpq_class& used) {
    mpq_class c = 0;
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
      if (x[j] != 0) c -= mu[j][i] * x[j];
    const mpq_class r2 = (bound - used) / d[i];
    if (r2 < 0) return;
    const long lo = endpoint(c, r2, true);
    const long hi = endpoint(c, r2, false);
    for (long t = lo; t <= hi; ++t) {
      const mpq_class diff = mpq_class(t) - c;
      const mpq_class part = d[i] * diff * diff;
      const mpq_class total = used + part;
      if (total > bound) continue;
      x[i] = t;
      if (i == 0) {
        if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; }))
          (*visit)(x, Rational(total));
      } else {
        rec(i - 1, total);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

void enumerate_short(const GramMatrix& gram, const Rational& bound, const ShortVectorVisitor& visit) {
  const std::size_t n = gram.size();
  if (n == 0 || bound.sign() <= 0) return;
  Enumerator e{n, std::vector<mpq_class>(n), std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)),
               bound.raw(), &visit, std::vector<long>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class di = gram[i][i].raw();
    for (std::size_t k = 0; k < i; ++k) di -= e.mu[i][k] * e.mu[i][k] * e.d[k];
    if (di <= 0) throw std::invalid_argument("Gram matrix is not positive definite");
    e.d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      mpq_class v = gram[j][i].raw();
      for (std::size_t k = 0; k < i; ++k) v -= e.mu[j][k] * e.mu[i][k] * e.d[k];
      e.mu[j][i] = v / di;
    }
  }
  e.rec(static_cast<int>(n) - 1, 0);
}

std::vector<ShortVector> short_vectors(const GramMatrix& gram, const Rational& bound) {
  std::vector<ShortVector> out;
  enumerate_short(gram, bound, [&](const std::vector<long>& x, const Rational& q) { out.push_back({x, q}); });
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) { return a.coords < b.coords; });
  return out;
}

std::map<Rational, std::size_t> norm_histogram(const GramMatrix& gram, const Rational& bound) {
  std::map<Rational, std::size_t> h;
  enumerate_short(gram, bound, [&](const std::vector<long>&, const Rational& q) { ++h[q]; });
  return h;
}

MinimumInfo minimum_and_kissing(const GramMatrix& gram) {
  if (gram.empty()) throw std::invalid_argument("empty Gram matrix");
  Rational bound = gram[0][0];
  for (std::size_t i = 1; i < gram.size(); ++i) bound = std::min(bound, gram[i][i]);
  const auto h = norm_histogram(gram, bound);
  return {h.begin()->first, h.begin()->second};
}

Integer sigma3(int n) {
  Integer s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += Integer(d) * d * d;
  return s;
}

std::vector<ShellRow> shell_counts_vs_sigma3(const GramMatrix& gram, int maxn) {
  if (maxn < 1 || maxn > 6) throw std::out_of_range("shell counting is limited to 1 <= n <= 6");
  const auto h = norm_histogram(gram, Rational(2 * maxn));
  std::vector<ShellRow> rows;
  for (int n = 1; n <= maxn; ++n) {
    const auto it = h.find(Rational(2 * n));
    ShellRow r{n, it == h.end() ? 0 : it->second, 240 * sigma3(n), false};
    r.match = Integer(static_cast<unsigned long>(r.count)) == r.formula;
    rows.push_back(r);
  }
  return rows;
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

Rational mod2(const Rational& q) {
  const Rational half = q / Rational(2);
  return q - Rational(2) * Rational(floor(half));
}

std::vector<Rational> reduce_mod_lattice(const std::vector<Rational>& v) {
  std::vector<Rational> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x - Rational(floor(x)));
  return r;
}

DiscriminantGroup discriminant_group_and_form(const LatticeZ& l) {
  const GramMatrix g = l.gram();
  const IntMatrix gi = to_integer_matrix(g);
  const SmithForm sf = smith_form(gi);
  const auto ginv = inverse(g);
  if (!ginv) throw std::invalid_argument("degenerate Gram matrix");
  const auto uinv = inverse(to_rational_matrix(sf.u));
  const std::size_t n = g.size();
  DiscriminantGroup a;
  const auto inv = sf.invariants();
  for (std::size_t i = 0; i < n; ++i) {
    if (inv[i] == 1) continue;
    if (inv[i] == 0) throw std::invalid_argument("degenerate Gram matrix");
    // h = G^{-1} U^{-1} e_i
    std::vector<Rational> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = (*uinv)[k][i];
    std::vector<Rational> h(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) h[r] += (*ginv)[r][k] * col[k];
    Rational q = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) q += h[r] * g[r][k] * h[k];
    a.invariants.push_back(inv[i]);
    a.generators.push_back(h);
    a.q_values.push_back(mod2(q));
  }
  return a;
}

std::vector<std::vector<Rational>> enumerate_subgroup(const std::vector<std::vector<Rational>>& gens,
                                                      std::size_t limit) {
  if (gens.empty()) return {};
  const std::size_t n = gens[0].size();
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> frontier{std::vector<Rational>(n, Rational(0))};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<Rational>> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        std::vector<Rational> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = v[k] + g[k];
        w = reduce_mod_lattice(w);
        if (seen.insert(w).second) {
          if (seen.size() > limit) throw std::length_error("subgroup exceeds enumeration limit");
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

NotIsotropicError::NotIsotropicError(std::vector<Rational> h_, Rational q_)
    : std::runtime_error("subgroup is not isotropic: q(h) = " + q_.str()), h(std::move(h_)), q(std::move(q_)) {}

LatticeZ glue(const LatticeZ& l, const std::vector<std::vector<Rational>>& gens) {
  const GramMatrix g = l.gram();
  const std::size_t n = l.rank();
  for (const auto& h : enumerate_subgroup(gens)) {
    Rational q = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) q += h[r] * g[r][k] * h[k];
    if (!mod2(q).is_zero()) throw NotIsotropicError(h, mod2(q));
  }
  // Generators of the overlattice in L-coordinates, then HNF.
  Matrix<Rational> rows = zero_matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  for (const auto& h : gens) rows.push_back(h);
  Integer den = 1;
  for (const auto& row : rows)
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  for (auto& row : rows)
    for (auto& x : row) x *= Rational(den);
  Matrix<Rational> basis = to_rational_matrix(hermite_form(to_integer_matrix(rows)));
  for (auto& row : basis)
    for (auto& x : row) x /= Rational(den);
  return {multiply(basis, l.basis), l.ambient_gram};
}

LatticeZ saturate(const LatticeZ& l, const LatticeZ& m, unsigned long p) {
  const IntMatrix t = relative_coordinates(l, m);
  const SmithForm sf = smith_form(t);
  const auto vinv = inverse(to_rational_matrix(sf.v));
  const std::size_t n = t.size();
  // Rows of T span the same lattice as S V^{-1}; strip p from each s_i.
  Matrix<Rational> rows = zero_matrix<Rational>(n, m.rank());
  for (std::size_t i = 0; i < n; ++i) {
    Integer s = sf.s[i][i];
    if (s == 0) throw std::invalid_argument("saturate: degenerate sublattice");
    while (mpz_divisible_ui_p(s.get_mpz_t(), p) != 0) s /= static_cast<long>(p);
    for (std::size_t j = 0; j < m.rank(); ++j) rows[i][j] = Rational(s) * (*vinv)[i][j];
  }
  return {multiply(rows, m.basis), m.ambient_gram};
}

namespace {

using nlohmann::json;

Matrix<Rational> read_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array \"") + key + "\"");
  Matrix<Rational> m;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw std::invalid_argument(std::string("row of \"") + key + "\" is not an array");
    std::vector<Rational> r;
    for (const auto& x : row) {
      const std::string s = x.is_string() ? x.get<std::string>() : x.dump();
      const auto q = Rational::parse(s);
      if (!q) throw std::invalid_argument("bad entry \"" + s + "\" in \"" + key + "\"");
      r.push_back(*q);
    }
    m.push_back(std::move(r));
  }
  return m;
}

json write_matrix(const Matrix<Rational>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    a.push_back(r);
  }
  return a;
}

}  // namespace

LatticeZ parse_lattice_fixture(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("lattice fixture must be a JSON object");
  LatticeZ l{read_matrix(j, "basis"), read_matrix(j, "ambient_gram")};
  const std::size_t dim = l.ambient_gram.size();
  for (const auto& row : l.ambient_gram)
    if (row.size() != dim) throw std::invalid_argument("ambient_gram is not square");
  for (const auto& row : l.basis)
    if (row.size() != dim) throw std::invalid_argument("basis rows do not match ambient dimension");
  if (j.contains("gram") && read_matrix(j, "gram") != l.gram())
    throw std::invalid_argument("gram does not equal B G B^T");
  return l;
}

std::string lattice_fixture_json(const LatticeZ& l) {
  json j;
  j["gram"] = write_matrix(l.gram());
  j["basis"] = write_matrix(l.basis);
  j["ambient_gram"] = write_matrix(l.ambient_gram);
  return j.dump(1);
}

}  // namespace okubo
