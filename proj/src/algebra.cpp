#include "okubo/algebra.hpp"

#include <stdexcept>

namespace okubo {

AlgebraElem basis_elem(int k, int sign) {
  AlgebraElem e{};
  e[k] = QuadExt(sign);
  return e;
}

AlgebraElem operator+(const AlgebraElem& a, const AlgebraElem& b) {
  AlgebraElem r = a;
  for (int k = 0; k < kDim; ++k) r[k] += b[k];
  return r;
}

AlgebraElem operator-(const AlgebraElem& a, const AlgebraElem& b) {
  AlgebraElem r = a;
  for (int k = 0; k < kDim; ++k) r[k] -= b[k];
  return r;
}

AlgebraElem operator-(const AlgebraElem& a) {
  AlgebraElem r;
  for (int k = 0; k < kDim; ++k) r[k] = -a[k];
  return r;
}

AlgebraElem operator*(const QuadExt& s, const AlgebraElem& a) {
  AlgebraElem r;
  for (int k = 0; k < kDim; ++k) r[k] = s * a[k];
  return r;
}

bool is_zero(const AlgebraElem& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

std::string to_string(const AlgebraElem& a) {
  std::string out = "[";
  for (int k = 0; k < kDim; ++k) {
    if (k) out += ", ";
    out += a[k].str();
  }
  return out + "]";
}

MultTable::MultTable(std::string id, const std::array<Line, 7>& lines)
    : id_(std::move(id)), lines_(lines) {
  std::array<std::array<bool, kDim>, kDim> set{};
  for (int i = 0; i < kDim; ++i) {
    table_[0][i] = {i, 1};
    table_[i][0] = {i, 1};
    set[0][i] = set[i][0] = true;
  }
  for (int i = 1; i < kDim; ++i) {
    table_[i][i] = {0, -1};
    set[i][i] = true;
  }
  for (const auto& [a, b, c] : lines) {
    const std::array<Line, 3> rotations{{{a, b, c}, {b, c, a}, {c, a, b}}};
    for (const auto& [x, y, z] : rotations) {
      if (set[x][y] || set[y][x]) throw std::invalid_argument("MultTable: lines overlap");
      table_[x][y] = {z, 1};
      table_[y][x] = {z, -1};
      set[x][y] = set[y][x] = true;
    }
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!set[i][j]) throw std::invalid_argument("MultTable: lines do not cover all pairs");

  // Alternativity on basis triples: (e_i e_i) e_j = e_i (e_i e_j) and the
  // linearized form (e_i e_j) e_k + (e_j e_i) e_k = e_i (e_j e_k) + e_j (e_i e_k).
  const auto mul = [this](SignedUnit a, SignedUnit b) {
    const SignedUnit p = table_[a.index][b.index];
    return SignedUnit{p.index, p.sign * a.sign * b.sign};
  };
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        std::array<int, kDim> lhs{};
        std::array<int, kDim> rhs{};
        const SignedUnit ei{i, 1};
        const SignedUnit ej{j, 1};
        const SignedUnit ek{k, 1};
        auto add = [](std::array<int, kDim>& acc, SignedUnit u) { acc[u.index] += u.sign; };
        add(lhs, mul(mul(ei, ej), ek));
        add(lhs, mul(mul(ej, ei), ek));
        add(rhs, mul(ei, mul(ej, ek)));
        add(rhs, mul(ej, mul(ei, ek)));
        if (lhs != rhs) throw std::invalid_argument("MultTable: table '" + id_ + "' is not alternative");
      }
}

namespace {

std::vector<Convention> make_conventions() {
  std::vector<Convention> out;
  // Default. Same table as fano124 with Dickson generators e1, e2, -e7, e4:
  // b0*b2 has the published expansion and every Okubo structure constant in
  // the Coxeter-Dickson basis has denominator dividing 4.
  out.push_back(Convention{
      MultTable("fano124b", {{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}}),
      {{{1, 1}, {2, 1}, {7, -1}, {4, 1}}},
      "e_a e_(a+1) = e_(a+3) mod 7; Dickson generators i,j,k,l = e1,e2,-e7,e4"});
  // tau as written is an automorphism of this table, the Dickson
  // generators reproduce b0*b2 with coefficient -3/2 sqrt3 on b0, and the 240
  // units are exactly the half-integer shapes when e0..e7 are read as
  // 1, i, j, k, l, il, jl, kl.
  out.push_back(Convention{
      MultTable("coxeter240", {{{1, 2, 6}, {3, 1, 7}, {1, 4, 5}, {2, 3, 5}, {2, 4, 7}, {3, 4, 6}, {5, 6, 7}}}),
      {{{2, 1}, {4, 1}, {5, 1}, {7, 1}}},
      "lines 126 317 145 235 247 346 567; Dickson generators i,j,k,l = e2,e4,e5,e7"});
  // e_a e_(a+1) = e_(a+3) (indices mod 7 on 1..7). Also tau-compatible; the
  // order has the same invariants but a different set of 240 units.
  out.push_back(Convention{
      MultTable("fano124", {{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}}),
      {{{4, 1}, {5, 1}, {6, 1}, {7, 1}}},
      "e_a e_(a+1) = e_(a+3) mod 7; Dickson generators i,j,k,l = e4,e5,e6,e7"});
  // Cayley-Dickson doubling of the quaternions i, j, k by l with
  // e1..e7 = i, j, k, l, il, jl, kl. tau is not an automorphism here (it fixes
  // e1 and e3 but not e1 e3 = e2); kept to exhibit that failure.
  out.push_back(Convention{
      MultTable("cd1946", {{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}, {1, 7, 6}, {2, 5, 7}, {3, 6, 5}}}),
      {{{1, 1}, {2, 1}, {3, 1}, {4, 1}}},
      "Cayley-Dickson doubling, e1..e7 = i,j,k,l,il,jl,kl"});
  return out;
}

const std::vector<Convention>& all_conventions() {
  static const std::vector<Convention> conventions = make_conventions();
  return conventions;
}

}  // namespace

std::string_view default_convention_id() { return "fano124b"; }

std::vector<std::string> convention_ids() {
  std::vector<std::string> ids;
  for (const auto& c : all_conventions()) ids.push_back(c.id());
  return ids;
}

const Convention& convention(std::string_view id) {
  for (const auto& c : all_conventions())
    if (c.id() == id) return c;
  throw std::invalid_argument("unknown convention '" + std::string(id) + "'");
}

std::string_view to_string(Product p) {
  switch (p) {
    case Product::Octonion: return "octonion";
    case Product::Para: return "para";
    case Product::Okubo: return "okubo";
  }
  return "?";
}

AutMatrix identity_matrix() {
  AutMatrix m{};
  for (int i = 0; i < kDim; ++i) m[i][i] = QuadExt(1);
  return m;
}

AutMatrix tau_matrix() {
  // Columns are images of basis vectors:
  //   tau(e2) = -1/2 e2 + sqrt3/2 e5,  tau(e5) = -1/2 e5 - sqrt3/2 e2,
  //   tau(e4) = -1/2 e4 + sqrt3/2 e6,  tau(e6) = -1/2 e6 - sqrt3/2 e4.
  AutMatrix m = identity_matrix();
  const QuadExt half(Rational(-1, 2));
  const QuadExt s(Rational(0), Rational(1, 2));
  for (const auto& [a, b] : {std::pair{2, 5}, std::pair{4, 6}}) {
    m[a][a] = half;
    m[b][a] = s;
    m[b][b] = half;
    m[a][b] = -s;
  }
  return m;
}

AutMatrix mat_mul(const AutMatrix& a, const AutMatrix& b) {
  AutMatrix r{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < kDim; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

AlgebraElem apply(const AutMatrix& m, const AlgebraElem& x) {
  AlgebraElem r{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!m[i][j].is_zero() && !x[j].is_zero()) r[i] += m[i][j] * x[j];
  return r;
}

Algebra::Algebra(const Convention& conv)
    : conv_(&conv), tau_(tau_matrix()), tau2_(mat_mul(tau_, tau_)) {}

AlgebraElem Algebra::oct_mul(const AlgebraElem& x, const AlgebraElem& y) const {
  AlgebraElem r{};
  for (int i = 0; i < kDim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < kDim; ++j) {
      if (y[j].is_zero()) continue;
      const SignedUnit p = conv_->table.product(i, j);
      if (p.sign > 0)
        r[p.index] += x[i] * y[j];
      else
        r[p.index] -= x[i] * y[j];
    }
  }
  return r;
}

AlgebraElem Algebra::para_mul(const AlgebraElem& x, const AlgebraElem& y) const {
  return oct_mul(conj(x), conj(y));
}

AlgebraElem Algebra::okubo_mul(const AlgebraElem& x, const AlgebraElem& y) const {
  return oct_mul(okubo::apply(tau_, conj(x)), okubo::apply(tau2_, conj(y)));
}

AlgebraElem Algebra::mul(Product p, const AlgebraElem& x, const AlgebraElem& y) const {
  switch (p) {
    case Product::Octonion: return oct_mul(x, y);
    case Product::Para: return para_mul(x, y);
    case Product::Okubo: return okubo_mul(x, y);
  }
  throw std::logic_error("unknown product");
}

AlgebraElem Algebra::tau(const AlgebraElem& x, int power) const {
  switch (((power % 3) + 3) % 3) {
    case 0: return x;
    case 1: return okubo::apply(tau_, x);
    default: return okubo::apply(tau2_, x);
  }
}

AlgebraElem conj(const AlgebraElem& x) {
  AlgebraElem r = x;
  for (int k = 1; k < kDim; ++k) r[k] = -r[k];
  return r;
}

QuadExt norm(const AlgebraElem& x) {
  QuadExt n;
  for (const auto& c : x)
    if (!c.is_zero()) n += c * c;
  return n;
}

QuadExt trace(const AlgebraElem& x) { return QuadExt(2) * x[0]; }

QuadExt inner(const AlgebraElem& x, const AlgebraElem& y) {
  QuadExt s;
  for (int k = 0; k < kDim; ++k)
    if (!x[k].is_zero() && !y[k].is_zero()) s += x[k] * y[k];
  return QuadExt(2) * s;
}

bool para_idempotent_check(const Algebra& alg, const AlgebraElem& v) {
  if (!v[0].is_zero()) throw std::invalid_argument("para_idempotent_check: v must be imaginary");
  AlgebraElem x = v;
  x[0] = QuadExt(Rational(-1, 2));
  return alg.para_mul(x, x) == x;
}

}  // namespace okubo
