#include "okubo/stabilizer.hpp"

#include "okubo/conductor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace okubo {

namespace {

std::array<std::array<int, 4>, 24> block_perms() {
  std::array<std::array<int, 4>, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  int n = 0;
  do out[n++] = p;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Elements of Z[sqrt 3] as integer pairs.
struct ZPair {
  long a = 0;
  long b = 0;
  bool operator==(const ZPair&) const = default;
};

ZPair to_pair(const QuadExt& x) {
  if (!is_member(x, RingTag::Zsqrt3)) throw std::logic_error("scaled constant outside Z[sqrt 3]");
  return {x.rat().numerator().get_si(), x.irr().numerator().get_si()};
}

}  // namespace

SignedBlockPerm SignedBlockPerm::identity() {
  SignedBlockPerm g;
  for (int a = 0; a < kDim; ++a) {
    g.perm[a] = a;
    g.sign[a] = 1;
  }
  return g;
}

SignedBlockPerm SignedBlockPerm::from_index(std::uint32_t idx) {
  if (idx >= kBlockCandidates) throw std::out_of_range("candidate index out of range");
  static const auto perms = block_perms();
  const std::uint32_t sb = idx % 16;
  idx /= 16;
  const std::uint32_t pb = idx % 24;
  idx /= 24;
  const std::uint32_t sa = idx % 16;
  const std::uint32_t pa = idx / 16;
  SignedBlockPerm g;
  for (int a = 0; a < 4; ++a) {
    g.perm[a] = perms[pa][a];
    g.sign[a] = (sa >> (3 - a)) & 1 ? -1 : 1;
    g.perm[4 + a] = 4 + perms[pb][a];
    g.sign[4 + a] = (sb >> (3 - a)) & 1 ? -1 : 1;
  }
  return g;
}

IntMatrix SignedBlockPerm::matrix() const {
  IntMatrix m(kDim, std::vector<Integer>(kDim, 0));
  for (int a = 0; a < kDim; ++a) m[perm[a]][a] = sign[a];
  return m;
}

SignedBlockPerm SignedBlockPerm::compose(const SignedBlockPerm& o) const {
  SignedBlockPerm g;
  for (int a = 0; a < kDim; ++a) {
    g.perm[a] = perm[o.perm[a]];
    g.sign[a] = sign[o.perm[a]] * o.sign[a];
  }
  return g;
}

SignedBlockPerm SignedBlockPerm::inverse() const {
  SignedBlockPerm g;
  for (int a = 0; a < kDim; ++a) {
    g.perm[perm[a]] = a;
    g.sign[perm[a]] = sign[a];
  }
  return g;
}

StabilizerReport stabilizer_search(const Algebra& alg, unsigned threads) {
  const GramMatrix gq = conductor_lattice(alg).gram();
  std::array<std::array<long, kDim>, kDim> g{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) g[i][j] = gq[i][j].numerator().get_si();
  const OrderBasis u = scaled_basis(cd_basis(alg), kOkuboScaling);
  const StructureConstants sc = structure_constants(alg, Product::Okubo, u);
  std::array<std::array<std::array<ZPair, kDim>, kDim>, kDim> m{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) m[i][j][k] = to_pair(sc.c[i][j][k]);

  auto preserves_metric = [&](const SignedBlockPerm& p) {
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j)
        if (g[p.perm[i]][p.perm[j]] * p.sign[i] * p.sign[j] != g[i][j]) return false;
    return true;
  };
  // m_{pi(i) pi(j)}^{pi(k)} s_i s_j = m_ij^k s_k
  auto preserves_product = [&](const SignedBlockPerm& p) {
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          const ZPair& lhs = m[p.perm[i]][p.perm[j]][p.perm[k]];
          const ZPair& rhs = m[i][j][k];
          const long s = p.sign[i] * p.sign[j] * p.sign[k];
          if (lhs.a * s != rhs.a || lhs.b * s != rhs.b) return false;
        }
    return true;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, 64u);
  struct Chunk {
    std::vector<SignedBlockPerm> metric;
    std::vector<SignedBlockPerm> product;
    std::uint32_t tested = 0;
  };
  std::vector<Chunk> chunks(threads);
  std::vector<std::thread> pool;
  const std::uint32_t per = (kBlockCandidates + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      const std::uint32_t lo = t * per;
      const std::uint32_t hi = std::min(kBlockCandidates, lo + per);
      for (std::uint32_t idx = lo; idx < hi; ++idx) {
        const auto p = SignedBlockPerm::from_index(idx);
        ++chunks[t].tested;
        if (preserves_metric(p)) chunks[t].metric.push_back(p);
        if (preserves_product(p)) chunks[t].product.push_back(p);
      }
    });
  for (auto& th : pool) th.join();

  StabilizerReport r;
  r.convention = alg.convention_id();
  for (const auto& c : chunks) {
    r.candidates += c.tested;
    r.metric.insert(r.metric.end(), c.metric.begin(), c.metric.end());
    r.product.insert(r.product.end(), c.product.begin(), c.product.end());
  }
  const std::set<SignedBlockPerm> ms(r.metric.begin(), r.metric.end());
  r.product_subset_metric =
      std::all_of(r.product.begin(), r.product.end(), [&](const auto& p) { return ms.count(p) > 0; });
  r.metric_is_group = ms.count(SignedBlockPerm::identity()) > 0;
  for (const auto& a : r.metric) {
    if (!ms.count(a.inverse())) r.metric_is_group = false;
    for (const auto& b : r.metric)
      if (!ms.count(a.compose(b))) r.metric_is_group = false;
  }
  SignedBlockPerm minus = SignedBlockPerm::identity();
  minus.sign.fill(-1);
  r.metric_has_minus_identity = ms.count(minus) > 0;
  return r;
}

TauMembershipReport tau_membership(const Algebra& alg) {
  const OrderBasis cd = cd_basis(alg);
  const OrderBasis u = scaled_basis(cd, kOkuboScaling);
  Matrix<QuadExt> rows;
  for (const auto& v : u.b) rows.emplace_back(v.begin(), v.end());
  auto in_u = [&](const AlgebraElem& x) {
    const auto c = coordinates_in(rows, std::vector<QuadExt>(x.begin(), x.end()));
    std::array<QuadExt, kDim> out{};
    std::copy(c->begin(), c->end(), out.begin());
    return out;
  };
  TauMembershipReport r;
  r.tau_u2 = in_u(alg.tau(u.b[2], 1));
  r.tau2_u2 = in_u(alg.tau(u.b[2], 2));
  for (const auto* v : {&r.tau_u2, &r.tau2_u2})
    for (const auto& x : *v)
      if (!is_member(x, RingTag::Zsqrt3)) r.outside_order = true;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (alg.tau(alg.okubo_mul(cd.b[i], cd.b[j])) == alg.okubo_mul(alg.tau(cd.b[i]), alg.tau(cd.b[j])))
        ++r.automorphism_pairs;
  return r;
}

}  // namespace okubo
