#pragma once

/**
 * @file stabilizer.hpp
 * @brief Exhaustive search over signed permutations preserving the blocks
 * {0,1,2,3} and {4,5,6,7} of the scaled basis u, and the tau membership test.
 */

#include "okubo/orders.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace okubo {

/// g(u_a) = sign[a] u_{perm[a]}, with perm preserving both blocks.
struct SignedBlockPerm {
  std::array<int, kDim> perm{};
  std::array<int, kDim> sign{};

  static SignedBlockPerm identity();
  /// Candidate number idx in [0, 147456): (perm_a, signs_a, perm_b, signs_b)
  /// in lexicographic order. Throws std::out_of_range past the end.
  static SignedBlockPerm from_index(std::uint32_t idx);
  IntMatrix matrix() const;
  SignedBlockPerm compose(const SignedBlockPerm& other) const;  ///< this after other
  SignedBlockPerm inverse() const;
  bool operator==(const SignedBlockPerm&) const = default;
  auto operator<=>(const SignedBlockPerm&) const = default;
};

inline constexpr std::uint32_t kBlockCandidates = 147456;

struct StabilizerReport {
  std::string convention;
  std::uint32_t candidates = 0;
  std::vector<SignedBlockPerm> metric;   ///< g^T G g = G
  std::vector<SignedBlockPerm> product;  ///< g(u_i * u_j) = g(u_i) * g(u_j)
  bool product_subset_metric = false;
  bool metric_is_group = false;
  bool metric_has_minus_identity = false;
};

/// threads = 0 picks the hardware concurrency. Output does not depend on it.
StabilizerReport stabilizer_search(const Algebra& alg, unsigned threads = 0);

struct TauMembershipReport {
  std::array<QuadExt, kDim> tau_u2;   ///< tau(u2) in u-coordinates
  std::array<QuadExt, kDim> tau2_u2;  ///< tau^2(u2) in u-coordinates
  bool outside_order = false;         ///< some coordinate not in Z[sqrt 3]
  std::size_t automorphism_pairs = 0; ///< basis pairs with tau(x*y) = tau(x)*tau(y)
};
TauMembershipReport tau_membership(const Algebra& alg);

}  // namespace okubo
