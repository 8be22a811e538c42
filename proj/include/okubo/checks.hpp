#pragma once

/**
 * @file checks.hpp
 * @brief Certification suites: each runs module operations and turns their
 * results into CheckReports.
 */

#include "okubo/algebra.hpp"
#include "okubo/orders.hpp"
#include "okubo/report.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace okubo {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kDefaultSamples = 100;

/// Uses the given constants instead of computing them when present.
std::vector<CheckReport> check_para_closure(const Algebra& alg,
                                            const std::optional<StructureConstants>& fixture = std::nullopt);
std::vector<CheckReport> check_okubo_obstruction(const Algebra& alg);
std::vector<CheckReport> check_scaling_search(const Algebra& alg, int max_exp = 3);
std::vector<CheckReport> check_scaled_order(const Algebra& alg);
std::vector<CheckReport> check_algebra_laws(const Algebra& alg, std::uint64_t seed);
std::vector<CheckReport> check_bridges(const Algebra& alg, std::uint64_t seed);
std::vector<CheckReport> check_tau(const Algebra& alg);
std::vector<CheckReport> check_matrix_laws(const Algebra& alg, std::uint64_t seed);
std::vector<CheckReport> check_e8(const Algebra& alg);
std::vector<CheckReport> check_lattice_invariants(const Algebra& alg);
std::vector<CheckReport> check_glue_saturate(const Algebra& alg, bool glue, bool saturate);
std::vector<CheckReport> check_shells(const Algebra& alg, int maxn);
std::vector<CheckReport> check_trace16(const Algebra& alg);
std::vector<CheckReport> check_stabilizer(const Algebra& alg);
/// name is a classical order or "all".
std::vector<CheckReport> check_catalog(const Algebra& alg, std::string_view name);
std::vector<CheckReport> check_all(const Algebra& alg, std::uint64_t seed);

}  // namespace okubo
