#pragma once

/**
 * @file conductor.hpp
 * @brief The Okubo conductor sublattice L_Ok = D Lambda of the
 * Coxeter-Dickson lattice, its discriminant form, saturation and gluing back
 * to E8, and the rank-16 trace lattice of the scaled order.
 *
 * Lattices here live in Coxeter-Dickson coordinates: Lambda is Z^8 with the
 * Gram <b_i, b_j>, and L_Ok has basis rows D_i e_i.
 */

#include "okubo/orders.hpp"

namespace okubo {

LatticeZ cd_lattice(const Algebra& alg);
LatticeZ conductor_lattice(const Algebra& alg, const ScalingVector& a = kOkuboScaling);

struct ConductorReport {
  SublatticeInvariants inv;
  bool even = false;
  bool positive_definite = false;
  Rational minimum;
  std::size_t minimal_vectors = 0;
  std::size_t below_8 = 0;   ///< vectors with norm < 8
  std::size_t norm_2 = 0;    ///< vectors with norm 2
  bool witness_2b0 = false;  ///< 2 b0 occurs with norm 8
};
ConductorReport conductor_report(const Algebra& alg);

struct GlueReport {
  DiscriminantGroup discriminant;
  std::vector<Integer> h_invariants;  ///< Lambda / L_Ok
  Integer h_order;
  std::size_t h_elements = 0;
  std::size_t q_nonzero = 0;
  bool maximal = false;  ///< |H|^2 = |A|
  LatticeZ glued;
  bool glued_even = false;
  Rational glued_det;
  bool glued_is_lambda = false;
  LatticeZ saturation;
  bool saturation_is_lambda = false;
  bool saturation_idempotent = false;
  bool okubo_closed_on_saturation = true;
  std::vector<Violation> okubo_violations;
};
GlueReport glue_report(const Algebra& alg);

/// Generators of M / L in L-coordinates (rows of T^{-1}).
std::vector<std::vector<Rational>> quotient_generators(const LatticeZ& l, const LatticeZ& m);

struct TraceLatticeReport {
  GramMatrix gram;
  bool even = false;
  bool positive_definite = false;
  Rational minimum;
  std::size_t minimal_vectors = 0;
  std::size_t below_16 = 0;
};
/// Basis u_0..u_7, sqrt3 u_0..sqrt3 u_7 with Gram Tr_{K/Q} <v_a, v_b>.
TraceLatticeReport trace_lattice_16(const Algebra& alg);

}  // namespace okubo
