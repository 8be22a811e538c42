#pragma once

/**
 * @file catalog.hpp
 * @brief Classical integral sets inside the octonions: Gaussian, Eisenstein,
 * Hamilton, Hurwitz, Cayley-Graves and Coxeter-Dickson.
 *
 * Complex and quaternionic orders are realized on the subalgebras spanned by
 * 1 and the first Fano line (a, b, c) of the convention: i = e_a, j = e_b,
 * k = e_c.
 */

#include "okubo/orders.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okubo {

struct ClassicalOrderSpec {
  std::string name;
  std::string ambient;  ///< complex, quaternion, octonion
  std::vector<AlgebraElem> basis;
  std::size_t expected_units = 0;
  std::string lattice;
  Integer expected_det;
  Integer expected_min;
  std::size_t expected_kissing = 0;
};

class OutOfScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> classical_names();
/// Throws OutOfScopeError for hybrid / 4A2 / 2D4 and std::invalid_argument
/// for unknown names.
ClassicalOrderSpec build_classical(const Algebra& alg, std::string_view name);

struct ClassicalReport {
  std::string name;
  std::size_t units = 0;
  std::size_t unit_products_outside = 0;
  std::size_t missing_inverses = 0;
  std::size_t constant_violations = 0;  ///< products of basis elements outside the Z-span
  std::size_t trace_norm_violations = 0;
  Rational det;
  Rational minimum;
  std::size_t kissing = 0;
};
ClassicalReport verify_classical(const Algebra& alg, const ClassicalOrderSpec& spec);

}  // namespace okubo
