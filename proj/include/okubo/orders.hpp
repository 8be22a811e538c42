#pragma once

/**
 * @file orders.hpp
 * @brief The Coxeter-Dickson order, structure constants under the three
 * products, closure over Z and Z[sqrt 3], and the diagonal 2-adic scaling
 * that makes the Okubo constants integral.
 */

#include "okubo/algebra.hpp"
#include "okubo/lattice.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okubo {

struct OrderBasis {
  std::array<AlgebraElem, kDim> b;
  std::string label;
};

/// b0 = 1, b1 = i, b2 = j, b3 = k, b4 = h, b5 = ih, b6 = jh, b7 = kh, h = (i+j+k+l)/2.
OrderBasis cd_basis(const Algebra& alg);
/// u_i = 2^{a_i} b_i.
OrderBasis scaled_basis(const OrderBasis& b, const std::array<int, kDim>& exponents);
/// <b_i, b_j>.
Matrix<QuadExt> gram_of(const OrderBasis& b);
/// The Gram as a rational matrix; throws if an entry has a sqrt 3 part.
GramMatrix rational_gram(const OrderBasis& b);

/// Quadratic form sum_{i<=j} coeff[i][j] a_i a_j (upper triangle used).
using QuadraticPoly = std::array<std::array<Rational, kDim>, kDim>;
using LinearPoly = std::array<Rational, kDim>;

/// Published norm and trace polynomials of the Coxeter-Dickson order.
QuadraticPoly published_cd_norm_poly();
LinearPoly published_cd_trace_poly();

struct PolyMismatch {
  int i = 0;
  int j = 0;  ///< j == i for square terms; j == -1 for linear terms
  Rational published;
  Rational computed;
};

struct CdBasisReport {
  OrderBasis basis;
  GramMatrix gram;
  Rational det;
  Rational minimum;
  std::size_t kissing = 0;
  QuadraticPoly norm_poly;
  LinearPoly trace_poly;
  std::vector<PolyMismatch> norm_mismatches;
  std::vector<PolyMismatch> trace_mismatches;
};
CdBasisReport cd_basis_and_gram(const Algebra& alg);

/// The fourteen index quadruples of the half-integral units in the published
/// list, read positionally as e0..e7 = 1, i, j, k, l, il, jl, kl.
std::vector<std::array<int, 4>> published_unit_shapes();

struct UnitsReport {
  std::vector<AlgebraElem> units;  ///< sorted by coordinates in the order basis
  std::size_t products_checked = 0;
  std::size_t products_not_units = 0;
  std::size_t missing_inverses = 0;
  std::vector<std::array<int, 4>> missing_shapes;
  bool axes_present = false;  ///< +-e_k for all k
};
UnitsReport units240(const Algebra& alg);

struct StructureConstants {
  Product product = Product::Octonion;
  std::string convention;
  std::array<std::array<std::array<QuadExt, kDim>, kDim>, kDim> c{};  ///< c[i][j][k]
  std::optional<OrderBasis> basis;
};

class SingularBasisError : public std::runtime_error {
 public:
  SingularBasisError() : std::runtime_error("basis is singular") {}
};

StructureConstants structure_constants(const Algebra& alg, Product p, const OrderBasis& basis);
/// Sum_k c_ij^k b_k == b_i o b_j for all 64 pairs.
bool reconstruction_holds(const Algebra& alg, const StructureConstants& sc);
/// Distinct denominators over all rational and sqrt 3 parts.
std::vector<Integer> denominators(const StructureConstants& sc);

struct Violation {
  int i = 0;
  int j = 0;
  int k = 0;
  QuadExt coefficient;
};

struct IntegralSystemReport {
  RingTag ring = RingTag::Z;
  std::vector<Violation> violations;
  std::vector<QuadExt> trace_values;  ///< tr_e(b_i), then tr_e(b_i o b_j) when computed
  std::vector<QuadExt> norm_values;   ///< n(b_i), then <b_i, b_j>
  bool pass = false;
};

/**
 * Every c_ij^k must lie in the ring; when the basis is known, also
 * tr_e(b_i) = <b_i, 1> and n(b_i) are tested.
 */
IntegralSystemReport closure_test(const StructureConstants& sc, RingTag ring);

/// Coefficient of the form (odd/2) sqrt 3 plus anything rational.
bool is_half_odd_sqrt3(const QuadExt& x);

using ScalingVector = std::array<int, kDim>;

struct ScalingSearchResult {
  int max_exp = 0;
  std::size_t solutions = 0;
  std::size_t nodes = 0;
  std::vector<ScalingVector> minimal;
};

class NoScalingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * All a in {0..max_exp}^8 with 2^{a_i + a_j - a_k} c_ij^k in Z[sqrt 3], and
 * their componentwise-minimal elements (sorted). Throws NoScalingError if
 * there is none.
 */
ScalingSearchResult scaling_search(const StructureConstants& sc, int max_exp);
/// Whether a single exponent vector makes all scaled constants R-integral.
bool scaling_is_integral(const StructureConstants& sc, const ScalingVector& a);
/// m_ij^k = (D_i D_j / D_k) c_ij^k.
StructureConstants rescale(const StructureConstants& sc, const ScalingVector& a);

inline constexpr ScalingVector kOkuboScaling{1, 1, 1, 1, 2, 2, 2, 2};

/**
 * Builds u_i = 2^{a_i} b_i, computes the Okubo constants on u directly and
 * checks them together with tr_e(u_i), n(u_i), <u_i, u_j> and tr_e(u_i * u_j)
 * against Z[sqrt 3].
 */
IntegralSystemReport scaled_order_verify(const Algebra& alg, const ScalingVector& a);

/// b0 * b2 in the CD basis, and the published expansion.
std::array<QuadExt, kDim> okubo_b0_b2(const Algebra& alg);
std::array<QuadExt, kDim> published_b0_b2();

/// Lines "i j k a/b c/d" for every nonzero c_ij^k.
std::string dump_constants(const StructureConstants& sc);
/// Inverse of dump_constants; throws std::invalid_argument with the line number.
StructureConstants parse_constants(std::string_view text, Product p, std::string convention);

}  // namespace okubo
