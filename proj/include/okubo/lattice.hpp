#pragma once

/**
 * @file lattice.hpp
 * @brief Integral lattices: sublattice invariants, exact short-vector
 * enumeration, discriminant forms, gluing and p-adic saturation.
 *
 * Norms follow the bilinear form <x, x> = 2 n(x) throughout, so E8 has
 * minimum 2. Shell counting is the one place that speaks in terms of the
 * composition norm n.
 */

#include "okubo/int_matrix.hpp"
#include "okubo/linalg.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okubo {

using GramMatrix = Matrix<Rational>;

/// Rows of `basis` are coordinates in an ambient Q-space with Gram `ambient_gram`.
struct LatticeZ {
  Matrix<Rational> basis;
  GramMatrix ambient_gram;

  std::size_t rank() const { return basis.size(); }
  /// B G B^T.
  GramMatrix gram() const;
};

/// Z^n with the given Gram.
LatticeZ standard_lattice(const GramMatrix& gram);
LatticeZ scaled(const LatticeZ& l, const Rational& c);
/// Rows of l's basis given as integer combinations of the standard basis.
LatticeZ sublattice_from_rows(const LatticeZ& m, const IntMatrix& rows);

bool is_integral(const Matrix<Rational>& m);
bool is_even(const GramMatrix& g);
/// Throws std::invalid_argument on a non-integral entry.
IntMatrix to_integer_matrix(const Matrix<Rational>& m);
Matrix<Rational> to_rational_matrix(const IntMatrix& m);

struct HnfSnf {
  IntMatrix hermite;
  std::vector<Integer> smith;
  SmithForm transforms;
};
HnfSnf hnf_snf(const IntMatrix& m);

/// Raised when a lattice that should be contained in another is not.
class NotContainedError : public std::runtime_error {
 public:
  NotContainedError(std::size_t row, std::vector<Rational> coords);
  std::size_t row;
  std::vector<Rational> coords;  ///< coordinates of the offending basis row in the outer lattice
};

/// Coordinates of inner's basis rows in outer's basis; throws NotContainedError.
IntMatrix relative_coordinates(const LatticeZ& inner, const LatticeZ& outer);
bool contains(const LatticeZ& outer, const LatticeZ& inner);
/// Canonical integral basis: HNF of the basis scaled by its common denominator.
IntMatrix canonical_basis(const LatticeZ& l, Integer* scale = nullptr);
/// Mutual containment plus agreement of canonical bases.
bool same_lattice(const LatticeZ& a, const LatticeZ& b);

struct SublatticeInvariants {
  Integer index;
  Rational det_l;
  Rational det_m;
  std::vector<Integer> smith;
  bool contains_4m = false;  ///< 4M inside L
  bool inside_2m = false;    ///< L inside 2M
};
SublatticeInvariants sublattice_invariants(const LatticeZ& l, const LatticeZ& m);

struct ShortVector {
  std::vector<long> coords;
  Rational norm;
};

/// Called for every nonzero x with x^T G x <= bound.
using ShortVectorVisitor = std::function<void(const std::vector<long>&, const Rational&)>;

/**
 * Fincke-Pohst enumeration with an exact rational LDL^T. Both x and -x are
 * visited. Throws std::invalid_argument if the Gram is not positive definite.
 */
void enumerate_short(const GramMatrix& gram, const Rational& bound, const ShortVectorVisitor& visit);
/// All nonzero vectors with norm <= bound, sorted lexicographically.
std::vector<ShortVector> short_vectors(const GramMatrix& gram, const Rational& bound);
/// norm -> count over nonzero vectors with norm <= bound.
std::map<Rational, std::size_t> norm_histogram(const GramMatrix& gram, const Rational& bound);

struct MinimumInfo {
  Rational minimum;
  std::size_t kissing = 0;
};
/// Minimum and kissing number; searches up to the smallest diagonal entry.
MinimumInfo minimum_and_kissing(const GramMatrix& gram);

Integer sigma3(int n);

struct ShellRow {
  int n = 0;
  std::size_t count = 0;
  Integer formula;
  bool match = false;
};
/// Counts of composition norm n (<x,x> = 2n) for n = 1..maxn against 240 sigma3(n).
/// maxn is capped at 6.
std::vector<ShellRow> shell_counts_vs_sigma3(const GramMatrix& gram, int maxn);

struct DiscriminantGroup {
  std::vector<Integer> invariants;                ///< nontrivial invariant factors, d1 | d2 | ...
  std::vector<std::vector<Rational>> generators;  ///< dual lifts in L-coordinates
  std::vector<Rational> q_values;                 ///< q(g) = <g, g> reduced into [0, 2)
  Integer order() const;
};

/// A = L^* / L for an integral Gram.
DiscriminantGroup discriminant_group_and_form(const LatticeZ& l);

/// Reduce into [0, 2).
Rational mod2(const Rational& q);
/// Reduce every coordinate into [0, 1).
std::vector<Rational> reduce_mod_lattice(const std::vector<Rational>& v);

/// Elements of the subgroup of Q^n / Z^n generated by gens. Throws
/// std::length_error past `limit` elements.
std::vector<std::vector<Rational>> enumerate_subgroup(const std::vector<std::vector<Rational>>& gens,
                                                      std::size_t limit = std::size_t{1} << 16);

class NotIsotropicError : public std::runtime_error {
 public:
  NotIsotropicError(std::vector<Rational> h, Rational q);
  std::vector<Rational> h;
  Rational q;
};

/// Overlattice of l generated by lifts of the subgroup with the given
/// generators (L-coordinates). Every element must have q(h) = 0 mod 2.
LatticeZ glue(const LatticeZ& l, const std::vector<std::vector<Rational>>& gens);

/// {x in m : p^k x in l for some k}. Requires l inside m.
LatticeZ saturate(const LatticeZ& l, const LatticeZ& m, unsigned long p);

/// JSON fixture: {"gram": [[..]], "basis": [[..]], "ambient_gram": [[..]]},
/// entries as strings. "gram" is checked against B G B^T when present.
LatticeZ parse_lattice_fixture(std::string_view text);
std::string lattice_fixture_json(const LatticeZ& l);

}  // namespace okubo
