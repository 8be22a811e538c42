#pragma once

/**
 * @file int_matrix.hpp
 * @brief Hermite and Smith normal forms over Z with unimodular transforms.
 */

#include "okubo/rational.hpp"

#include <vector>

namespace okubo {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant (Bareiss).
Integer int_determinant(const IntMatrix& a);

/// Row Hermite normal form: the nonzero rows of an upper echelon basis of the
/// row lattice, pivots positive, entries above each pivot reduced into
/// [0, pivot). Two matrices span the same row lattice iff their HNFs agree.
IntMatrix hermite_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  ///< unimodular, rows x rows
  IntMatrix s;  ///< diagonal, s_1 | s_2 | ..., nonnegative
  IntMatrix v;  ///< unimodular, cols x cols
  /// The diagonal of s (length min(rows, cols)).
  std::vector<Integer> invariants() const;
};

/// u * m * v = s.
SmithForm smith_form(const IntMatrix& m);

}  // namespace okubo
