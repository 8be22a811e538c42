#pragma once

/**
 * @file algebra.hpp
 * @brief Octonion, para-octonion and Okubo (Petersson) products on a common
 * 8-dimensional coordinate space over Q(sqrt 3).
 *
 * Coordinates are taken on {e0 = 1, e1, ..., e7}. The octonion product comes
 * from a Fano-plane table (see Convention); the other two products are
 * derived from it:
 *
 *   x . y   octonion product
 *   x o y = conj(x) . conj(y)                       (para-octonion)
 *   x * y = tau(conj(x)) . tau^2(conj(y))           (Okubo, Petersson form)
 *
 * where tau fixes e0, e1, e3, e7 and rotates the planes (e2, e5), (e4, e6)
 * by 2 pi / 3.
 */

#include "okubo/quad_ext.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace okubo {

inline constexpr int kDim = 8;

using AlgebraElem = std::array<QuadExt, kDim>;

/// e_k as an element.
AlgebraElem basis_elem(int k, int sign = 1);
AlgebraElem operator+(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem operator-(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem operator-(const AlgebraElem& a);
AlgebraElem operator*(const QuadExt& s, const AlgebraElem& a);
bool is_zero(const AlgebraElem& a);
std::string to_string(const AlgebraElem& a);

/// A signed basis vector: sign * e_index.
struct SignedUnit {
  int index = 0;
  int sign = 1;
};

/**
 * Octonion multiplication table: e_i e_j = sign(i,j) e_{index(i,j)}.
 *
 * Built from seven oriented Fano lines (a, b, c) meaning e_a e_b = e_c (and
 * cyclically). A table is accepted only if the resulting algebra is
 * alternative, which is checked on all basis triples at construction.
 */
class MultTable {
 public:
  using Line = std::array<int, 3>;

  MultTable(std::string id, const std::array<Line, 7>& lines);

  const std::string& id() const { return id_; }
  const std::array<Line, 7>& lines() const { return lines_; }
  SignedUnit product(int i, int j) const { return table_[i][j]; }

 private:
  std::string id_;
  std::array<Line, 7> lines_;
  std::array<std::array<SignedUnit, kDim>, kDim> table_{};
};

/**
 * A named coordinate convention: the Fano table plus the choice of the
 * Dickson generators i, j, k, l used to write down the Coxeter-Dickson order.
 */
struct Convention {
  MultTable table;
  std::array<SignedUnit, 4> dickson_ijkl;
  std::string description;

  const std::string& id() const { return table.id(); }
};

/// Id of the convention used when none is requested.
std::string_view default_convention_id();
/// All known conventions; lookup throws std::invalid_argument on unknown id.
std::vector<std::string> convention_ids();
const Convention& convention(std::string_view id);

enum class Product { Octonion, Para, Okubo };
std::string_view to_string(Product p);

/// 8x8 matrix over K acting on coordinate columns.
using AutMatrix = std::array<std::array<QuadExt, kDim>, kDim>;

AutMatrix tau_matrix();
AutMatrix identity_matrix();
AutMatrix mat_mul(const AutMatrix& a, const AutMatrix& b);
AlgebraElem apply(const AutMatrix& m, const AlgebraElem& x);

class Algebra {
 public:
  explicit Algebra(const Convention& conv);

  const Convention& conv() const { return *conv_; }
  const std::string& convention_id() const { return conv_->id(); }

  AlgebraElem oct_mul(const AlgebraElem& x, const AlgebraElem& y) const;
  AlgebraElem para_mul(const AlgebraElem& x, const AlgebraElem& y) const;
  AlgebraElem okubo_mul(const AlgebraElem& x, const AlgebraElem& y) const;
  AlgebraElem mul(Product p, const AlgebraElem& x, const AlgebraElem& y) const;

  /// power is taken mod 3.
  AlgebraElem tau(const AlgebraElem& x, int power = 1) const;

 private:
  const Convention* conv_;
  AutMatrix tau_;
  AutMatrix tau2_;
};

AlgebraElem conj(const AlgebraElem& x);
/// Composition norm n(x) = sum x_k^2.
QuadExt norm(const AlgebraElem& x);
/// x + conj(x), read off as a scalar.
QuadExt trace(const AlgebraElem& x);
/// <x, y> = x conj(y) + y conj(x) as a scalar; <x, x> = 2 n(x).
QuadExt inner(const AlgebraElem& x, const AlgebraElem& y);

/// True iff (-1/2 + v) o (-1/2 + v) = -1/2 + v exactly. Requires v0 = 0.
bool para_idempotent_check(const Algebra& alg, const AlgebraElem& v);

}  // namespace okubo
