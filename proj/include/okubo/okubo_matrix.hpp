#pragma once

/**
 * @file okubo_matrix.hpp
 * @brief The Okubo algebra as 3x3 Hermitian traceless matrices over K(i),
 * with x * y = mu xy + conj(mu) yx - Tr(xy)/3 I and mu = (3 + i sqrt 3)/6.
 */

#include "okubo/algebra.hpp"
#include "okubo/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace okubo {

using Mat3 = std::array<std::array<ComplexQuad, 3>, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
ComplexQuad mat3_trace(const Mat3& a);
Mat3 mat3_adjoint(const Mat3& a);

/// Hermitian traceless; the constructor throws std::invalid_argument otherwise.
class HermTraceless3 {
 public:
  HermTraceless3() = default;
  explicit HermTraceless3(const Mat3& m);
  const Mat3& m() const { return m_; }
  static bool valid(const Mat3& m);

  friend HermTraceless3 operator+(const HermTraceless3& a, const HermTraceless3& b);
  friend HermTraceless3 operator-(const HermTraceless3& a, const HermTraceless3& b);
  friend HermTraceless3 operator*(const QuadExt& s, const HermTraceless3& a);
  friend bool operator==(const HermTraceless3& a, const HermTraceless3& b) = default;

 private:
  Mat3 m_{};
};

struct MatrixBasis {
  HermTraceless3 e;
  std::array<HermTraceless3, 7> ek;
  /// (e, e1, ..., e7)
  std::array<HermTraceless3, kDim> all() const;
};
MatrixBasis build_basis();

/// mu = (3 + i sqrt 3) / 6.
ComplexQuad okubo_mu();
HermTraceless3 matrix_mul(const HermTraceless3& x, const HermTraceless3& y);
/// n(x) = Tr(x^2) / 6.
QuadExt matrix_norm(const HermTraceless3& x);
/// <x, y> = Tr(xy) / 3, so <x, x> = 2 n(x).
QuadExt matrix_form(const HermTraceless3& x, const HermTraceless3& y);
/// (e * x) * (y * e).
HermTraceless3 kaplansky(const HermTraceless3& e, const HermTraceless3& x, const HermTraceless3& y);
/// (xy + yx) / 2, without the trace correction.
Mat3 jordan_half(const HermTraceless3& x, const HermTraceless3& y);

HermTraceless3 combine(const std::array<HermTraceless3, kDim>& basis, const std::array<QuadExt, kDim>& c);
/// Coordinates in the given basis; nullopt if x is outside its span.
std::optional<std::array<QuadExt, kDim>> coordinates(const std::array<HermTraceless3, kDim>& basis,
                                                     const HermTraceless3& x);

/// Seeded coordinates from {-2, -3/2, ..., 2}.
std::array<QuadExt, kDim> sample_coords(std::uint64_t seed, std::size_t index);

struct MatrixLawsReport {
  std::size_t samples = 0;
  bool idempotent = false;  ///< e * e = e
  std::size_t type_failures = 0;
  std::size_t flexibility_failures = 0;
  std::size_t composition_failures = 0;
  std::size_t form_assoc_failures = 0;
  std::size_t trace_failures = 0;  ///< Tr(x * y) != 0
  bool has_unit = true;            ///< solved exactly over K
  std::optional<std::pair<int, int>> signature;
  Matrix<QuadExt> gram;
  // Kaplansky product
  std::size_t kaplansky_unit_failures = 0;
  std::size_t kaplansky_alternative_failures = 0;
  std::size_t kaplansky_composition_failures = 0;
  // Jordan fixture
  std::size_t jordan_commutative_failures = 0;
  bool jordan_leaves_type = false;  ///< some (xy + yx)/2 has nonzero trace
};
MatrixLawsReport verify_laws(std::size_t samples, std::uint64_t seed);

/// Signed permutation with index 0 fixed: f_k -> sign[k] e_{perm[k]}.
struct BasisMatch {
  std::array<int, kDim> perm{};
  std::array<int, kDim> sign{};
};

struct CrossRealizationReport {
  std::size_t raw_matches = 0;            ///< pairs intertwined by e -> 1, e_k -> e_k
  std::size_t orthonormal_matches = 0;    ///< same, on (e, e1, e2, e3, 2e4 - sqrt3 e, e5, e6, e7)
  bool raw_basis_orthonormal = false;
  std::optional<BasisMatch> intertwiner;  ///< signed permutation of the orthonormal basis, if any
  std::size_t candidates = 0;             ///< leaves reached by the search
};
CrossRealizationReport cross_realization(const Algebra& alg);

}  // namespace okubo
