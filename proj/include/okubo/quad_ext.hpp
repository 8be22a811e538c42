#pragma once

/**
 * @file quad_ext.hpp
 * @brief Exact arithmetic in K = Q(sqrt 3), its ring of integers Z[sqrt 3],
 * and the CM extension K(i).
 */

#include "okubo/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace okubo {

/// a + b*sqrt(3) with a, b rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(int n) : rat_(n) {}                      // NOLINT(google-explicit-constructor)
  QuadExt(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static QuadExt sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  bool is_rational() const { return irr_.is_zero(); }

  QuadExt operator-() const { return {-rat_, -irr_}; }
  QuadExt& operator+=(const QuadExt& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o);
  /// Throws std::domain_error when o is zero.
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) = default;

  /// Galois conjugate a - b*sqrt(3).
  QuadExt conjugate() const { return {rat_, -irr_}; }
  /// Tr_{K/Q}(x) = 2a.
  Rational trace() const { return rat_ * Rational(2); }
  /// N_{K/Q}(x) = a^2 - 3b^2.
  Rational norm() const { return rat_ * rat_ - Rational(3) * irr_ * irr_; }
  /// Sign under the real embedding sqrt(3) > 0, decided without floating point.
  int sign() const;

  /// Canonical text, e.g. "3/2", "-3/2*s3", "1/2 - 1/2*s3".
  std::string str() const;
  static std::optional<QuadExt> parse(std::string_view text);

 private:
  Rational rat_;
  Rational irr_;
};

/// Result of field division; empty when the divisor is zero.
std::optional<QuadExt> checked_div(const QuadExt& x, const QuadExt& y);

/// Compare under the real embedding sqrt(3) > 0.
inline bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

enum class RingTag { Z, Zsqrt3, Q, K };

std::string_view to_string(RingTag tag);
std::optional<RingTag> parse_ring_tag(std::string_view text);
bool is_member(const QuadExt& x, RingTag tag);

/// u + v*i with u, v in K. Used by the Hermitian matrix model.
class ComplexQuad {
 public:
  ComplexQuad() = default;
  ComplexQuad(QuadExt re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ComplexQuad(int n) : re_(n) {}                   // NOLINT(google-explicit-constructor)
  ComplexQuad(QuadExt re, QuadExt im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexQuad i() { return {QuadExt(0), QuadExt(1)}; }

  const QuadExt& re() const { return re_; }
  const QuadExt& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexQuad conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  QuadExt norm() const { return re_ * re_ + im_ * im_; }

  ComplexQuad operator-() const { return {-re_, -im_}; }
  ComplexQuad& operator+=(const ComplexQuad& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexQuad& operator-=(const ComplexQuad& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexQuad& operator*=(const ComplexQuad& o);

  friend ComplexQuad operator+(ComplexQuad a, const ComplexQuad& b) { return a += b; }
  friend ComplexQuad operator-(ComplexQuad a, const ComplexQuad& b) { return a -= b; }
  friend ComplexQuad operator*(ComplexQuad a, const ComplexQuad& b) { return a *= b; }
  friend bool operator==(const ComplexQuad& a, const ComplexQuad& b) = default;

  std::string str() const;

 private:
  QuadExt re_;
  QuadExt im_;
};

}  // namespace okubo
