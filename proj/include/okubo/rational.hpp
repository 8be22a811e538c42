#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals kept in lowest terms.
 *
 * Thin value wrapper around GMP's mpq_class. Every constructor canonicalizes,
 * so equality is syntactic and the denominator is always positive.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace okubo {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a" or "a/b".
  std::string str() const { return value_.get_str(); }
  /// Inverse of str(); also accepts surrounding whitespace. Returns nullopt on
  /// malformed input or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_{0};
};

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);
Rational abs(const Rational& q);

/// 2-adic valuation; nullopt for zero.
std::optional<long> two_adic_valuation(const Rational& q);
/// p-adic valuation of a nonzero integer.
long padic_valuation(Integer n, unsigned long p);
/// Denominator with every factor of 2 removed.
Integer odd_part_of_denominator(const Rational& q);

}  // namespace okubo
