#include "okubo/rational.hpp"

#include <stdexcept>

namespace okubo {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto to_int = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) return std::nullopt;
    return Rational(to_int(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  const Integer d = to_int(den);
  if (d == 0) return std::nullopt;
  return Rational(to_int(num), d);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

long padic_valuation(Integer n, unsigned long p) {
  if (n == 0) throw std::domain_error("padic_valuation: zero");
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::optional<long> two_adic_valuation(const Rational& q) {
  if (q.is_zero()) return std::nullopt;
  return padic_valuation(q.numerator(), 2) - padic_valuation(q.denominator(), 2);
}

Integer odd_part_of_denominator(const Rational& q) {
  Integer d = q.denominator();
  while (mpz_even_p(d.get_mpz_t()) != 0) d /= 2;
  return d;
}

}  // namespace okubo
