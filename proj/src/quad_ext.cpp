#include "okubo/quad_ext.hpp"

#include <cctype>
#include <stdexcept>

namespace okubo {

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (irr_.is_zero() && o.irr_.is_zero()) {
    rat_ *= o.rat_;
    return *this;
  }
  Rational r = rat_ * o.rat_ + Rational(3) * irr_ * o.irr_;
  Rational s = rat_ * o.irr_ + irr_ * o.rat_;
  rat_ = std::move(r);
  irr_ = std::move(s);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
  // (a+b s)^-1 = (a-b s)/(a^2-3b^2); the norm is nonzero since sqrt 3 is irrational.
  const Rational n = o.norm();
  *this *= o.conjugate();
  rat_ /= n;
  irr_ /= n;
  return *this;
}

std::optional<QuadExt> checked_div(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) return std::nullopt;
  return x / y;
}

int QuadExt::sign() const {
  const int a = rat_.sign();
  const int b = irr_.sign();
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare a^2 with 3 b^2.
  const int c = (rat_ * rat_ <=> Rational(3) * irr_ * irr_) < 0 ? -1 : 1;
  return a > 0 ? c : -c;
}

std::string QuadExt::str() const {
  if (irr_.is_zero()) return rat_.str();
  if (rat_.is_zero()) return irr_.str() + "*s3";
  if (irr_.sign() < 0) return rat_.str() + " - " + (-irr_).str() + "*s3";
  return rat_.str() + " + " + irr_.str() + "*s3";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

namespace {

// term := rational ['*s3'] | 's3'
bool parse_term(std::string_view t, Rational& coeff, bool& irrational) {
  irrational = false;
  constexpr std::string_view suffix = "*s3";
  if (t == "s3") {
    coeff = Rational(1);
    irrational = true;
    return true;
  }
  if (t.size() > suffix.size() && t.substr(t.size() - suffix.size()) == suffix) {
    t.remove_suffix(suffix.size());
    irrational = true;
  }
  auto r = Rational::parse(t);
  if (!r) return false;
  coeff = *r;
  return true;
}

}  // namespace

std::optional<QuadExt> QuadExt::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) return std::nullopt;
  QuadExt out;
  bool seen_rat = false;
  bool seen_irr = false;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    // A leading sign belongs to the term; "+-" is tolerated as a single sign.
    while (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) {
      if (compact[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    if (end == pos) return std::nullopt;
    Rational coeff;
    bool irrational = false;
    if (!parse_term(std::string_view(compact).substr(pos, end - pos), coeff, irrational))
      return std::nullopt;
    if (sign < 0) coeff = -coeff;
    if (irrational) {
      if (seen_irr) return std::nullopt;
      seen_irr = true;
      out.irr_ = coeff;
    } else {
      if (seen_rat) return std::nullopt;
      seen_rat = true;
      out.rat_ = coeff;
    }
    pos = end;
  }
  return out;
}

std::string_view to_string(RingTag tag) {
  switch (tag) {
    case RingTag::Z: return "Z";
    case RingTag::Zsqrt3: return "Zsqrt3";
    case RingTag::Q: return "Q";
    case RingTag::K: return "K";
  }
  return "?";
}

std::optional<RingTag> parse_ring_tag(std::string_view text) {
  if (text == "Z") return RingTag::Z;
  if (text == "Zsqrt3") return RingTag::Zsqrt3;
  if (text == "Q") return RingTag::Q;
  if (text == "K") return RingTag::K;
  return std::nullopt;
}

bool is_member(const QuadExt& x, RingTag tag) {
  switch (tag) {
    case RingTag::Z: return x.irr().is_zero() && x.rat().is_integer();
    case RingTag::Zsqrt3: return x.rat().is_integer() && x.irr().is_integer();
    case RingTag::Q: return x.irr().is_zero();
    case RingTag::K: return true;
  }
  return false;
}

ComplexQuad& ComplexQuad::operator*=(const ComplexQuad& o) {
  QuadExt r = re_ * o.re_ - im_ * o.im_;
  QuadExt s = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(s);
  return *this;
}

std::string ComplexQuad::str() const {
  if (im_.is_zero()) return re_.str();
  return "(" + re_.str() + ") + (" + im_.str() + ")*i";
}

}  // namespace okubo
