#include "blocklie/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace blocklie {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));

  mpz_class num = parse_integer(s.substr(0, slash), text);
  std::string_view den_text = trim(s.substr(slash + 1));
  mpz_class den;
  if (const auto caret = den_text.find('^'); caret != std::string_view::npos) {
    mpz_class base = parse_integer(den_text.substr(0, caret), text);
    mpz_class exp = parse_integer(den_text.substr(caret + 1), text);
    if (exp < 0 || exp > 4096) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  } else {
    den = parse_integer(den_text, text);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

const Rational& Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar " + blocklie::to_string(*this) + " is not rational");
  return rational_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  rational_ += o.rational_;
  surd_ += o.surd_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rational_ -= o.rational_;
  surd_ -= o.surd_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    rational_ *= o.rational_;
    return *this;
  }
  Rational r = rational_ * o.rational_ + 2 * surd_ * o.surd_;
  Rational s = rational_ * o.surd_ + surd_ * o.rational_;
  rational_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_rational()) {
    rational_ /= o.rational_;
    surd_ /= o.rational_;
    return *this;
  }
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm never vanishes since sqrt 2 is irrational.
  Rational norm = o.rational_ * o.rational_ - 2 * o.surd_ * o.surd_;
  *this *= Scalar(Rational(o.rational_ / norm), Rational(-o.surd_ / norm));
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.is_rational()) return to_string(s.rational_part());
  std::string out = "(";
  if (!is_zero(s.rational_part())) {
    out += to_string(s.rational_part());
    if (sgn(s.surd_part()) > 0) out += "+";
  }
  out += to_string(s.surd_part()) + "*sqrt2)";
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = trim(s.substr(1, s.size() - 2));
    constexpr std::string_view kSurd = "*sqrt2";
    if (s.size() < kSurd.size() || s.substr(s.size() - kSurd.size()) != kSurd)
      throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    s.remove_suffix(kSurd.size());
    // split at the last sign that is not leading
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '^') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) return Scalar(Rational(0), parse_rational(s));
    return Scalar(parse_rational(s.substr(0, split)), parse_rational(s.substr(split)));
  }
  return Scalar(parse_rational(s));
}

}  // namespace blocklie
