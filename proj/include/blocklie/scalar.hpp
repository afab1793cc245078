#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blocklie {

using Rational = mpq_class;

/// Parses "p", "p/q" or "p/2^k" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" with positive denominator.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Every grading group except LexZ2 maps into Q, so almost all scalars carry a
/// zero surd part. LexZ2 needs a rank-two additive subgroup of the scalar field,
/// which Q does not have; (x, y) is sent to x*sqrt(2) + y.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : rational_(v) {}
  Scalar(long v) : rational_(v) {}
  Scalar(const Rational& r) : rational_(r) { rational_.canonicalize(); }
  Scalar(const Rational& r, const Rational& s) : rational_(r), surd_(s) {
    rational_.canonicalize();
    surd_.canonicalize();
  }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }

  /// Throws std::domain_error when the surd part is nonzero.
  const Rational& to_rational() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  Scalar operator-() const { return Scalar(-rational_, -surd_); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rational_ == b.rational_ && a.surd_ == b.surd_;
  }

 private:
  Rational rational_{0};
  Rational surd_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// "p/q" for rationals, "(p/q+r/s*sqrt2)" otherwise.
std::string to_string(const Scalar& s);

/// Accepts the output of to_string(Scalar).
Scalar parse_scalar(std::string_view text);

}  // namespace blocklie
