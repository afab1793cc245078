#pragma once

#include <string>
#include <vector>

#include "blocklie/scalar.hpp"

namespace blocklie {

/// Dense univariate polynomial, coefficients stored low-to-high with no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  static Polynomial monomial(const Scalar& coeff, int degree);
  static Polynomial constant(const Scalar& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Scalar coefficient(int k) const;
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar evaluate(const Scalar& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

  /// Renders with the given variable name, e.g. "t^2+1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace blocklie
