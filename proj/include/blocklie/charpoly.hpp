#pragma once

#include <string>
#include <vector>

#include "blocklie/polynomial.hpp"
#include "blocklie/scalar.hpp"

namespace blocklie {

/// Monic polynomial a_0 + a_1 t + ... + t^d over Q, coefficients low-to-high.
class CharPoly {
 public:
  /// Throws std::invalid_argument unless non-empty with leading coefficient 1.
  explicit CharPoly(std::vector<Rational> coefficients);
  /// Appends the leading 1 to a_0..a_{d-1}.
  static CharPoly from_lower(std::vector<Rational> lower);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }

  Polynomial to_polynomial() const;
  std::string to_string() const { return to_polynomial().to_string("t"); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace blocklie
