#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blocklie/group.hpp"
#include "blocklie/polynomial.hpp"
#include "blocklie/scalar.hpp"

namespace blocklie {

/// Basis element of B(G): a generator L_{alpha,i} (i >= -1) or the central element c.
class BasisSymbol {
 public:
  /// Throws std::invalid_argument when index < -1.
  static BasisSymbol generator(GroupElement alpha, int index);
  /// The central element lives in weight zero of the given group.
  static BasisSymbol central(GroupKind kind);

  bool is_central() const { return central_; }
  /// Grading weight; zero for the central element.
  const GroupElement& weight() const { return alpha_; }
  /// Generator index i; meaningless for the central element.
  int index() const { return index_; }
  GroupKind kind() const { return alpha_.kind(); }

  friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) = default;
  /// Sorted by (alpha, i) with the central element last.
  friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b);

 private:
  BasisSymbol(GroupElement alpha, int index, bool central) : alpha_(std::move(alpha)), index_(index), central_(central) {}
  GroupElement alpha_;
  int index_ = -1;
  bool central_ = false;
};

/// Finite linear combination of basis symbols; zero coefficients are never stored.
class LieElement {
 public:
  using Terms = std::map<BasisSymbol, Scalar>;

  LieElement() = default;
  LieElement(const BasisSymbol& s, const Scalar& coeff = Scalar(1)) { add(s, coeff); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const BasisSymbol& s) const;

  void add(const BasisSymbol& s, const Scalar& coeff);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, const LieElement& e);
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// [L_{a,i}, L_{b,j}] = ((i+1)b - (j+1)a) L_{a+b,i+j} + a d_{a,-b} d_{i+j,-2} c; c is central.
LieElement bracket_basis(const BasisSymbol& x, const BasisSymbol& y);

/// Bilinear extension of bracket_basis.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Common weight of all terms (c counts as weight 0); nullopt if mixed or zero.
std::optional<GroupElement> weight_of(const LieElement& e);

/// x^alpha f(t) in the polynomial realization of B(Z).
struct PolyForm {
  GroupElement alpha = GroupElement::zero(GroupKind::Integers);
  Polynomial f;
  friend bool operator==(const PolyForm&, const PolyForm&) = default;
};

/// Image of a Lie element under L_{alpha,i} = x^alpha t^(i+1), grouped by alpha,
/// plus the coefficient of c.
struct Realization {
  std::vector<PolyForm> parts;
  Scalar central;
  friend bool operator==(const Realization&, const Realization&) = default;
};

/// x^alpha t^(i+1) -> L_{alpha,i}. Requires an Integers exponent.
LieElement from_poly(const PolyForm& p);
LieElement from_realization(const Realization& r);
/// Inverse of from_poly; parts sorted by alpha, zero parts omitted.
Realization to_poly(const LieElement& e);

/// [x^a f, x^b g] = x^(a+b) (b f' g - a f g') + a d_{a,-b} f(0) g(0) c.
Realization poly_bracket(const PolyForm& x, const PolyForm& y);

}  // namespace blocklie
