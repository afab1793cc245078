#include "blocklie/lie.hpp"

#include <stdexcept>

namespace blocklie {

BasisSymbol BasisSymbol::generator(GroupElement alpha, int index) {
  if (index < -1) throw std::invalid_argument("index must be >= -1, got " + std::to_string(index));
  return BasisSymbol(std::move(alpha), index, false);
}

BasisSymbol BasisSymbol::central(GroupKind kind) { return BasisSymbol(GroupElement::zero(kind), -1, true); }

std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
  if (a.central_ != b.central_) return a.central_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
  return a.index_ <=> b.index_;
}

Scalar LieElement::coefficient(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar() : it->second;
}

void LieElement::add(const BasisSymbol& s, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

LieElement operator*(const Scalar& s, const LieElement& e) {
  LieElement out;
  if (s.is_zero()) return out;
  for (const auto& [sym, c] : e.terms_) out.terms_.emplace(sym, s * c);
  return out;
}

LieElement bracket_basis(const BasisSymbol& x, const BasisSymbol& y) {
  LieElement out;
  if (x.is_central() || y.is_central()) return out;
  const Scalar a = x.weight().scalar();
  const Scalar b = y.weight().scalar();
  const int i = x.index();
  const int j = y.index();
  const Scalar coeff = Scalar(i + 1) * b - Scalar(j + 1) * a;
  // i = j = -1 is the only way to reach i+j = -2, and it kills the coefficient.
  if (!coeff.is_zero()) out.add(BasisSymbol::generator(x.weight() + y.weight(), i + j), coeff);
  if (i + j == -2 && (x.weight() + y.weight()).is_zero()) out.add(BasisSymbol::central(x.kind()), a);
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) out += (cx * cy) * bracket_basis(sx, sy);
  return out;
}

std::optional<GroupElement> weight_of(const LieElement& e) {
  std::optional<GroupElement> w;
  for (const auto& [s, c] : e.terms()) {
    if (!w) w = s.weight();
    else if (*w != s.weight()) return std::nullopt;
  }
  return w;
}

LieElement from_poly(const PolyForm& p) {
  if (p.alpha.kind() != GroupKind::Integers)
    throw std::invalid_argument("the polynomial realization needs integer exponents, got " +
                                std::string(to_string(p.alpha.kind())));
  LieElement out;
  const auto& coeffs = p.f.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out.add(BasisSymbol::generator(p.alpha, static_cast<int>(k) - 1), coeffs[k]);
  return out;
}

LieElement from_realization(const Realization& r) {
  LieElement out;
  for (const auto& part : r.parts) out += from_poly(part);
  if (!r.central.is_zero()) out.add(BasisSymbol::central(GroupKind::Integers), r.central);
  return out;
}

Realization to_poly(const LieElement& e) {
  Realization out;
  for (const auto& [s, c] : e.terms()) {
    if (s.is_central()) {
      out.central += c;
      continue;
    }
    if (s.kind() != GroupKind::Integers)
      throw std::invalid_argument("the polynomial realization needs integer exponents");
    // terms are sorted by (alpha, i), so equal alphas are adjacent
    if (out.parts.empty() || out.parts.back().alpha != s.weight()) out.parts.push_back({s.weight(), {}});
    out.parts.back().f += Polynomial::monomial(c, s.index() + 1);
  }
  return out;
}

Realization poly_bracket(const PolyForm& x, const PolyForm& y) {
  Realization out;
  const Scalar a = x.alpha.scalar();
  const Scalar b = y.alpha.scalar();
  Polynomial body = b * (x.f.derivative() * y.f) - a * (x.f * y.f.derivative());
  if (!body.is_zero()) out.parts.push_back({x.alpha + y.alpha, std::move(body)});
  if ((x.alpha + y.alpha).is_zero()) out.central = a * x.f.coefficient(0) * y.f.coefficient(0);
  return out;
}

}  // namespace blocklie
