#include "printing.hpp"

#include <random>

#include "blocklie/io.hpp"
#include "blocklie/lie.hpp"

using namespace blocklie;

namespace {

BasisSymbol L(long a, int i) { return BasisSymbol::generator(GroupElement::integer(a), i); }
const BasisSymbol kC = BasisSymbol::central(GroupKind::Integers);

BasisSymbol random_symbol(std::mt19937_64& rng, GroupKind kind) {
  std::uniform_int_distribution<int> pick(0, 9), index(-1, 6);
  if (pick(rng) == 0) return BasisSymbol::central(kind);
  return BasisSymbol::generator(sample_element(kind, rng, 8), index(rng));
}

LieElement random_element(std::mt19937_64& rng, GroupKind kind) {
  std::uniform_int_distribution<int> terms(0, 4), num(-9, 9), den(1, 9);
  LieElement e;
  for (int n = terms(rng); n > 0; --n) e.add(random_symbol(rng, kind), Scalar(Rational(num(rng), den(rng))));
  return e;
}

}  // namespace

TEST_CASE("bracket_basis examples") {
  CHECK(bracket_basis(L(1, 0), L(-1, 0)) == LieElement(L(0, 0), Scalar(-2)));
  CHECK(bracket_basis(L(3, 2), L(3, 2)).is_zero());
  CHECK(bracket_basis(L(1, -1), L(-1, -1)) == LieElement(kC));
  CHECK(bracket_basis(L(0, 2), L(0, 5)).is_zero());
  CHECK(bracket_basis(kC, L(4, 1)).is_zero());
  CHECK(bracket_basis(L(2, -1), kC).is_zero());
  // (i+1) b - (j+1) a = 1*3 - 2*2 = -1, no central term since a != -b
  CHECK(bracket_basis(L(2, 0), L(3, 1)) == LieElement(L(5, 1), Scalar(-1)));
  CHECK(to_string(bracket_basis(L(1, 0), L(-1, 0))) == "-2*L(0,0)");
}

TEST_CASE("generator index must be at least -1") {
  CHECK_THROWS_WITH_AS(L(1, -2), doctest::Contains("index must be >= -1"), std::invalid_argument);
}

TEST_CASE("bracket is bilinear") {
  CHECK(bracket(LieElement(), LieElement(L(1, 0))).is_zero());
  CHECK(bracket(LieElement(L(1, 0), Scalar(2)), LieElement(L(-1, 0), Scalar(3))) ==
        LieElement(L(0, 0), Scalar(-12)));
  CHECK(bracket(LieElement(L(1, 0)) + LieElement(kC), LieElement(L(-1, 0))) == LieElement(L(0, 0), Scalar(-2)));
}

TEST_CASE("weight_of") {
  CHECK(*weight_of(LieElement(L(5, 3))) == GroupElement::integer(5));
  CHECK(*weight_of(LieElement(kC)) == GroupElement::integer(0));
  CHECK_FALSE(weight_of(LieElement(L(1, 0)) + LieElement(L(2, 0))).has_value());
  CHECK(*weight_of(LieElement(L(0, 1)) + LieElement(kC)) == GroupElement::integer(0));
}

TEST_CASE("polynomial realization") {
  const PolyForm p{GroupElement::integer(2), Polynomial({Scalar(-1), Scalar(0), Scalar(0), Scalar(1)})};
  CHECK(from_poly(p) == LieElement(L(2, 2)) - LieElement(L(2, -1)));
  CHECK(from_poly(PolyForm{GroupElement::integer(1), Polynomial::constant(Scalar(1))}) == LieElement(L(1, -1)));
  CHECK_THROWS_AS(from_poly(PolyForm{GroupElement::dyadic(1), Polynomial::constant(Scalar(1))}),
                  std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> alpha(-5, 5), deg(0, 6), num(-9, 9), den(1, 9);
  for (int n = 0; n < 100; ++n) {
    std::vector<Scalar> c;
    for (int k = deg(rng); k >= 0; --k) c.push_back(Scalar(Rational(num(rng), den(rng))));
    const PolyForm q{GroupElement::integer(alpha(rng)), Polynomial(c)};
    const Realization r = to_poly(from_poly(q));
    if (q.f.is_zero()) {
      CHECK(r.parts.empty());
    } else {
      REQUIRE(r.parts.size() == 1);
      CHECK(r.parts[0] == q);
    }
  }
}

TEST_CASE("Lie algebra axioms on random elements") {
  std::mt19937_64 rng(17);
  for (GroupKind kind : {GroupKind::Integers, GroupKind::DyadicRationals, GroupKind::LexZ2}) {
    CAPTURE(to_string(kind));
    const LieElement c(BasisSymbol::central(kind));
    for (int n = 0; n < 300; ++n) {
      const LieElement a = random_element(rng, kind);
      const LieElement b = random_element(rng, kind);
      const LieElement d = random_element(rng, kind);
      CHECK((bracket(a, b) + bracket(b, a)).is_zero());
      CHECK((bracket(bracket(a, b), d) + bracket(bracket(b, d), a) + bracket(bracket(d, a), b)).is_zero());
      CHECK(bracket(c, a).is_zero());
    }
  }
}

TEST_CASE("brackets of basis elements are homogeneous") {
  std::mt19937_64 rng(19);
  for (GroupKind kind : {GroupKind::Integers, GroupKind::DyadicRationals, GroupKind::LexZ2}) {
    for (int n = 0; n < 500; ++n) {
      const BasisSymbol x = random_symbol(rng, kind);
      const BasisSymbol y = random_symbol(rng, kind);
      const LieElement r = bracket_basis(x, y);
      if (!r.is_zero()) CHECK(*weight_of(r) == x.weight() + y.weight());
    }
  }
}

TEST_CASE("realization bracket matches the basis bracket") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> alpha(-6, 6), deg(0, 5), num(-5, 5);
  for (int n = 0; n < 500; ++n) {
    auto random_poly = [&] {
      std::vector<Scalar> c;
      for (int k = deg(rng); k >= 0; --k) c.push_back(Scalar(num(rng)));
      return PolyForm{GroupElement::integer(alpha(rng)), Polynomial(c)};
    };
    const PolyForm p = random_poly();
    const PolyForm q = random_poly();
    CHECK(from_realization(poly_bracket(p, q)) == bracket(from_poly(p), from_poly(q)));
  }
}

TEST_CASE("lex weights map into the scalar field additively") {
  // phi(x, y) = x sqrt2 + y must be additive for the bracket to be a Lie bracket.
  const auto a = GroupElement::lex(1, -2);
  const auto b = GroupElement::lex(-3, 5);
  CHECK((a + b).scalar() == a.scalar() + b.scalar());
  const BasisSymbol x = BasisSymbol::generator(a, 0);
  const BasisSymbol y = BasisSymbol::generator(-a, 0);
  CHECK_FALSE(bracket_basis(x, y).is_zero());
}
