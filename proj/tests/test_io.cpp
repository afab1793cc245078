#include "printing.hpp"

#include <random>

#include "blocklie/io.hpp"

using namespace blocklie;

namespace {

BasisSymbol L(long a, int i) { return BasisSymbol::generator(GroupElement::integer(a), i); }

LieElement random_element(std::mt19937_64& rng, GroupKind kind) {
  std::uniform_int_distribution<int> terms(0, 5), pick(0, 7), index(-1, 6), num(-20, 20), den(1, 12), surd(0, 3);
  LieElement e;
  for (int n = terms(rng); n > 0; --n) {
    const BasisSymbol s = pick(rng) == 0 ? BasisSymbol::central(kind)
                                         : BasisSymbol::generator(sample_element(kind, rng, 9), index(rng));
    Scalar c(Rational(num(rng), den(rng)));
    if (kind == GroupKind::LexZ2 && surd(rng) == 0) c = Scalar(Rational(num(rng), den(rng)), Rational(num(rng), 3));
    e.add(s, c);
  }
  return e;
}

}  // namespace

TEST_CASE("parse_element examples") {
  CHECK(parse_element("L(1,0) + 2*c") ==
        LieElement(L(1, 0)) + LieElement(BasisSymbol::central(GroupKind::Integers), Scalar(2)));
  CHECK(parse_element("x^2*(t^3-1)") == LieElement(L(2, 2)) - LieElement(L(2, -1)));
  CHECK(parse_element("x") == LieElement(L(1, -1)));
  CHECK(parse_element("x^-1*t^2") == LieElement(L(-1, 1)));
  CHECK(parse_element(" - 1/2 * L( -3 , 4 ) ") == LieElement(L(-3, 4), Scalar(Rational(-1, 2))));
  CHECK(parse_element("L(1/2,0)", GroupKind::DyadicRationals) ==
        LieElement(BasisSymbol::generator(GroupElement::dyadic(Rational(1, 2)), 0)));
  CHECK(parse_element("L(-(1,-5),0)", GroupKind::LexZ2) ==
        LieElement(BasisSymbol::generator(GroupElement::lex(-1, 5), 0)));
  CHECK(parse_element("(1+2*sqrt2)*c", GroupKind::LexZ2) ==
        LieElement(BasisSymbol::central(GroupKind::LexZ2), Scalar(1, 2)));
  CHECK(parse_element("L(1,0) - L(1,0)").is_zero());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_element("L(1,-2)"), doctest::Contains("index must be >= -1"), ParseError);
  try {
    parse_element("L(1,0) + L(2,");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
  CHECK_THROWS_AS(parse_element(""), ParseError);
  CHECK_THROWS_AS(parse_element("3"), ParseError);
  CHECK_THROWS_AS(parse_element("L(1,0) L(2,0)"), ParseError);
  CHECK_THROWS_AS(parse_element("L(1/2,0)"), ParseError);
  CHECK_THROWS_AS(parse_element("x^2*(t^3-1)", GroupKind::DyadicRationals), ParseError);
  CHECK_THROWS_AS(parse_element("x*(t^-1)"), ParseError);
  CHECK_THROWS_AS(parse_vector("L(-1,0)*L(-1,-1)*v"), ParseError);  // not normal-ordered
  CHECK_THROWS_AS(parse_vector("L(1,0)*v"), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(parse_element("2*c + L(1,0) - L(-1,3)")) == "-L(-1,3)+L(1,0)+2*c");
  CHECK(to_string(LieElement()) == "0");
  CHECK(to_string(parse_vector("L(-1,-1)*L(-1,0)*v - L(-2,-1)*v")) == "-L(-2,-1)*v+L(-1,-1)*L(-1,0)*v");
  CHECK(to_string(parse_vector("3/4*v")) == "3/4*v");
  CHECK(to_string(PolyForm{GroupElement::integer(2), parse_polynomial("t^3-1")}) == "x^2*(t^3-1)");
  CHECK(parse_polynomial("1/2 - t + 3*t^2") ==
        Polynomial({Scalar(Rational(1, 2)), Scalar(-1), Scalar(3)}));
}

TEST_CASE("print and parse round-trip") {
  std::mt19937_64 rng(79);
  for (GroupKind kind : {GroupKind::Integers, GroupKind::DyadicRationals, GroupKind::LexZ2}) {
    CAPTURE(to_string(kind));
    for (int n = 0; n < 1000; ++n) {
      const LieElement e = random_element(rng, kind);
      CAPTURE(to_string(e));
      CHECK(parse_element(to_string(e), kind) == e);
      CHECK(lie_element_from_json(Json::parse(to_json(e).dump()), kind) == e);
    }
  }
}

TEST_CASE("module vectors round-trip through text and JSON") {
  const ModuleVector v = parse_vector("2*L(-1,-1)*L(-1,0)*v - 1/3*L(-2,-1)*v");
  CHECK(parse_vector(to_string(v)) == v);
  const Json j = to_json(v, GroupKind::Integers);
  CHECK(j["weight"] == "-2");
  CHECK(j["terms"].size() == 2);
  CHECK(module_vector_from_json(j, GroupKind::Integers) == v);

  Json bad = j;
  bad["weight"] = "-3";
  CHECK_THROWS_AS(module_vector_from_json(bad, GroupKind::Integers), std::invalid_argument);

  const ModuleVector lex = parse_vector("L(-(0,1),2)*L(-(1,-4),0)*v", GroupKind::LexZ2);
  CHECK(module_vector_from_json(to_json(lex, GroupKind::LexZ2), GroupKind::LexZ2) == lex);
}

TEST_CASE("highest weight JSON forms") {
  const HighestWeight a = highest_weight_from_json(Json::parse(R"({"charpoly":[1,1],"central_charge":1})"));
  CHECK(a.is_recurrent());
  CHECK(a.label(1) == Rational(-1, 2));

  const HighestWeight b =
      highest_weight_from_json(Json::parse(R"({"central_charge":"3/2","labels":{"explicit":[1,"1/7",3]}})"));
  CHECK(b.central_charge() == Rational(3, 2));
  CHECK(b.label(1) == Rational(1, 7));
  CHECK(b.label(5) == 0);

  const HighestWeight c = highest_weight_from_json(
      Json::parse(R"({"central_charge":2,"labels":{"charpoly":[1,0,1],"initial":["1/2"]}})"));
  CHECK(c.generating_charpoly()->to_string() == "t^2+1");

  const HighestWeight d = highest_weight_from_json(Json::parse(R"({"labels":[4,5]})"));
  CHECK(d.label(0) == 4);

  const HighestWeight round = highest_weight_from_json(to_json(c));
  CHECK(round.labels(10) == c.labels(10));
  CHECK(round.central_charge() == c.central_charge());

  CHECK_THROWS(highest_weight_from_json(Json::parse(R"({"charpoly":[1,2]})")));  // not monic
  CHECK_THROWS(highest_weight_from_json(Json::parse(R"({"charpoly":[1,0,1]})")));  // missing initial label
  CHECK_THROWS(highest_weight_from_json(Json::parse(R"([1,2])")));
}
