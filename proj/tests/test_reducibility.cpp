#include "printing.hpp"

#include <random>

#include "blocklie/io.hpp"
#include "blocklie/reducibility.hpp"

using namespace blocklie;

namespace {

CharPoly poly(std::vector<Rational> lower) { return CharPoly::from_lower(std::move(lower)); }

Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rational q;
  do {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  } while (nonzero && sgn(q) == 0);
  return q;
}

HighestWeight generic_weight(std::mt19937_64& rng) {
  std::vector<Rational> labels;
  for (int i = 0; i < 40; ++i) labels.push_back(random_rational(rng));
  return HighestWeight::explicit_labels(random_rational(rng, true), labels);
}

// Lambda applied to a polynomial in t: t^k -> Lambda_k.
Scalar apply_functional(const HighestWeight& w, const Polynomial& p) {
  Scalar out;
  for (int k = 0; k <= p.degree(); ++k) out += p.coefficient(k) * Scalar(w.label(k));
  return out;
}

// Lambda(f' g + f g') - f(0) g(0) c with g = t^m, expanded as polynomials.
Scalar symbolic_condition(const HighestWeight& w, const CharPoly& f, int m) {
  const Polynomial fp = f.to_polynomial();
  const Polynomial g = Polynomial::monomial(Scalar(1), m);
  const Scalar value = apply_functional(w, fp.derivative() * g + fp * g.derivative());
  return value - fp.evaluate(Scalar(0)) * g.evaluate(Scalar(0)) * Scalar(w.central_charge());
}

}  // namespace

TEST_CASE("label recurrence agrees with the expanded annihilation condition") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 60; ++n) {
    std::uniform_int_distribution<int> deg(1, 5);
    const int d = deg(rng);
    std::vector<Rational> lower;
    for (int j = 0; j < d; ++j) lower.push_back(random_rational(rng));
    const CharPoly f = poly(lower);
    std::vector<Rational> initial;
    for (int i = 0; i + 1 < d; ++i) initial.push_back(random_rational(rng));
    const HighestWeight w = labels_from_charpoly(f, random_rational(rng), initial);
    for (int m = 0; m <= 10; ++m) {
      CAPTURE(m);
      CHECK(symbolic_condition(w, f, m).is_zero());
      CHECK(sgn(annihilation_residual(w, f.coefficients(), m)) == 0);
    }
    // The coefficient form equals the expansion for arbitrary labels as well.
    const HighestWeight g = generic_weight(rng);
    for (int m = 0; m <= 10; ++m)
      CHECK(symbolic_condition(g, f, m) == Scalar(annihilation_residual(g, f.coefficients(), m)));
  }
}

TEST_CASE("labels_from_charpoly examples") {
  const HighestWeight t = labels_from_charpoly(poly({0}), 7, {});
  for (long i = 0; i < 12; ++i) CHECK(t.label(i) == 0);
  const HighestWeight t1 = labels_from_charpoly(poly({1}), 1, {});
  CHECK(t1.labels(4) == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)});
  const HighestWeight t0 = labels_from_charpoly(poly({0}), 0, {});
  CHECK(t0.central_charge() == 0);
  CHECK(t0.label(3) == 0);
}

TEST_CASE("charpoly_from_labels examples") {
  CHECK(*charpoly_from_labels(labels_from_charpoly(poly({1}), 1, {}), 4, 10) == poly({1}));
  const auto one = charpoly_from_labels(HighestWeight(), 4, 10);
  REQUIRE(one.has_value());
  CHECK(one->degree() == 0);
  const HighestWeight random =
      HighestWeight::explicit_labels(1, {1, Rational(1, 7), 3, -2, 5, Rational(2, 3), -1, 4, Rational(-5, 2), 8, 1, 6,
                                         -3, Rational(7, 9), 2, 5});
  CHECK_FALSE(charpoly_from_labels(random, 4, 12).has_value());
  CHECK_THROWS_AS(charpoly_from_labels(random, 4, 9), std::invalid_argument);
}

TEST_CASE("charpoly and recurrence duality") {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 50; ++n) {
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Rational> lower{random_rational(rng, true)};
    for (int j = 1; j < d; ++j) lower.push_back(random_rational(rng));
    const CharPoly f = poly(lower);
    std::vector<Rational> initial;
    for (int i = 0; i + 1 < d; ++i) initial.push_back(random_rational(rng));
    const HighestWeight w = labels_from_charpoly(f, random_rational(rng, true), initial);
    CAPTURE(f.to_string());
    CHECK(*charpoly_from_labels(w, 5, 14) == f);
    const QuasiVerdict q = is_quasipolynomial(w, 5, 14);
    REQUIRE(q.found);
    CHECK(*q.recurrence == f);
    // m = 0: sum_j j a_j Lambda_{j-1} = a_0 c
    Rational lhs = 0;
    for (int j = 1; j <= d; ++j) lhs += j * f[j] * w.label(j - 1);
    CHECK(lhs == f[0] * w.central_charge());
  }
}

TEST_CASE("zero constant term: recurrence is t^-1 f") {
  // f = t(t+1): the m >= 1 rows see s_n only through t+1.
  const HighestWeight w = labels_from_charpoly(poly({0, 1}), 2, {Rational(1, 3)});
  const auto f = charpoly_from_labels(w, 4, 12);
  const auto q = is_quasipolynomial(w, 4, 12);
  REQUIRE(f.has_value());
  REQUIRE(q.found);
  CHECK(*f == poly({0, 1}));
  CHECK(*q.recurrence == poly({1}));
}

TEST_CASE("delta series") {
  const auto d = delta_series(labels_from_charpoly(poly({1}), 1, {}), 5);
  CHECK(d == std::vector<Rational>{1, 1, Rational(-1, 2), Rational(1, 6), Rational(-1, 24), Rational(1, 120)});
  for (const auto& q : delta_series(HighestWeight(), 8)) CHECK(q == 0);
  const auto constant = delta_series(labels_from_charpoly(poly({0}), 5, {}), 6);
  CHECK(constant == std::vector<Rational>{5, 0, 0, 0, 0, 0, 0});
  CHECK(delta_series(HighestWeight(), 0).size() == 1);
}

TEST_CASE("is_quasipolynomial examples") {
  const QuasiVerdict a = is_quasipolynomial(labels_from_charpoly(poly({1}), 1, {}), 4, 12);
  CHECK(a.found);
  CHECK(a.order() == 1);
  CHECK(a.recurrence->to_string() == "t+1");
  const QuasiVerdict z = is_quasipolynomial(HighestWeight(), 4, 12);
  CHECK(z.found);
  CHECK(z.order() == 0);
  std::mt19937_64 rng(47);
  const QuasiVerdict r = is_quasipolynomial(generic_weight(rng), 4, 12);
  CHECK_FALSE(r.found);
  CHECK(r.order() == -1);
}

TEST_CASE("singular_candidates examples") {
  const SingularHorizon h{2, 10, 3};
  const auto minus_one = GroupElement::integer(-1);

  const SingularReport t = singular_candidates(labels_from_charpoly(poly({0}), 3, {}), minus_one, h);
  SpanBuilder span_t;
  for (const auto& v : t.candidates) span_t.insert(v);
  CHECK(span_t.contains(parse_vector("L(-1,0)*v")));
  CHECK(t.residuals_vanish());

  const SingularReport t1 = singular_candidates(labels_from_charpoly(poly({1}), 1, {}), minus_one, {1, 10, 3});
  SpanBuilder span_t1;
  for (const auto& v : t1.candidates) span_t1.insert(v);
  CHECK(span_t1.contains(parse_vector("L(-1,-1)*v+L(-1,0)*v")));
  CHECK_FALSE(span_t1.contains(parse_vector("L(-1,-1)*v")));

  std::mt19937_64 rng(53);
  CHECK(singular_candidates(generic_weight(rng), minus_one, h).candidates.empty());
  CHECK_THROWS_AS(singular_candidates(HighestWeight(), GroupElement::integer(0), h), std::invalid_argument);
}

TEST_CASE("singular candidates on dense orders use the catalogue") {
  // Lambda = 0: every L_{-1/2,i} v is killed by L_{b/2,k}.
  const auto half = GroupElement::dyadic(Rational(1, 2));
  const SingularReport r =
      singular_candidates(HighestWeight(), GroupElement::dyadic(Rational(-1, 2)), {1, 4, 2}, {half});
  CHECK(r.candidates.size() == 3);
  CHECK(r.residuals_vanish());
  CHECK_THROWS_AS(singular_candidates(HighestWeight(), -half, {1, 4, 2}), std::invalid_argument);
}

TEST_CASE("verify_singular") {
  const HighestWeight t1 = labels_from_charpoly(poly({1}), 1, {});
  const auto pass = verify_singular(t1, parse_vector("L(-1,-1)*v+L(-1,0)*v"), poly({1}));
  CHECK(pass.passed);
  CHECK(pass.certified);
  CHECK(pass.higher_weights_vanish);
  for (const auto& r : pass.residuals) CHECK(r.is_zero());
  CHECK(pass.realized == poly({1}).to_polynomial());

  const auto t = verify_singular(labels_from_charpoly(poly({0}), 3, {}), parse_vector("L(-1,0)*v"), poly({0}));
  CHECK(t.passed);

  const auto broken = verify_singular(t1, parse_vector("L(-1,-1)*v+L(-1,0)*v+L(-1,1)*v"), poly({1}));
  CHECK_FALSE(broken.passed);
  REQUIRE(broken.first_failure.has_value());
  CHECK_FALSE(broken.residuals[*broken.first_failure].is_zero());

  CHECK_THROWS_AS(verify_singular(t1, parse_vector("L(-2,0)*v"), poly({1})), std::invalid_argument);
}

TEST_CASE("chain determinants") {
  const auto one = GroupElement::dyadic(1);
  const auto half = GroupElement::dyadic(Rational(1, 2));
  CHECK(descent_coefficient(Scalar(Rational(1, 2)), 0, {ChainPart{one, 2}}) == Scalar(Rational(-5, 2)));
  CHECK(descent_coefficient(Scalar(Rational(1, 2)), 0, {ChainPart{one, -1}}) == Scalar(-1));

  // x = 0 and all k = -1: prod (j + 1 - (number of earlier parts)) (-eps)
  const std::vector<ChainPart> parts = {{GroupElement::dyadic(3), -1}, {GroupElement::dyadic(2), -1}, {half, -1}};
  CHECK(descent_coefficient(Scalar(0), 4, parts) == Scalar(5) * Scalar(Rational(-1, 2)) * Scalar(4) * Scalar(-2) *
                                                        Scalar(3) * Scalar(-3));

  const auto d = descent_check(HighestWeight(), 0, {ChainPart{one, 2}}, half);
  CHECK(d.passed);
  CHECK(d.predicted == Scalar(Rational(-5, 2)));
  CHECK(to_string(d.target) == "L(-1/2,2)*v");

  CHECK_THROWS_AS(descent_check(HighestWeight(), 0, {ChainPart{one, 0}, ChainPart{one, 0}}, half),
                  std::invalid_argument);
  CHECK_THROWS_AS(descent_check(HighestWeight(), 0, {ChainPart{one, 0}}, one), std::invalid_argument);
  CHECK_THROWS_AS(descent_check(HighestWeight(), 0, {ChainPart{GroupElement::integer(1), 0}},
                                GroupElement::integer(1)),
                  std::invalid_argument);
}

TEST_CASE("determinant degree exceeds every shorter chain") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> k(-1, 4), j(-1, 4), num(1, 32);
  for (int n = 0; n < 100; ++n) {
    const int r = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<ChainPart> parts;
    for (int m = 0; m < r; ++m) parts.push_back(ChainPart{GroupElement::dyadic(Rational(num(rng), 8)), k(rng)});
    const int jj = j(rng);
    const Polynomial full = chain_determinant_polynomial(jj, parts);
    // degree r unless the chain hits a vanishing factor
    CHECK(full.degree() <= r);
    bool nonvanishing = true;
    for (const auto& p : parts) nonvanishing = nonvanishing && p.index != -1;
    if (nonvanishing) CHECK(full.degree() == r);
    for (int l = 0; l < r; ++l) {
      std::vector<ChainPart> shorter(parts.begin(), parts.begin() + l);
      CHECK(chain_determinant_polynomial(jj, shorter).degree() < r);
    }
    const Scalar x(Rational(num(rng), 4));
    CHECK(full.evaluate(x) == chain_determinant(x, jj, parts));
  }
}

TEST_CASE("descent identity on random dense instances") {
  std::mt19937_64 rng(61);
  for (int n = 0; n < 60; ++n) {
    std::vector<Rational> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(random_rational(rng));
    const HighestWeight w = HighestWeight::explicit_labels(random_rational(rng), labels);
    const int r = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<ChainPart> parts;
    for (int m = 0; m < r; ++m)
      parts.push_back(ChainPart{GroupElement::dyadic(Rational(4 * (r - m) + 1, 4)),
                                std::uniform_int_distribution<int>(-1, 4)(rng)});
    const auto c = descent_check(w, std::uniform_int_distribution<int>(-1, 3)(rng), parts,
                                 GroupElement::dyadic(Rational(1, 8)));
    CHECK(c.passed);
  }
}

TEST_CASE("reducibility report") {
  const ReducibilityReport t1 = reducibility_report(labels_from_charpoly(poly({1}), 1, {}), {});
  CHECK(t1.reducible);
  CHECK(t1.consistent);
  CHECK(t1.verdict.find("certified") != std::string::npos);

  const ReducibilityReport zero = reducibility_report(HighestWeight(), {});
  CHECK(zero.reducible);
  CHECK(zero.consistent);
  CHECK(zero.charpoly->degree() == 0);
  for (int i = -1; i <= 2; ++i) {
    SpanBuilder span;
    for (const auto& v : zero.singular.candidates) span.insert(v);
    CHECK(span.contains(ModuleVector(PBWMonomial({Factor{GroupElement::integer(1), i}}))));
  }

  std::mt19937_64 rng(67);
  const ReducibilityReport generic = reducibility_report(generic_weight(rng), {});
  CHECK_FALSE(generic.reducible);
  CHECK(generic.consistent);
  CHECK_FALSE(generic.charpoly.has_value());
  CHECK_FALSE(generic.quasi.found);
  CHECK(generic.singular.candidates.empty());
  CHECK(generic.verdict.find("horizon-limited") != std::string::npos);
}

TEST_CASE("reducibility detectors stay consistent on recurrent weights") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 20; ++n) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Rational> lower;
    for (int j = 0; j < d; ++j) lower.push_back(random_rational(rng));
    std::vector<Rational> initial;
    for (int i = 0; i + 1 < d; ++i) initial.push_back(random_rational(rng));
    const HighestWeight w = labels_from_charpoly(poly(lower), random_rational(rng), initial);
    const ReducibilityReport r = reducibility_report(w, {});
    CAPTURE(poly(lower).to_string());
    CHECK(r.consistent);
    CHECK(r.reducible);
  }
}
