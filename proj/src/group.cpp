#include "blocklie/group.hpp"

#include <stdexcept>

namespace blocklie {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Integers: return "integers";
    case GroupKind::DyadicRationals: return "dyadic";
    case GroupKind::LexZ2: return "lex-z2";
  }
  return "?";
}

GroupKind parse_group_kind(std::string_view name) {
  if (name == "integers") return GroupKind::Integers;
  if (name == "dyadic") return GroupKind::DyadicRationals;
  if (name == "lex-z2") return GroupKind::LexZ2;
  throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected integers, dyadic or lex-z2)");
}

GroupElement GroupElement::integer(std::int64_t n) {
  return GroupElement(GroupKind::Integers, Rational(static_cast<long>(n)), 0, 0);
}

GroupElement GroupElement::dyadic(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (mpz_popcount(q.get_den().get_mpz_t()) != 1)
    throw std::invalid_argument("'" + to_string(q) + "' is not a dyadic rational");
  return GroupElement(GroupKind::DyadicRationals, q, 0, 0);
}

GroupElement GroupElement::lex(std::int64_t first, std::int64_t second) {
  return GroupElement(GroupKind::LexZ2, Rational(0), first, second);
}

GroupElement GroupElement::zero(GroupKind kind) { return GroupElement(kind, Rational(0), 0, 0); }

const Rational& GroupElement::value() const {
  if (kind_ == GroupKind::LexZ2) throw std::logic_error("LexZ2 elements have no rational value");
  return value_;
}

std::int64_t GroupElement::first() const {
  if (kind_ != GroupKind::LexZ2) throw std::logic_error("first() is defined for LexZ2 only");
  return first_;
}

std::int64_t GroupElement::second() const {
  if (kind_ != GroupKind::LexZ2) throw std::logic_error("second() is defined for LexZ2 only");
  return second_;
}

Scalar GroupElement::scalar() const {
  if (kind_ == GroupKind::LexZ2)
    return Scalar(Rational(static_cast<long>(second_)), Rational(static_cast<long>(first_)));
  return Scalar(value_);
}

bool GroupElement::is_zero() const {
  return kind_ == GroupKind::LexZ2 ? (first_ == 0 && second_ == 0) : sgn(value_) == 0;
}

int GroupElement::sign() const {
  if (kind_ == GroupKind::LexZ2) {
    if (first_ != 0) return first_ > 0 ? 1 : -1;
    if (second_ != 0) return second_ > 0 ? 1 : -1;
    return 0;
  }
  return sgn(value_);
}

GroupElement GroupElement::operator-() const {
  return GroupElement(kind_, Rational(-value_), -first_, -second_);
}

namespace {

void require_same(const GroupElement& a, const GroupElement& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("mixed group instances: " + std::string(to_string(a.kind())) + " vs " +
                                std::string(to_string(b.kind())));
}

}  // namespace

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same(a, b);
  return GroupElement(a.kind_, Rational(a.value_ + b.value_), a.first_ + b.first_, a.second_ + b.second_);
}

GroupElement operator*(std::int64_t n, const GroupElement& x) {
  return GroupElement(x.kind_, Rational(x.value_ * static_cast<long>(n)), n * x.first_, n * x.second_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.first_ == b.first_ && a.second_ == b.second_;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  require_same(a, b);
  if (a.kind_ == GroupKind::LexZ2) {
    if (auto c = a.first_ <=> b.first_; c != 0) return c;
    return a.second_ <=> b.second_;
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const GroupElement& x, const GroupElement& y) { return x <=> y; }

std::string to_string(const GroupElement& x) {
  if (x.kind() == GroupKind::LexZ2) return "(" + std::to_string(x.first()) + "," + std::to_string(x.second()) + ")";
  return to_string(x.value());
}

GroupElement parse_group_element(GroupKind kind, std::string_view text) {
  switch (kind) {
    case GroupKind::Integers: {
      Rational q = parse_rational(text);
      if (q.get_den() != 1) throw std::invalid_argument("'" + std::string(text) + "' is not an integer");
      if (!q.get_num().fits_slong_p()) throw std::invalid_argument("integer out of range");
      return GroupElement::integer(q.get_num().get_si());
    }
    case GroupKind::DyadicRationals:
      return GroupElement::dyadic(parse_rational(text));
    case GroupKind::LexZ2: {
      std::string s;
      for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
      const auto comma = s.find(',');
      if (s.size() < 5 || s.front() != '(' || s.back() != ')' || comma == std::string::npos)
        throw std::invalid_argument("expected a pair '(a,b)', got '" + std::string(text) + "'");
      Rational a = parse_rational(std::string_view(s).substr(1, comma - 1));
      Rational b = parse_rational(std::string_view(s).substr(comma + 1, s.size() - comma - 2));
      if (a.get_den() != 1 || b.get_den() != 1 || !a.get_num().fits_slong_p() || !b.get_num().fits_slong_p())
        throw std::invalid_argument("pair coordinates must be integers: '" + std::string(text) + "'");
      return GroupElement::lex(a.get_num().get_si(), b.get_num().get_si());
    }
  }
  throw std::logic_error("unreachable");
}

GroupElement sample_element(GroupKind kind, std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  switch (kind) {
    case GroupKind::Integers:
      return GroupElement::integer(coord(rng));
    case GroupKind::DyadicRationals: {
      std::uniform_int_distribution<int> exp(0, 4);
      const int k = exp(rng);
      std::uniform_int_distribution<std::int64_t> num(-(bound << k), bound << k);
      Rational q(static_cast<long>(num(rng)), 1L << k);
      q.canonicalize();
      return GroupElement::dyadic(q);
    }
    case GroupKind::LexZ2:
      return GroupElement::lex(coord(rng), coord(rng));
  }
  throw std::logic_error("unreachable");
}

OrderClassification classify_order(GroupKind kind, std::uint64_t seed, std::size_t samples) {
  OrderClassification out;
  std::mt19937_64 rng(seed);
  const GroupElement zero = GroupElement::zero(kind);
  switch (kind) {
    case GroupKind::Integers:
      out.verdict = OrderClassification::Verdict::Discrete;
      out.least_positive = GroupElement::integer(1);
      break;
    case GroupKind::LexZ2:
      out.verdict = OrderClassification::Verdict::Discrete;
      out.least_positive = GroupElement::lex(0, 1);
      break;
    case GroupKind::DyadicRationals:
      out.verdict = OrderClassification::Verdict::Dense;
      break;
  }

  for (std::size_t n = 0; n < samples; ++n) {
    GroupElement x = sample_element(kind, rng, 64);
    if (out.verdict == OrderClassification::Verdict::Dense) {
      if (!x.is_positive()) continue;
      GroupElement half = GroupElement::dyadic(Rational(x.value() / 2));
      if (!(zero < half && half < x)) out.sanity_passed = false;
    } else {
      const GroupElement& a = *out.least_positive;
      if (zero < x && x < a) out.sanity_passed = false;
    }
    ++out.samples_checked;
  }
  return out;
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::InAZ: return "aZ";
    case Region::HPlus: return "H+";
    case Region::HMinus: return "H-";
  }
  return "?";
}

Region decompose_discrete(GroupKind kind, const GroupElement& a, const GroupElement& x) {
  const OrderClassification cls = classify_order(kind, 0, 0);
  if (cls.verdict == OrderClassification::Verdict::Dense)
    throw std::invalid_argument("decompose_discrete needs a discrete order; " + std::string(to_string(kind)) +
                                " is dense");
  if (a != *cls.least_positive)
    throw std::invalid_argument(to_string(a) + " is not the least positive element of " +
                                std::string(to_string(kind)));
  if (x.kind() != kind) throw std::invalid_argument("element belongs to a different group instance");
  if (kind == GroupKind::Integers) return Region::InAZ;
  // LexZ2 with a = (0,1): multiples of a are exactly the pairs (0, n).
  if (x.first() == 0) return Region::InAZ;
  return x.first() > 0 ? Region::HPlus : Region::HMinus;
}

}  // namespace blocklie
