#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "blocklie/scalar.hpp"

namespace blocklie {

/// The catalogued grading groups.
enum class GroupKind { Integers, DyadicRationals, LexZ2 };

/// "integers", "dyadic", "lex-z2".
std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view name);

/// Element of a catalogued grading group together with its total order.
///
/// Integers and DyadicRationals store an exact rational; LexZ2 stores an
/// integer pair ordered lexicographically with the first coordinate dominant.
/// Comparing elements of different groups throws std::invalid_argument.
class GroupElement {
 public:
  static GroupElement integer(std::int64_t n);
  /// Throws std::invalid_argument unless the reduced denominator is a power of two.
  static GroupElement dyadic(const Rational& q);
  static GroupElement lex(std::int64_t first, std::int64_t second);
  static GroupElement zero(GroupKind kind);

  GroupKind kind() const { return kind_; }
  /// Integers and DyadicRationals only.
  const Rational& value() const;
  /// LexZ2 only.
  std::int64_t first() const;
  std::int64_t second() const;

  /// Image in the scalar field; injective on every catalogued group.
  Scalar scalar() const;

  bool is_zero() const;
  int sign() const;
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }
  friend GroupElement operator*(std::int64_t n, const GroupElement& x);

  friend bool operator==(const GroupElement& a, const GroupElement& b);
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  GroupElement(GroupKind kind, Rational value, std::int64_t first, std::int64_t second)
      : kind_(kind), value_(std::move(value)), first_(first), second_(second) {}

  GroupKind kind_ = GroupKind::Integers;
  Rational value_{0};
  std::int64_t first_ = 0;
  std::int64_t second_ = 0;
};

/// Three-way comparison under the instance order; mixed instances throw.
std::strong_ordering compare(const GroupElement& x, const GroupElement& y);

/// Decimal, "p/q" / "p/2^k", or "(a,b)" depending on the instance.
std::string to_string(const GroupElement& x);
GroupElement parse_group_element(GroupKind kind, std::string_view text);

struct OrderClassification {
  enum class Verdict { Dense, Discrete };
  Verdict verdict = Verdict::Dense;
  /// Least positive element, set iff verdict is Discrete.
  std::optional<GroupElement> least_positive;
  /// Number of sampled witnesses checked by the sanity pass.
  std::size_t samples_checked = 0;
  bool sanity_passed = true;
};

/// Returns the known classification for the instance and runs a sampling
/// sanity check on it: for Dense, alpha/2 must lie strictly between 0 and alpha
/// for sampled alpha > 0; for Discrete(a), no sampled element lies strictly
/// between 0 and a.
OrderClassification classify_order(GroupKind kind, std::uint64_t seed = 0, std::size_t samples = 256);

enum class Region { InAZ, HPlus, HMinus };
std::string_view to_string(Region region);

/// Splits a discretely ordered group into aZ, H+ = {x > na for all n} and H- = -H+.
/// Throws std::invalid_argument for dense instances or when a is not the least positive element.
Region decompose_discrete(GroupKind kind, const GroupElement& a, const GroupElement& x);

/// Uniform-ish random element with every coordinate bounded by `bound`
/// (dyadic denominators up to 2^4).
GroupElement sample_element(GroupKind kind, std::mt19937_64& rng, std::int64_t bound);

}  // namespace blocklie
