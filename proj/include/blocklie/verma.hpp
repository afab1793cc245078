#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocklie/charpoly.hpp"
#include "blocklie/group.hpp"
#include "blocklie/lie.hpp"

namespace blocklie {

/// Highest weight: the central charge Lambda(c) and labels Lambda_i = Lambda(t^i).
///
/// Labels are either an explicit finite list (zero beyond it) or generated by the
/// annihilation recurrence of a characteristic polynomial f = sum a_j t^j:
///   sum_j (j+m) a_j Lambda_{j+m-1} = [m == 0] a_0 c,   m >= 0.
/// Recurrent labels are memoized in a table shared by all copies; access is
/// mutex-guarded, so a weight may be shared between worker threads.
class HighestWeight {
 public:
  HighestWeight();  // the zero functional
  static HighestWeight explicit_labels(Rational central_charge, std::vector<Rational> labels);
  /// Requires exactly d-1 initial labels for d >= 1. For d = 0 the recurrence forces
  /// Lambda = 0 and c = 0; anything else throws std::invalid_argument.
  static HighestWeight recurrent(const CharPoly& f, Rational central_charge, std::vector<Rational> initial);

  const Rational& central_charge() const { return central_charge_; }
  /// Throws std::invalid_argument for i < 0.
  Rational label(long i) const;
  std::vector<Rational> labels(long count) const;

  bool is_recurrent() const { return recurrence_ != nullptr; }
  /// The generating polynomial of a recurrent weight.
  const CharPoly* generating_charpoly() const;
  /// The stored explicit labels, or the initial labels of a recurrent weight.
  const std::vector<Rational>& stored_labels() const { return stored_; }

 private:
  struct Recurrence;
  Rational central_charge_{0};
  std::vector<Rational> stored_;
  std::shared_ptr<Recurrence> recurrence_;
};

/// Lambda(L_{0,j}) = Lambda_{j+1} and Lambda(c) = central charge. Throws for
/// symbols of nonzero weight.
Scalar zero_mode_action(const HighestWeight& weight, const BasisSymbol& s);

/// One factor L_{-weight,index} of a PBW monomial; weight is positive.
struct Factor {
  GroupElement weight;
  int index = -1;
  friend bool operator==(const Factor&, const Factor&) = default;
  friend std::strong_ordering operator<=>(const Factor&, const Factor&) = default;
};

/// Normal-ordered L_{-a_1,i_1} ... L_{-a_k,i_k} v with 0 < a_1 <= ... <= a_k and
/// i_s <= i_{s+1} whenever a_s = a_{s+1}. The empty monomial is v itself.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument if the factors are not normal-ordered.
  explicit PBWMonomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Weight -(a_1 + ... + a_k); nullopt for the empty monomial (kind unknown).
  std::optional<GroupElement> weight() const;
  GroupElement weight(GroupKind kind) const;

  /// Drops the first factor.
  PBWMonomial tail() const;
  /// Prepends f; the caller guarantees f <= front.
  PBWMonomial prepend(const Factor& f) const;

  /// By length, then lexicographically on (a_s, i_s).
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class ModuleVector {
 public:
  using Terms = std::map<PBWMonomial, Scalar>;

  ModuleVector() = default;
  ModuleVector(const PBWMonomial& m, const Scalar& coeff = Scalar(1)) { add(m, coeff); }
  static ModuleVector highest() { return ModuleVector(PBWMonomial()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PBWMonomial& m) const;

  void add(const PBWMonomial& m, const Scalar& coeff);
  /// this += coeff * v
  void add_scaled(const ModuleVector& v, const Scalar& coeff);

  /// Weight shared by every term; nullopt for zero or inhomogeneous vectors.
  std::optional<GroupElement> weight(GroupKind kind) const;

  ModuleVector& operator+=(const ModuleVector& o) { add_scaled(o, Scalar(1)); return *this; }
  ModuleVector& operator-=(const ModuleVector& o) { add_scaled(o, Scalar(-1)); return *this; }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Scalar& s, const ModuleVector& v);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

class StepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normal-ordering engine for the Verma module M(Lambda).
///
/// Every case reduces to g F_1 rest = F_1 (g rest) + [g, F_1] rest, where F_1 is
/// the leftmost factor, with three base cases on v: positive weights kill it,
/// weight-zero symbols act by Lambda, and a negative generator that is already
/// <= F_1 is simply prepended. Recursion is on (length, inversions) and always
/// terminates; the step budget only guards against engine bugs.
///
/// Results are memoized per (symbol, monomial). A Straightener is not
/// thread-safe; use one per worker.
class Straightener {
 public:
  static constexpr std::size_t kDefaultStepBudget = 50'000'000;

  explicit Straightener(const HighestWeight& weight, std::size_t step_budget = kDefaultStepBudget);

  ModuleVector act(const BasisSymbol& g, const PBWMonomial& m);
  ModuleVector act(const BasisSymbol& g, const ModuleVector& v);
  ModuleVector act(const LieElement& e, const ModuleVector& v);

  /// Applies generators right to left: word = {g_1, ..., g_n} gives g_1 ... g_n v.
  ModuleVector apply_word(const std::vector<BasisSymbol>& word, const ModuleVector& v);

  std::size_t steps() const { return steps_; }
  const HighestWeight& highest_weight() const { return weight_; }

 private:
  ModuleVector act_uncached(const BasisSymbol& g, const PBWMonomial& m);

  HighestWeight weight_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::map<std::pair<BasisSymbol, PBWMonomial>, ModuleVector> memo_;
};

ModuleVector act(const BasisSymbol& g, const ModuleVector& v, const HighestWeight& weight);
ModuleVector act_element(const LieElement& e, const ModuleVector& v, const HighestWeight& weight);

/// Truncation of a weight space: t-indices in [-1, max_t_index] and, for groups
/// other than the integers, a finite catalogue of allowed positive parts.
struct WeightBasisBounds {
  int max_t_index = 0;
  std::vector<GroupElement> parts;
};

/// All normal-ordered monomials of weight mu within the bounds, in monomial order.
/// mu = 0 gives {v}; mu > 0 throws. On the integers an empty catalogue means 1..-mu.
std::vector<PBWMonomial> weight_basis(const GroupElement& mu, const WeightBasisBounds& bounds);

/// Incremental row-echelon span of module vectors.
class SpanBuilder {
 public:
  /// Returns the reduced remainder if v is independent of the span (and adds it), else nullopt.
  std::optional<ModuleVector> insert(const ModuleVector& v);
  bool contains(const ModuleVector& v) const;
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<ModuleVector>& basis() const { return basis_; }

 private:
  ModuleVector reduce(ModuleVector v) const;
  std::vector<std::pair<PBWMonomial, ModuleVector>> rows_;  // pivot, pivot-normalized row
  std::vector<ModuleVector> basis_;                          // original inserted vectors
};

/// Closure of the seeds under repeated action of the catalogue, up to `depth`
/// applications, as a basis of the spanned space per weight.
std::map<GroupElement, std::vector<ModuleVector>> submodule_generated(const std::vector<ModuleVector>& seeds,
                                                                      const std::vector<BasisSymbol>& catalog,
                                                                      int depth, const HighestWeight& weight,
                                                                      GroupKind kind);

}  // namespace blocklie
