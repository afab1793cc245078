#include "blocklie/verma.hpp"

#include <algorithm>
#include <mutex>

namespace blocklie {

CharPoly::CharPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.back() != 1)
    throw std::invalid_argument("characteristic polynomial must be monic");
}

CharPoly CharPoly::from_lower(std::vector<Rational> lower) {
  lower.emplace_back(1);
  return CharPoly(std::move(lower));
}

Polynomial CharPoly::to_polynomial() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.emplace_back(q);
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------------------

struct HighestWeight::Recurrence {
  Recurrence(CharPoly f, Rational c, std::vector<Rational> initial)
      : f(std::move(f)), c(std::move(c)), values(std::move(initial)) {}

  // Solves the annihilation condition with g = t^m for Lambda_{d+m-1}.
  void extend_to(long n) {
    const int d = f.degree();
    while (static_cast<long>(values.size()) <= n) {
      const long target = static_cast<long>(values.size());
      const long m = target - d + 1;
      Rational rhs = (m == 0) ? Rational(f[0] * c) : Rational(0);
      for (int j = 0; j < d; ++j) {
        const long idx = j + m - 1;
        if (idx < 0) continue;  // (j+m) vanishes there
        rhs -= Rational((j + m) * f[j]) * values[static_cast<std::size_t>(idx)];
      }
      values.push_back(rhs / (d + m));
    }
  }

  CharPoly f;
  Rational c;
  std::mutex mu;
  std::vector<Rational> values;
};

HighestWeight::HighestWeight() = default;

HighestWeight HighestWeight::explicit_labels(Rational central_charge, std::vector<Rational> labels) {
  HighestWeight w;
  w.central_charge_ = std::move(central_charge);
  w.stored_ = std::move(labels);
  return w;
}

HighestWeight HighestWeight::recurrent(const CharPoly& f, Rational central_charge, std::vector<Rational> initial) {
  const int d = f.degree();
  if (d == 0) {
    const bool all_zero = std::all_of(initial.begin(), initial.end(), [](const Rational& q) { return sgn(q) == 0; });
    if (sgn(central_charge) != 0 || !all_zero)
      throw std::invalid_argument("f = 1 forces the zero weight (all labels and c vanish)");
    HighestWeight w;
    w.recurrence_ = std::make_shared<Recurrence>(f, Rational(0), std::vector<Rational>{});
    return w;
  }
  if (static_cast<int>(initial.size()) != d - 1)
    throw std::invalid_argument("a degree-" + std::to_string(d) + " characteristic polynomial needs exactly " +
                                std::to_string(d - 1) + " initial labels, got " + std::to_string(initial.size()));
  HighestWeight w;
  w.central_charge_ = central_charge;
  w.stored_ = initial;
  w.recurrence_ = std::make_shared<Recurrence>(f, std::move(central_charge), std::move(initial));
  return w;
}

Rational HighestWeight::label(long i) const {
  if (i < 0) throw std::invalid_argument("label index must be >= 0, got " + std::to_string(i));
  if (!recurrence_) return i < static_cast<long>(stored_.size()) ? stored_[static_cast<std::size_t>(i)] : Rational(0);
  std::lock_guard lock(recurrence_->mu);
  if (recurrence_->f.degree() == 0) return Rational(0);
  recurrence_->extend_to(i);
  return recurrence_->values[static_cast<std::size_t>(i)];
}

std::vector<Rational> HighestWeight::labels(long count) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long i = 0; i < count; ++i) out.push_back(label(i));
  return out;
}

const CharPoly* HighestWeight::generating_charpoly() const { return recurrence_ ? &recurrence_->f : nullptr; }

Scalar zero_mode_action(const HighestWeight& weight, const BasisSymbol& s) {
  if (s.is_central()) return Scalar(weight.central_charge());
  if (!s.weight().is_zero()) throw std::invalid_argument("zero_mode_action needs a weight-zero symbol");
  return Scalar(weight.label(s.index() + 1));
}

// ---------------------------------------------------------------------------

PBWMonomial::PBWMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t s = 0; s < factors_.size(); ++s) {
    if (!factors_[s].weight.is_positive())
      throw std::invalid_argument("PBW factor weights must be positive, got " + to_string(factors_[s].weight));
    if (factors_[s].index < -1) throw std::invalid_argument("index must be >= -1");
    if (s > 0 && factors_[s] < factors_[s - 1]) throw std::invalid_argument("PBW factors are not normal-ordered");
  }
}

std::optional<GroupElement> PBWMonomial::weight() const {
  if (factors_.empty()) return std::nullopt;
  return weight(factors_.front().weight.kind());
}

GroupElement PBWMonomial::weight(GroupKind kind) const {
  GroupElement w = GroupElement::zero(kind);
  for (const auto& f : factors_) w = w - f.weight;
  return w;
}

PBWMonomial PBWMonomial::tail() const {
  PBWMonomial out;
  out.factors_.assign(factors_.begin() + 1, factors_.end());
  return out;
}

PBWMonomial PBWMonomial::prepend(const Factor& f) const {
  PBWMonomial out;
  out.factors_.reserve(factors_.size() + 1);
  out.factors_.push_back(f);
  out.factors_.insert(out.factors_.end(), factors_.begin(), factors_.end());
  return out;
}

std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                b.factors_.end());
}

// ---------------------------------------------------------------------------

Scalar ModuleVector::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void ModuleVector::add(const PBWMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void ModuleVector::add_scaled(const ModuleVector& v, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  for (const auto& [m, c] : v.terms_) add(m, coeff * c);
}

std::optional<GroupElement> ModuleVector::weight(GroupKind kind) const {
  std::optional<GroupElement> w;
  for (const auto& [m, c] : terms_) {
    GroupElement mw = m.weight(kind);
    if (!w) w = mw;
    else if (*w != mw) return std::nullopt;
  }
  return w;
}

ModuleVector operator*(const Scalar& s, const ModuleVector& v) {
  ModuleVector out;
  out.add_scaled(v, s);
  return out;
}

// ---------------------------------------------------------------------------

Straightener::Straightener(const HighestWeight& weight, std::size_t step_budget)
    : weight_(weight), budget_(step_budget) {}

ModuleVector Straightener::act(const BasisSymbol& g, const PBWMonomial& m) {
  if (++steps_ > budget_)
    throw StepBudgetExceeded("straightening exceeded its step budget of " + std::to_string(budget_));
  if (g.is_central()) return ModuleVector(m, Scalar(weight_.central_charge()));

  const int sign = g.weight().sign();
  if (m.empty()) {
    if (sign > 0) return {};
    if (sign == 0) return ModuleVector(m, zero_mode_action(weight_, g));
    return ModuleVector(PBWMonomial({Factor{-g.weight(), g.index()}}));
  }
  if (sign < 0) {
    Factor f{-g.weight(), g.index()};
    if (!(m.factors().front() < f)) return ModuleVector(m.prepend(f));
  }

  auto key = std::make_pair(g, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  ModuleVector result = act_uncached(g, m);
  memo_.emplace(std::move(key), result);
  return result;
}

ModuleVector Straightener::act_uncached(const BasisSymbol& g, const PBWMonomial& m) {
  const Factor& front = m.factors().front();
  const BasisSymbol first = BasisSymbol::generator(-front.weight, front.index);
  const PBWMonomial rest = m.tail();

  // g F rest = F (g rest) + [g, F] rest
  ModuleVector result = act(first, act(g, rest));
  const LieElement commutator = bracket_basis(g, first);
  for (const auto& [s, c] : commutator.terms()) result.add_scaled(act(s, rest), c);
  return result;
}

ModuleVector Straightener::act(const BasisSymbol& g, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [m, c] : v.terms()) out.add_scaled(act(g, m), c);
  return out;
}

ModuleVector Straightener::act(const LieElement& e, const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [s, c] : e.terms()) out.add_scaled(act(s, v), c);
  return out;
}

ModuleVector Straightener::apply_word(const std::vector<BasisSymbol>& word, const ModuleVector& v) {
  ModuleVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
  return out;
}

ModuleVector act(const BasisSymbol& g, const ModuleVector& v, const HighestWeight& weight) {
  Straightener s(weight);
  return s.act(g, v);
}

ModuleVector act_element(const LieElement& e, const ModuleVector& v, const HighestWeight& weight) {
  Straightener s(weight);
  return s.act(e, v);
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_parts(const std::vector<GroupElement>& parts, std::size_t part_pos, int index_lo, int max_index,
                     const GroupElement& remaining, std::vector<Factor>& current, std::vector<PBWMonomial>& out) {
  if (remaining.is_zero()) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t p = part_pos; p < parts.size(); ++p) {
    const GroupElement& part = parts[p];
    if (part > remaining) break;  // parts are sorted
    const int lo = (p == part_pos) ? index_lo : -1;
    for (int i = lo; i <= max_index; ++i) {
      current.push_back(Factor{part, i});
      enumerate_parts(parts, p, i, max_index, remaining - part, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<PBWMonomial> weight_basis(const GroupElement& mu, const WeightBasisBounds& bounds) {
  if (mu.is_zero()) return {PBWMonomial()};
  if (mu.is_positive()) throw std::invalid_argument("weight_basis needs a weight <= 0, got " + to_string(mu));
  if (bounds.max_t_index < -1) throw std::invalid_argument("max t-index must be >= -1");

  std::vector<GroupElement> parts = bounds.parts;
  if (parts.empty()) {
    if (mu.kind() != GroupKind::Integers)
      throw std::invalid_argument("a finite part catalogue is required for " + std::string(to_string(mu.kind())));
    const long n = -mu.value().get_num().get_si();
    for (long a = 1; a <= n; ++a) parts.push_back(GroupElement::integer(a));
  }
  for (const auto& p : parts) {
    if (p.kind() != mu.kind()) throw std::invalid_argument("part catalogue belongs to another group");
    if (!p.is_positive()) throw std::invalid_argument("catalogue parts must be positive");
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  std::vector<PBWMonomial> out;
  std::vector<Factor> current;
  enumerate_parts(parts, 0, -1, bounds.max_t_index, -mu, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

ModuleVector SpanBuilder::reduce(ModuleVector v) const {
  for (const auto& [pivot, row] : rows_) {
    Scalar c = v.coefficient(pivot);
    if (!c.is_zero()) v.add_scaled(row, -c);
  }
  return v;
}

std::optional<ModuleVector> SpanBuilder::insert(const ModuleVector& v) {
  ModuleVector r = reduce(v);
  if (r.is_zero()) return std::nullopt;
  const auto& [pivot, lead] = *r.terms().rbegin();
  PBWMonomial p = pivot;
  ModuleVector normalized = (Scalar(1) / lead) * r;
  rows_.emplace_back(std::move(p), std::move(normalized));
  basis_.push_back(v);
  return r;
}

bool SpanBuilder::contains(const ModuleVector& v) const { return reduce(v).is_zero(); }

std::map<GroupElement, std::vector<ModuleVector>> submodule_generated(const std::vector<ModuleVector>& seeds,
                                                                      const std::vector<BasisSymbol>& catalog,
                                                                      int depth, const HighestWeight& weight,
                                                                      GroupKind kind) {
  std::map<GroupElement, SpanBuilder> spans;
  Straightener engine(weight);

  auto admit = [&](const ModuleVector& v) -> bool {
    if (v.is_zero()) return false;
    auto w = v.weight(kind);
    if (!w) throw std::invalid_argument("submodule_generated needs homogeneous vectors");
    return spans[*w].insert(v).has_value();
  };

  std::vector<ModuleVector> frontier;
  for (const auto& s : seeds)
    if (admit(s)) frontier.push_back(s);

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<ModuleVector> next;
    for (const auto& v : frontier)
      for (const auto& g : catalog) {
        ModuleVector w = engine.act(g, v);
        if (admit(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }

  std::map<GroupElement, std::vector<ModuleVector>> out;
  for (auto& [w, span] : spans)
    if (span.dimension() > 0) out.emplace(w, span.basis());
  return out;
}

}  // namespace blocklie
