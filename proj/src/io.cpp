#include "blocklie/io.hpp"

#include <cctype>

namespace blocklie {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

// "", "-", "+", "2*", "-2*" or "+(1+sqrt2)*".
std::string coefficient_prefix(const Scalar& c, bool first) {
  std::string out;
  Scalar magnitude = c;
  if (c.is_rational() && sgn(c.rational_part()) < 0) {
    out = "-";
    magnitude = -c;
  } else if (!first) {
    out = "+";
  }
  if (magnitude == Scalar(1)) return out;
  return out + to_string(magnitude) + "*";
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) { skip(); }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    skip();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const { throw ParseError(pos, message); }

  std::string found() const { return done() ? ", found end of input" : std::string(", found '") + peek() + "'"; }

  // Raw text up to the parenthesis matching the one just consumed.
  std::string balanced() {
    int depth = 1;
    std::string out;
    while (!done()) {
      const char ch = text_[pos_];
      if (ch == '(') ++depth;
      if (ch == ')' && --depth == 0) break;
      out += ch;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced parenthesis");
    return out;
  }

  std::string number() {
    std::string out;
    if (peek() == '-' || peek() == '+') out += take();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number" + found());
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += take();
    return out;
  }

  // p, p/q or p/2^k (unsigned)
  std::string rational() {
    std::string out = number();
    if (peek() == '/') {
      out += take();
      out += number();
      if (peek() == '^') {
        out += take();
        out += number();
      }
    }
    return out;
  }

  int integer() {
    const std::size_t start = pos_;
    const std::string digits = number();
    try {
      return std::stoi(digits);
    } catch (const std::exception&) {
      fail_at(start, "integer out of range");
    }
  }

 private:
  char take() {
    const char c = text_[pos_++];
    skip();
    return c;
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Scalar parse_coefficient(Cursor& in) {
  const std::size_t start = in.position();
  try {
    if (in.accept('(')) {
      const std::string inner = in.balanced();
      in.expect(')');
      return parse_scalar("(" + inner + ")");
    }
    return Scalar(parse_rational(in.rational()));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    in.fail_at(start, e.what());
  }
}

bool starts_coefficient(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '('; }

// Sign-separated terms; `term` parses one term after its sign and coefficient.
// With `constants`, a coefficient not followed by '*' is a term of its own.
template <class Value, class Term>
Value parse_sum(Cursor& in, Term term, bool constants = false) {
  Value out;
  if (in.done()) in.fail("empty expression");
  bool first = true;
  while (!in.done()) {
    Scalar sign(1);
    if (in.accept('-')) {
      sign = Scalar(-1);
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'" + in.found());
    }
    first = false;
    Scalar coeff = sign;
    if (starts_coefficient(in.peek())) {
      coeff *= parse_coefficient(in);
      if (in.peek() != '*') {
        if (constants && (in.done() || in.peek() == '+' || in.peek() == '-')) {
          term(in, coeff, out, true);
          continue;
        }
        if (in.done() || in.peek() == '+' || in.peek() == '-') in.fail("a bare scalar is not an element");
        in.fail("expected '*' after coefficient" + in.found());
      }
      in.expect('*');
    }
    term(in, coeff, out, false);
  }
  return out;
}

GroupElement parse_weight(Cursor& in, GroupKind kind) {
  const std::size_t start = in.position();
  std::string text;
  if (kind == GroupKind::LexZ2) {
    bool negate = false;
    if (in.accept('-')) negate = true;
    in.expect('(');
    text = "(" + in.balanced() + ")";
    in.expect(')');
    try {
      GroupElement g = parse_group_element(kind, text);
      return negate ? -g : g;
    } catch (const std::exception& e) {
      in.fail_at(start, e.what());
    }
  }
  text = in.rational();
  try {
    return parse_group_element(kind, text);
  } catch (const std::exception& e) {
    in.fail_at(start, e.what());
  }
}

BasisSymbol parse_generator(Cursor& in, GroupKind kind) {
  in.expect('L');
  in.expect('(');
  GroupElement alpha = parse_weight(in, kind);
  in.expect(',');
  const std::size_t index_pos = in.position();
  const int index = in.integer();
  in.expect(')');
  if (index < -1) in.fail_at(index_pos, "index must be >= -1, got " + std::to_string(index));
  return BasisSymbol::generator(std::move(alpha), index);
}

Polynomial parse_polynomial_text(std::string_view text, std::size_t offset) {
  try {
    Cursor in(text);
    return parse_sum<Polynomial>(
        in,
        [](Cursor& c, const Scalar& coeff, Polynomial& out, bool constant) {
          if (constant) {
            out += Polynomial::constant(coeff);
            return;
          }
          if (!c.accept('t')) c.fail("expected 't'" + c.found());
          int degree = 1;
          if (c.accept('^')) {
            const std::size_t pos = c.position();
            degree = c.integer();
            if (degree < 0) c.fail_at(pos, "negative power of t");
          }
          out += Polynomial::monomial(coeff, degree);
        },
        true);
  } catch (const ParseError& e) {
    throw ParseError(offset + e.position(), std::string("in polynomial '") + std::string(text) + "': " + e.what());
  }
}

LieElement parse_poly_atom(Cursor& in, GroupKind kind) {
  const std::size_t start = in.position();
  in.expect('x');
  long alpha = 1;
  if (in.accept('^')) alpha = in.integer();
  Polynomial f = Polynomial::constant(Scalar(1));
  if (in.accept('*')) {
    const std::size_t at = in.position();
    if (in.accept('(')) {
      const std::string inner = in.balanced();
      in.expect(')');
      f = parse_polynomial_text(inner, at + 1);
    } else if (in.peek() == 't') {
      in.accept('t');
      int degree = 1;
      if (in.accept('^')) degree = in.integer();
      if (degree < 0) in.fail_at(at, "negative power of t");
      f = Polynomial::monomial(Scalar(1), degree);
    } else {
      in.fail("expected '(' or 't' after 'x^a*'" + in.found());
    }
  }
  if (kind != GroupKind::Integers) in.fail_at(start, "polynomial form needs --group integers");
  return from_poly(PolyForm{GroupElement::integer(alpha), f});
}

}  // namespace

// --- printing ---------------------------------------------------------------

std::string to_string(const BasisSymbol& s) {
  if (s.is_central()) return "c";
  return "L(" + to_string(s.weight()) + "," + std::to_string(s.index()) + ")";
}

std::string to_string(const LieElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : e.terms()) {
    out += coefficient_prefix(c, out.empty()) + to_string(s);
  }
  return out;
}

std::string to_string(const PBWMonomial& m) {
  std::string out;
  for (const auto& f : m.factors()) out += "L(" + to_string(-f.weight) + "," + std::to_string(f.index) + ")*";
  return out + "v";
}

std::string to_string(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) out += coefficient_prefix(c, out.empty()) + to_string(m);
  return out;
}

std::string to_string(const PolyForm& p) {
  std::string out = "x";
  if (p.alpha != GroupElement::integer(1)) out += "^" + to_string(p.alpha);
  if (p.f != Polynomial::constant(Scalar(1))) out += "*(" + p.f.to_string("t") + ")";
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

// The printers write the zero element as "0".
bool is_literal_zero(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  return first != std::string_view::npos && first == last && text[first] == '0';
}

}  // namespace

LieElement parse_element(std::string_view text, GroupKind kind) {
  if (is_literal_zero(text)) return {};
  Cursor in(text);
  return parse_sum<LieElement>(in, [kind](Cursor& c, const Scalar& coeff, LieElement& out, bool) {
    switch (c.peek()) {
      case 'L':
        out.add(parse_generator(c, kind), coeff);
        return;
      case 'c':
        c.accept('c');
        out.add(BasisSymbol::central(kind), coeff);
        return;
      case 'x':
        out += coeff * parse_poly_atom(c, kind);
        return;
      default:
        c.fail("expected 'L(', 'c' or 'x'" + c.found());
    }
  });
}

ModuleVector parse_vector(std::string_view text, GroupKind kind) {
  if (is_literal_zero(text)) return {};
  Cursor in(text);
  return parse_sum<ModuleVector>(in, [kind](Cursor& c, const Scalar& coeff, ModuleVector& out, bool) {
    const std::size_t start = c.position();
    std::vector<Factor> factors;
    while (c.peek() == 'L') {
      const std::size_t at = c.position();
      const BasisSymbol g = parse_generator(c, kind);
      if (!g.weight().is_negative()) c.fail_at(at, "PBW factors must have negative weight");
      factors.push_back(Factor{-g.weight(), g.index()});
      c.expect('*');
    }
    if (!c.accept('v')) c.fail("expected 'L(' or 'v'" + c.found());
    try {
      out.add(PBWMonomial(std::move(factors)), coeff);
    } catch (const std::invalid_argument& e) {
      c.fail_at(start, e.what());
    }
  });
}

Polynomial parse_polynomial(std::string_view text) { return parse_polynomial_text(text, 0); }

// --- JSON -------------------------------------------------------------------

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as integer or string, got " + j.dump());
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  return Scalar(rational_from_json(j));
}

GroupElement group_from_json(const Json& j, GroupKind kind) {
  if (j.is_number_integer()) return parse_group_element(kind, std::to_string(j.get<long>()));
  if (j.is_string()) return parse_group_element(kind, j.get<std::string>());
  if (j.is_array() && j.size() == 2 && kind == GroupKind::LexZ2)
    return GroupElement::lex(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  throw std::invalid_argument("expected a group element, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json to_json(const LieElement& e) {
  Json out = Json::array();
  for (const auto& [s, c] : e.terms()) {
    Json term;
    if (s.is_central()) {
      term["i"] = "central";
    } else {
      term["alpha"] = to_string(s.weight());
      term["i"] = s.index();
    }
    term["coeff"] = to_string(c);
    out.push_back(std::move(term));
  }
  return out;
}

LieElement lie_element_from_json(const Json& j, GroupKind kind) {
  if (!j.is_array()) throw std::invalid_argument("a Lie element is a list of terms");
  LieElement out;
  for (const auto& term : j) {
    const Scalar coeff = term.contains("coeff") ? scalar_from_json(term.at("coeff")) : Scalar(1);
    const Json& i = term.at("i");
    if (i.is_string() && i.get<std::string>() == "central") {
      out.add(BasisSymbol::central(kind), coeff);
    } else {
      out.add(BasisSymbol::generator(group_from_json(term.at("alpha"), kind), i.get<int>()), coeff);
    }
  }
  return out;
}

Json to_json(const ModuleVector& v, GroupKind kind) {
  Json out;
  const auto w = v.weight(kind);
  out["weight"] = w ? Json(to_string(*w)) : Json(nullptr);
  out["terms"] = Json::array();
  for (const auto& [m, c] : v.terms()) {
    Json factors = Json::array();
    for (const auto& f : m.factors()) factors.push_back(Json::array({to_string(f.weight), f.index}));
    out["terms"].push_back(Json{{"factors", std::move(factors)}, {"coeff", to_string(c)}});
  }
  return out;
}

ModuleVector module_vector_from_json(const Json& j, GroupKind kind) {
  ModuleVector out;
  for (const auto& term : j.at("terms")) {
    std::vector<Factor> factors;
    for (const auto& f : term.at("factors")) factors.push_back(Factor{group_from_json(f.at(0), kind), f.at(1).get<int>()});
    out.add(PBWMonomial(std::move(factors)), scalar_from_json(term.at("coeff")));
  }
  if (j.contains("weight") && !j.at("weight").is_null()) {
    const GroupElement declared = group_from_json(j.at("weight"), kind);
    const auto actual = out.weight(kind);
    if (actual && *actual != declared)
      throw std::invalid_argument("declared weight " + to_string(declared) + " does not match terms of weight " +
                                  to_string(*actual));
  }
  return out;
}

Json to_json(const CharPoly& f) { return rationals_to_json(f.coefficients()); }

CharPoly charpoly_from_json(const Json& j) { return CharPoly(rationals_from_json(j)); }

HighestWeight highest_weight_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("highest weight must be a JSON object");
  const Rational c = j.contains("central_charge") ? rational_from_json(j.at("central_charge")) : Rational(0);
  const Json* spec = &j;
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (labels.is_array()) return HighestWeight::explicit_labels(c, rationals_from_json(labels));
    spec = &labels;
  }
  if (spec->contains("charpoly")) {
    std::vector<Rational> initial;
    if (spec->contains("initial")) initial = rationals_from_json(spec->at("initial"));
    return HighestWeight::recurrent(charpoly_from_json(spec->at("charpoly")), c, std::move(initial));
  }
  if (spec->contains("explicit")) return HighestWeight::explicit_labels(c, rationals_from_json(spec->at("explicit")));
  return HighestWeight::explicit_labels(c, {});
}

Json to_json(const HighestWeight& w) {
  Json out;
  out["central_charge"] = to_string(w.central_charge());
  if (const CharPoly* f = w.generating_charpoly()) {
    out["labels"] = Json{{"charpoly", to_json(*f)}, {"initial", rationals_to_json(w.stored_labels())}};
  } else {
    out["labels"] = Json{{"explicit", rationals_to_json(w.stored_labels())}};
  }
  return out;
}

Json to_json(const QuasiVerdict& q) {
  Json out;
  out["verdict"] = q.found ? "yes" : "unknown-within-horizon";
  out["order"] = q.found ? Json(q.order()) : Json(nullptr);
  out["recurrence"] = q.recurrence ? to_json(*q.recurrence) : Json(nullptr);
  out["horizon"] = Json{{"max_order", q.max_order}, {"N", q.horizon}};
  return out;
}

Json to_json(const DeltaReport& d) {
  Json out;
  out["coefficients"] = rationals_to_json(d.coefficients);
  out["quasipolynomial"] = to_json(d.verdict);
  return out;
}

Json to_json(const SingularReport& r) {
  Json out;
  const GroupKind kind = r.weight.kind();
  out["weight"] = to_string(r.weight);
  out["horizon"] = Json{{"I", r.horizon.max_t_index}, {"K", r.horizon.probe_k}, {"B", r.horizon.probe_b}};
  out["basis_size"] = r.basis.size();
  out["probe_count"] = r.probes.size();
  out["dimension"] = r.candidates.size();
  out["candidates"] = Json::array();
  for (const auto& v : r.candidates) {
    Json c = to_json(v, kind);
    c["text"] = to_string(v);
    out["candidates"].push_back(std::move(c));
  }
  out["residuals_vanish"] = r.residuals_vanish();
  out["within_horizon"] = true;
  return out;
}

Json to_json(const SingularVerification& v) {
  Json out;
  out["passed"] = v.passed;
  out["certified"] = v.certified;
  out["higher_weights_vanish"] = v.higher_weights_vanish;
  out["first_failure"] = v.first_failure ? Json(*v.first_failure) : Json(nullptr);
  Json residuals = Json::array();
  for (const auto& r : v.residuals) residuals.push_back(to_string(r));
  out["residuals"] = std::move(residuals);
  out["realized"] = polynomial_to_json(v.realized);
  return out;
}

Json to_json(const DescentCheck& d) {
  Json out;
  out["lambda"] = to_string(d.lambda);
  out["target"] = to_string(d.target);
  out["predicted"] = to_string(d.predicted);
  out["straightened"] = to_string(d.straightened);
  out["passed"] = d.passed;
  return out;
}

Json to_json(const ReducibilityReport& r) {
  Json out;
  out["horizons"] = Json{{"D", r.horizons.max_degree},
                         {"N", r.horizons.horizon},
                         {"I", r.singular.horizon.max_t_index},
                         {"K", r.singular.horizon.probe_k},
                         {"B", r.horizons.probe_b}};
  out["charpoly"] = r.charpoly ? to_json(*r.charpoly) : Json(nullptr);
  out["quasipolynomial"] = to_json(r.quasi);
  out["singular"] = to_json(r.singular);
  out["consistent"] = r.consistent;
  out["reducible"] = r.reducible;
  out["verdict"] = r.verdict;
  out["inconsistencies"] = r.inconsistencies;
  return out;
}

}  // namespace blocklie
