#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "blocklie/charpoly.hpp"
#include "blocklie/group.hpp"
#include "blocklie/lie.hpp"
#include "blocklie/reducibility.hpp"
#include "blocklie/verma.hpp"

namespace blocklie {

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Text forms.
//
//   element := ["-"] term (("+" | "-") term)*
//   term    := [scalar "*"] atom
//   atom    := "L(" group "," index ")" | "c" | "x" ["^" int] ["*" "(" poly ")"]
//   vector  := like element, with atoms "L(-a,i)*...*v" or "v"
//
// Whitespace is ignored. Polynomial atoms need the integers.

std::string to_string(const BasisSymbol& s);
std::string to_string(const LieElement& e);
std::string to_string(const PBWMonomial& m);
std::string to_string(const ModuleVector& v);
std::string to_string(const PolyForm& p);

LieElement parse_element(std::string_view text, GroupKind kind = GroupKind::Integers);
ModuleVector parse_vector(std::string_view text, GroupKind kind = GroupKind::Integers);
/// Polynomial in t with rational coefficients, e.g. "t^3-1/2*t+1".
Polynomial parse_polynomial(std::string_view text);

// JSON forms. Group elements and scalars are written as strings in their text
// syntax; numbers are accepted on input.

using Json = nlohmann::ordered_json;

Json to_json(const LieElement& e);
LieElement lie_element_from_json(const Json& j, GroupKind kind);

Json to_json(const ModuleVector& v, GroupKind kind);
ModuleVector module_vector_from_json(const Json& j, GroupKind kind);

Json to_json(const CharPoly& f);
CharPoly charpoly_from_json(const Json& j);

/// {central_charge, labels: {explicit: [...]} | {charpoly: [...], initial: [...]}}.
/// The labels object may also be given at the top level, and "labels" may be a plain list.
HighestWeight highest_weight_from_json(const Json& j);
Json to_json(const HighestWeight& w);

Json to_json(const QuasiVerdict& q);
Json to_json(const DeltaReport& d);
Json to_json(const SingularReport& r);
Json to_json(const SingularVerification& v);
Json to_json(const DescentCheck& d);
Json to_json(const ReducibilityReport& r);

}  // namespace blocklie
