// Command-line front end. Exit codes: 0 success, 1 failed verdict, 2 usage error.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blocklie/acceptance.hpp"
#include "blocklie/group.hpp"
#include "blocklie/io.hpp"
#include "blocklie/kernels.hpp"
#include "blocklie/reducibility.hpp"
#include "blocklie/verma.hpp"

namespace {

using namespace blocklie;

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group = "integers";
  std::string weight;
  int max_t_index = 2;
  int probe_k = 10;
  int probe_b = 3;
  int max_degree = 4;
  int horizon = 14;
  int depth = 0;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  std::vector<std::string> only;

  std::vector<std::string> positional;
  std::string parts;
  int j = 0;
  std::string epsilon;
  bool serial = false;
  bool perturb_labels = false;
};

struct Report {
  Json json;
  std::string text;
  int code = kOk;
};

GroupKind group_of(const Options& o) {
  try {
    return parse_group_kind(o.group);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

HighestWeight weight_of_options(const Options& o) {
  if (o.weight.empty()) return HighestWeight();
  std::string text = o.weight;
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read weight file '" + text.substr(1) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--weight is not valid JSON: ") + e.what());
  }
  return highest_weight_from_json(j);
}

std::vector<GroupElement> parts_of(const Options& o, GroupKind kind) {
  std::vector<GroupElement> out;
  std::stringstream in(o.parts);
  for (std::string item; std::getline(in, item, ';');)
    if (!item.empty()) out.push_back(parse_group_element(kind, item));
  return out;
}

std::string horizon_note(const std::string& values) { return "within horizon (" + values + ")"; }

// --- commands ---------------------------------------------------------------

Report cmd_bracket(const Options& o) {
  const GroupKind kind = group_of(o);
  const LieElement a = parse_element(o.positional.at(0), kind);
  const LieElement b = parse_element(o.positional.at(1), kind);
  const LieElement r = bracket(a, b);
  Json j;
  j["left"] = to_string(a);
  j["right"] = to_string(b);
  j["result"] = to_json(r);
  j["text"] = to_string(r);
  return {j, to_string(r) + "\n"};
}

Report cmd_act(const Options& o) {
  const GroupKind kind = group_of(o);
  const LieElement g = parse_element(o.positional.at(0), kind);
  const ModuleVector v = parse_vector(o.positional.at(1), kind);
  const HighestWeight w = weight_of_options(o);
  Straightener engine(w);
  const ModuleVector r = engine.act(g, v);
  Json j;
  j["element"] = to_string(g);
  j["vector"] = to_string(v);
  j["result"] = to_json(r, kind);
  j["text"] = to_string(r);
  return {j, to_string(r) + "\n"};
}

Report cmd_weight_basis(const Options& o) {
  const GroupKind kind = group_of(o);
  const GroupElement mu = parse_group_element(kind, o.positional.at(0));
  std::vector<PBWMonomial> basis = weight_basis(mu, WeightBasisBounds{o.max_t_index, parts_of(o, kind)});
  if (o.depth > 0)
    std::erase_if(basis, [&](const PBWMonomial& m) { return m.size() > static_cast<std::size_t>(o.depth); });
  Json j;
  j["weight"] = to_string(mu);
  j["max_t_index"] = o.max_t_index;
  j["depth"] = o.depth;
  j["size"] = basis.size();
  j["monomials"] = Json::array();
  std::string text;
  for (const auto& m : basis) {
    j["monomials"].push_back(to_string(m));
    text += to_string(m) + "\n";
  }
  text += std::to_string(basis.size()) + " monomials\n";
  return {j, text};
}

Report cmd_singular_search(const Options& o) {
  const GroupKind kind = group_of(o);
  const GroupElement mu = parse_group_element(kind, o.positional.at(0));
  const HighestWeight w = weight_of_options(o);
  const SingularHorizon h{o.max_t_index, o.probe_k, o.probe_b};
  const SingularReport r = singular_candidates(w, mu, h, parts_of(o, kind), !o.serial);
  std::ostringstream text;
  text << "weight " << to_string(mu) << ", basis " << r.basis.size() << ", probes " << r.probes.size() << "\n";
  text << r.candidates.size() << " singular candidate(s) "
       << horizon_note("I=" + std::to_string(h.max_t_index) + ", K=" + std::to_string(h.probe_k) +
                       ", B=" + std::to_string(h.probe_b))
       << "\n";
  for (const auto& v : r.candidates) text << "  " << to_string(v) << "\n";
  text << "residuals re-checked: " << (r.residuals_vanish() ? "all zero" : "NONZERO") << "\n";
  return {to_json(r), text.str(), r.residuals_vanish() ? kOk : kVerdictFailed};
}

Report cmd_charpoly(const Options& o) {
  const HighestWeight w = weight_of_options(o);
  const auto f = charpoly_from_labels(w, o.max_degree, o.horizon);
  const CharPoly* generating = w.generating_charpoly();
  const bool roundtrip = f && generating && *generating == *f;
  Json j;
  j["charpoly"] = f ? to_json(*f) : Json(nullptr);
  j["text"] = f ? Json(f->to_string()) : Json(nullptr);
  j["roundtrip"] = roundtrip;
  j["certified"] = roundtrip;
  j["horizon"] = Json{{"D", o.max_degree}, {"N", o.horizon}};
  const std::string where = horizon_note("D=" + std::to_string(o.max_degree) + ", N=" + std::to_string(o.horizon));
  std::string text;
  if (!f) {
    text = "no characteristic polynomial " + where + "\n";
  } else {
    text = "f = " + f->to_string() + (roundtrip ? " (round-trip: matches the generating polynomial, certified)"
                                                : " (" + where + ")") +
           "\n";
  }
  return {j, text};
}

Report cmd_delta(const Options& o) {
  const HighestWeight w = weight_of_options(o);
  const DeltaReport d = delta_report(w, o.horizon, o.max_degree, o.horizon);
  std::ostringstream text;
  text << "Delta(z) = ";
  for (std::size_t i = 0; i < d.coefficients.size(); ++i)
    text << (i ? ", " : "[") << to_string(d.coefficients[i]);
  text << "]\n";
  if (d.verdict.found)
    text << "quasipolynomial: yes, order " << d.verdict.order() << ", recurrence " << d.verdict.recurrence->to_string()
         << "\n";
  else
    text << "quasipolynomial: unknown "
         << horizon_note("D=" + std::to_string(o.max_degree) + ", N=" + std::to_string(o.horizon)) << "\n";
  return {to_json(d), text.str()};
}

Report cmd_classify_order(const Options& o) {
  const GroupKind kind = group_of(o);
  const OrderClassification c = classify_order(kind, o.seed);
  const bool dense = c.verdict == OrderClassification::Verdict::Dense;
  Json j;
  j["group"] = std::string(to_string(kind));
  j["verdict"] = dense ? "dense" : "discrete";
  j["least_positive"] = c.least_positive ? Json(to_string(*c.least_positive)) : Json(nullptr);
  j["samples_checked"] = c.samples_checked;
  j["sanity_passed"] = c.sanity_passed;
  std::string text = dense ? "dense" : "discrete, a=" + to_string(*c.least_positive);
  text += "\nsanity check: " + std::to_string(c.samples_checked) + " samples, " +
          (c.sanity_passed ? "passed" : "FAILED") + "\n";
  return {j, text, c.sanity_passed ? kOk : kVerdictFailed};
}

Report cmd_step3(const Options& o) {
  const GroupKind kind = group_of(o);
  if (kind != GroupKind::DyadicRationals) throw UsageError("step3-check needs --group dyadic");
  // parts: "e1:k1;e2:k2;..." with e1 > e2 > ...
  std::vector<ChainPart> parts;
  std::stringstream in(o.parts);
  for (std::string item; std::getline(in, item, ';');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("part '" + item + "' is not of the form e:k");
    parts.push_back(ChainPart{parse_group_element(kind, item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  if (o.epsilon.empty()) throw UsageError("step3-check needs --epsilon");
  const HighestWeight w = weight_of_options(o);
  const DescentCheck c = descent_check(w, o.j, parts, parse_group_element(kind, o.epsilon));
  std::ostringstream text;
  text << "u has weight " << to_string(c.lambda) << "; target " << to_string(c.target) << "\n";
  text << "determinant product f(-lambda-eps) = " << to_string(c.predicted) << "\n";
  text << "straightened coefficient         = " << to_string(c.straightened) << "\n";
  text << (c.passed ? "PASS" : "FAIL") << "\n";
  return {to_json(c), text.str(), c.passed ? kOk : kVerdictFailed};
}

Report cmd_theorem2(const Options& o) {
  const HighestWeight w = weight_of_options(o);
  const ReducibilityReport r = reducibility_report(w, ReducibilityHorizons{o.max_degree, o.horizon, o.probe_b});
  std::ostringstream text;
  text << "detector                 result\n";
  text << "characteristic poly      " << (r.charpoly ? r.charpoly->to_string() : "none within horizon") << "\n";
  text << "Delta quasipolynomial    "
       << (r.quasi.found ? "yes, recurrence " + r.quasi.recurrence->to_string() : "unknown within horizon") << "\n";
  text << "singular at weight -1    " << r.singular.candidates.size() << " candidate(s)\n";
  text << "consistent               " << (r.consistent ? "yes" : "NO") << "\n";
  for (const auto& issue : r.inconsistencies) text << "  ! " << issue << "\n";
  text << r.verdict << "\n";
  return {to_json(r), text.str(), r.consistent ? kOk : kVerdictFailed};
}

Report cmd_verify_suite(const Options& o) {
  acceptance::Config config{o.seed, o.perturb_labels};
  std::vector<std::string> only;
  for (const auto& item : o.only) {
    std::stringstream in(item);
    for (std::string name; std::getline(in, name, ',');)
      if (!name.empty()) only.push_back(name);
  }
  std::vector<acceptance::CheckResult> results;
  try {
    results = acceptance::run_suite(config, only);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  return {acceptance::to_json(results, config), acceptance::render_table(results), all ? kOk : kVerdictFailed};
}

// --- wiring -----------------------------------------------------------------

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "integers | dyadic | lex-z2")->capture_default_str();
  cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "write the report to this file");
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

void add_weight(CLI::App* cmd, Options& o) {
  cmd->add_option("--weight", o.weight, "highest weight as JSON or @file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Block-type Lie algebras and their Verma modules"};
  app.require_subcommand(1);
  Options o;
  std::function<Report(const Options&)> handler;

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two Lie elements");
  bracket_cmd->add_option("a", o.positional, "elements")->expected(2)->required();
  add_common(bracket_cmd, o);
  bracket_cmd->callback([&] { handler = cmd_bracket; });

  auto* act_cmd = app.add_subcommand("act", "action of a Lie element on a Verma module vector");
  act_cmd->add_option("args", o.positional, "element and vector, e.g. 'L(1,0)' 'L(-1,-1)*v'")->expected(2)->required();
  add_common(act_cmd, o);
  add_weight(act_cmd, o);
  act_cmd->callback([&] { handler = cmd_act; });

  auto* basis_cmd = app.add_subcommand("weight-basis", "truncated PBW basis of a weight space");
  basis_cmd->add_option("mu", o.positional, "weight <= 0")->expected(1)->required();
  basis_cmd->add_option("--max-t-index", o.max_t_index, "I")->capture_default_str();
  basis_cmd->add_option("--depth", o.depth, "maximal number of factors (0 = no limit)")->capture_default_str();
  basis_cmd->add_option("--parts", o.parts, "part catalogue 'a;b;...' (needed off the integers)");
  add_common(basis_cmd, o);
  basis_cmd->callback([&] { handler = cmd_weight_basis; });

  auto* singular_cmd = app.add_subcommand("singular-search", "singular vectors within a horizon");
  singular_cmd->add_option("mu", o.positional, "weight < 0")->expected(1)->required();
  singular_cmd->add_option("--max-t-index", o.max_t_index, "I")->capture_default_str();
  singular_cmd->add_option("--probe-k", o.probe_k, "K")->capture_default_str();
  singular_cmd->add_option("--probe-b", o.probe_b, "B")->capture_default_str();
  singular_cmd->add_option("--parts", o.parts, "part catalogue 'a;b;...' (needed off the integers)");
  singular_cmd->add_flag("--serial", o.serial, "assemble the probe matrix serially");
  add_common(singular_cmd, o);
  add_weight(singular_cmd, o);
  singular_cmd->callback([&] { handler = cmd_singular_search; });

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial from labels");
  charpoly_cmd->add_option("--max-degree", o.max_degree, "D")->capture_default_str();
  charpoly_cmd->add_option("--horizon", o.horizon, "N")->capture_default_str();
  add_common(charpoly_cmd, o);
  add_weight(charpoly_cmd, o);
  charpoly_cmd->callback([&] { handler = cmd_charpoly; });

  auto* delta_cmd = app.add_subcommand("delta", "Delta series and quasipolynomial test");
  delta_cmd->add_option("--max-degree", o.max_degree, "maximal recurrence order D")->capture_default_str();
  delta_cmd->add_option("--horizon", o.horizon, "N: series length and recurrence horizon")->capture_default_str();
  add_common(delta_cmd, o);
  add_weight(delta_cmd, o);
  delta_cmd->callback([&] { handler = cmd_delta; });

  auto* classify_cmd = app.add_subcommand("classify-order", "dense or discrete order");
  add_common(classify_cmd, o);
  classify_cmd->callback([&] { handler = cmd_classify_order; });

  auto* step3_cmd = app.add_subcommand("step3-check", "determinant product against straightening (dense orders)");
  step3_cmd->add_option("--parts", o.parts, "'e1:k1;e2:k2;...' with e1 > e2 > ... > 0")->required();
  step3_cmd->add_option("--epsilon", o.epsilon, "0 < eps < e_r")->required();
  step3_cmd->add_option("--j", o.j, "index of the descending generator")->capture_default_str();
  add_common(step3_cmd, o);
  add_weight(step3_cmd, o);
  step3_cmd->get_option("--group")->default_str("dyadic");
  step3_cmd->preparse_callback([&](std::size_t) { o.group = "dyadic"; });
  step3_cmd->callback([&] { handler = cmd_step3; });

  auto* theorem2_cmd = app.add_subcommand("theorem2", "reducibility verdict from all three detectors");
  theorem2_cmd->add_option("--max-degree", o.max_degree, "D")->capture_default_str();
  theorem2_cmd->add_option("--horizon", o.horizon, "N")->capture_default_str();
  theorem2_cmd->add_option("--probe-b", o.probe_b, "B")->capture_default_str();
  add_common(theorem2_cmd, o);
  add_weight(theorem2_cmd, o);
  theorem2_cmd->callback([&] { handler = cmd_theorem2; });

  auto* suite_cmd = app.add_subcommand("verify-suite", "run the acceptance checks");
  suite_cmd->add_option("--only", o.only, "comma-separated check names");
  suite_cmd->add_flag("--perturb-labels", o.perturb_labels, "inject the label perturbation fixture");
  add_common(suite_cmd, o);
  suite_cmd->callback([&] { handler = cmd_verify_suite; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report report;
  try {
    report = handler(o);
  } catch (const StepBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerdictFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerdictFailed;
  }

  const std::string body = o.format == "json" ? report.json.dump(2) + "\n" : report.text;
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kUsage;
    }
    file << body;
  }
  return report.code;
}
