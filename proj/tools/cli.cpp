#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "hodge/catalog.hpp"
#include "hodge/constructions.hpp"
#include "hodge/document.hpp"
#include "hodge/error.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/verifiers.hpp"

namespace hodge::cli {

using json = nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string grid = "4,8,16";
  std::string shear = "8,16";
  unsigned seed = 0;
  std::string report = "text";
  int operator_index = -1;
  std::string name;
  std::string profile = "-2:1,-1:1,0:1";
};

// A finished command: verdict report, optional output document and extra structured fields.
struct Outcome {
  VerdictReport report;
  std::optional<std::string> document;
  json extra = json::object();
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      Rational q = parse_rational(item);
      if (sgn(q) <= 0) throw std::invalid_argument("value must be positive");
      out.push_back(q);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
  return out;
}

Policy policy_of(const Options& o) { return Policy{parse_list(o.grid, "--grid"), parse_list(o.shear, "--shear")}; }

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const Options& o) { return parse_document(read_file(o.input)); }

template <class T>
T load_as(const Options& o, const char* kind) {
  Document d = load(o);
  if (auto* x = std::get_if<T>(&d)) return *x;
  throw ParseError(std::string("$.kind: expected \"") + kind + "\", found \"" + kind_of(d) + "\"");
}

HodgeDatum load_mixed(const Options& o) {
  Document d = load(o);
  if (auto* h = std::get_if<HodgeDatum>(&d)) return *h;
  if (auto* orb = std::get_if<OrbitDatum>(&d)) return as_mixed(*orb);
  throw ParseError("$.kind: expected \"mixed\" or \"orbit\", found \"" + kind_of(d) + "\"");
}

VerdictReport refusal(const ConstructionError& e) {
  VerdictReport r;
  std::string what = e.what();
  std::string prefix = e.stage() + ": ";
  if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
  r.add(e.stage(), false, what);
  return r;
}

Verdict combine(const VerdictReport& checks, Verdict target) { return checks.all_passed() ? target : Verdict::refuted; }

// ---- commands

Outcome check_mhs(const Options& o) {
  HodgeDatum h = load_mixed(o);
  Outcome out;
  out.report = mhs_report(h);
  if (!out.report.all_passed()) {
    out.report.verdict = Verdict::refuted;
    return out;
  }
  VerdictReport pol = check_mixed_orbit(h, policy_of(o));
  out.report.merge("", pol);
  out.report.verdict = pol.verdict;
  return out;
}

Outcome check_orbit(const Options& o) {
  Document d = load(o);
  Outcome out;
  if (auto* orb = std::get_if<OrbitDatum>(&d)) out.report = check_pure_orbit(*orb, policy_of(o));
  else if (auto* h = std::get_if<HodgeDatum>(&d)) out.report = check_mixed_orbit(*h, policy_of(o));
  else throw ParseError("$.kind: expected \"mixed\" or \"orbit\", found \"" + kind_of(d) + "\"");
  return out;
}

Matrix pick_operator(const std::vector<Matrix>& ops, int index, std::size_t dim) {
  if (index >= static_cast<int>(ops.size())) throw UsageError("--operator: index out of range");
  if (index >= 0) return ops[static_cast<std::size_t>(index)];
  Matrix s(dim, dim);
  for (const auto& n : ops) s += n;
  return s;
}

Outcome monodromy(const Options& o) {
  Document d = load(o);
  Matrix n;
  int center = 0;
  if (auto* orb = std::get_if<OrbitDatum>(&d)) {
    if (orb->operators.empty()) throw UsageError("orbit has no operators");
    n = pick_operator(orb->operators, std::max(o.operator_index, 0), orb->dim);
    center = orb->weight;
  } else if (auto* h = std::get_if<HodgeDatum>(&d)) {
    if (h->operators.empty()) throw UsageError("datum has no operators");
    n = pick_operator(h->operators, std::max(o.operator_index, 0), h->dim);
  } else {
    throw ParseError("$.kind: expected \"mixed\" or \"orbit\", found \"" + kind_of(d) + "\"");
  }
  Filtration m = shift(weight_monodromy(n), center).filtration;
  Outcome out;
  out.report.add("N W_k in W_{k-2} and N^j : gr_{c+j} -> gr_{c-j} bijective", satisfies_monodromy_axioms(n, m, center),
                 "center " + std::to_string(center));
  out.report.add("independent rank check", oracle_monodromy_axioms(n, m, center));
  out.report.verdict = out.report.all_passed() ? Verdict::certified : Verdict::refuted;
  out.extra["center"] = center;
  out.extra["filtration"] = json::parse(serialize(m));
  return out;
}

Outcome rel_monodromy(const Options& o) {
  HodgeDatum h = load_as<HodgeDatum>(o, "mixed");
  if (h.operators.empty()) throw UsageError("datum has no operators");
  Matrix n = pick_operator(h.operators, o.operator_index, h.dim);
  Outcome out;
  auto m = relative_monodromy(n, h.weight);
  out.report.add("relative monodromy filtration exists", m.has_value(),
                 o.operator_index < 0 ? "N = sum of the operators" : "N = operator " + std::to_string(o.operator_index));
  if (m) {
    out.report.add("relative axioms", satisfies_relative_axioms(n, h.weight, *m));
    out.report.add("independent rank check", oracle_relative_axioms(n, h.weight, *m));
    out.extra["filtration"] = json::parse(serialize(*m));
  }
  out.report.verdict = out.report.all_passed() ? Verdict::certified : Verdict::refuted;
  return out;
}

json conditions_of(const auto& c) {
  json j = json::object();
  for (const char* tag : {"(a)", "(b)", "(i)", "(ii)"}) j[tag] = c.condition(tag);
  return j;
}

template <class C>
Outcome certificate_outcome(const C& c) {
  Outcome out;
  out.report.merge("", c.checks);
  out.report.merge("target: ", c.target_report);
  out.report.verdict = combine(c.checks, c.target_report.verdict);
  out.document = serialize(c);
  out.extra["conditions"] = conditions_of(c);
  json shears = json::array();
  for (const auto& a : c.shears) shears.push_back(to_string(a));
  out.extra["shears"] = shears;
  return out;
}

Outcome embed(const Options& o) {
  HodgeDatum h = load_as<HodgeDatum>(o, "mixed");
  try {
    return certificate_outcome(embed_general(h, policy_of(o)));
  } catch (const ConstructionError& e) {
    return {refusal(e), std::nullopt, json::object()};
  }
}

Outcome surject(const Options& o) {
  HodgeDatum h = load_as<HodgeDatum>(o, "mixed");
  try {
    return certificate_outcome(surject_from_pure(h, policy_of(o)));
  } catch (const ConstructionError& e) {
    return {refusal(e), std::nullopt, json::object()};
  }
}

Outcome verify_certificate(const Options& o) {
  Document d = load(o);
  Outcome out;
  if (auto* c = std::get_if<EmbeddingCertificate>(&d)) {
    verify(*c, policy_of(o));
    out = certificate_outcome(*c);
  } else if (auto* s = std::get_if<SurjectionCertificate>(&d)) {
    verify(*s, policy_of(o));
    out = certificate_outcome(*s);
  } else {
    throw ParseError("$.kind: expected a certificate, found \"" + kind_of(d) + "\"");
  }
  out.document.reset();
  return out;
}

Outcome orbit_to_mixed_cmd(const Options& o) {
  OrbitDatum orb = load_as<OrbitDatum>(o, "orbit");
  Outcome out;
  try {
    PolarizedMixed p = orbit_to_mixed(orb, policy_of(o));
    out.report = polarized_mixed_checks(p, policy_of(o));
    out.report.verdict = combine(out.report, check_mixed_orbit(p.mixed, policy_of(o)).verdict);
    out.document = serialize(p);
  } catch (const ConstructionError& e) {
    out.report = refusal(e);
  }
  return out;
}

Outcome mixed_to_orbit_cmd(const Options& o) {
  PolarizedMixed p = load_as<PolarizedMixed>(o, "polarized-mixed");
  Outcome out;
  try {
    OrbitFromMixed r = mixed_to_orbit(p, policy_of(o));
    out.report = r.report;
    out.document = serialize(r.orbit);
  } catch (const ConstructionError& e) {
    out.report = refusal(e);
  }
  return out;
}

Outcome shear_cmd(const Options& o) {
  OrbitDatum orb = load_as<OrbitDatum>(o, "orbit");
  Policy policy = policy_of(o);
  Outcome out;
  bool exact = true;
  for (const auto& a : policy.shear) {
    ShearReport s = shear_equivalence(orb, a, policy);
    out.report.add("a = " + to_string(a), s.agree,
                   "orbit " + to_string(s.left.verdict) + ", sheared " + to_string(s.right.verdict));
    exact = exact && s.left.verdict != Verdict::supported && s.right.verdict != Verdict::supported;
  }
  out.report.verdict = !out.report.all_passed() ? Verdict::refuted : exact ? Verdict::certified : Verdict::supported;
  return out;
}

std::vector<std::pair<int, int>> parse_profile(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("expected weight:multiplicity");
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("--profile: malformed entry '" + item + "'");
    }
  }
  return out;
}

Outcome catalog_cmd(const Options& o) {
  Outcome out;
  out.report.verdict = Verdict::certified;
  if (o.name == "random") {
    out.document = serialize(gen_random_mhs(o.seed, RandomProfile{parse_profile(o.profile), false}));
    out.report.add("random datum", true, "seed " + std::to_string(o.seed) + ", profile " + o.profile);
    return out;
  }
  json entries = json::array();
  for (const auto& e : catalog()) {
    if (!o.name.empty() && e.name != o.name) continue;
    std::string kind = e.mixed ? "mixed" : "orbit";
    entries.push_back({{"name", e.name},
                       {"kind", kind},
                       {"positive", e.positive},
                       {"expected_clause", e.expected_clause},
                       {"provenance", e.provenance}});
    out.report.add(e.name, true, kind + (e.positive ? ", positive" : ", negative (" + e.expected_clause + ")"));
    if (!o.name.empty()) out.document = e.mixed ? serialize(*e.mixed) : serialize(*e.orbit);
  }
  if (!o.name.empty() && entries.empty()) throw UsageError("unknown catalog entry '" + o.name + "'");
  out.extra["entries"] = entries;
  return out;
}

void emit(const std::string& command, const Options& o, const Outcome& r, std::ostream& out) {
  if (r.document && !o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.output);
    f << *r.document;
  }
  bool inline_doc = r.document && o.output.empty();
  if (o.report == "structured") {
    json j = json::parse(report_json(r.report));
    j["command"] = command;
    for (auto& [k, v] : r.extra.items()) j[k] = v;
    if (inline_doc) j["output"] = json::parse(*r.document);
    out << j.dump(2) << "\n";
    return;
  }
  out << "command: " << command << "\n" << report_text(r.report);
  for (auto& [k, v] : r.extra.items())
    if (k != "entries" && k != "filtration") out << k << ": " << v.dump() << "\n";
  if (r.extra.contains("filtration")) out << "filtration: " << r.extra["filtration"].dump() << "\n";
  if (inline_doc) out << *r.document;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of mixed Hodge structures and nilpotent orbits"};
  app.require_subcommand(1);
  Options o;
  using Fn = std::function<Outcome(const Options&)>;
  std::map<std::string, Fn> commands;

  auto add = [&](const std::string& name, const std::string& help, Fn fn, bool input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (input) sub->add_option("--input", o.input, "Input document")->required();
    sub->add_option("--output", o.output, "Write the resulting document here");
    sub->add_option("--grid", o.grid, "Sampling grid y1,y2,...")->capture_default_str();
    sub->add_option("--shear", o.shear, "Shear values a1,a2,...")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for generated data");
    sub->add_option("--report", o.report, "Report style")->check(CLI::IsMember({"text", "structured"}));
    commands[name] = std::move(fn);
    return sub;
  };
  add("check-mhs", "Check the MHS axioms and graded polarizations", check_mhs);
  add("check-orbit", "Check the nilpotent orbit condition", check_orbit);
  add("monodromy", "Monodromy weight filtration of one operator", monodromy)
      ->add_option("--operator", o.operator_index, "Operator index (default 0)");
  add("rel-monodromy", "Relative monodromy filtration M(N, W)", rel_monodromy)
      ->add_option("--operator", o.operator_index, "Operator index (default: sum of all)");
  add("embed", "Embed a mixed datum into a pure orbit", embed);
  add("surject", "Surject a pure orbit onto a mixed datum", surject);
  add("verify-certificate", "Recompute every clause of a certificate", verify_certificate);
  add("orbit-to-mixed", "Limit mixed structure of a pure orbit", orbit_to_mixed_cmd);
  add("mixed-to-orbit", "Pure orbit from a polarized mixed structure", mixed_to_orbit_cmd);
  add("prop44", "Compare an orbit with its sheared versions", shear_cmd);
  CLI::App* cat = add("catalog", "List or export catalog entries", catalog_cmd, false);
  cat->add_option("--name", o.name, "Entry to export, or 'random'");
  cat->add_option("--profile", o.profile, "Random profile w:m,...")->capture_default_str();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome r = commands.at(name)(o);
    emit(name, o, r, out);
    return is_positive(r.report.verdict) ? kPositive : kRefuted;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kRefuted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRefuted;
  }
}

}  // namespace hodge::cli
