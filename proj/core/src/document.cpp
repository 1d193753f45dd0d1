#include "hodge/document.hpp"

#include <json.hpp>

#include "hodge/error.hpp"

namespace hodge {

using json = nlohmann::json;

namespace {

// ---- writing

json rational_json(const Rational& q) { return to_string(q); }

json gauss_json(const Gauss& z) { return json::array({to_string(z.re()), to_string(z.im())}); }

json rows_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gauss_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

// Entries are written as fractions when rational and as pairs otherwise.
json matrix_json(const Matrix& m) {
  if (!m.is_rational()) return rows_json(m);
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c).re()));
    out.push_back(std::move(row));
  }
  return out;
}

json filtration_json(const Filtration& f, const char* index) {
  json out = json::array();
  for (const auto& [k, s] : f.steps()) out.push_back({{index, k}, {"basis", rows_json(s.basis())}});
  return out;
}

json pairing_json(const Pairing& p, json where) {
  return {{"weight", std::move(where)}, {"matrix", matrix_json(p.matrix)}, {"twist", p.twist}, {"symmetry", p.symmetry}};
}

json operators_json(const std::vector<Matrix>& ops) {
  json out = json::array();
  for (const auto& n : ops) out.push_back(matrix_json(n));
  return out;
}

json header(const char* kind) { return {{"format_version", kDatumFormat}, {"field", "Q(i)"}, {"kind", kind}}; }

json mixed_json(const HodgeDatum& h, const char* kind = "mixed") {
  json j = header(kind);
  j["dim"] = h.dim;
  j["weight_filtration"] = filtration_json(h.weight, "k");
  j["hodge_filtration"] = filtration_json(h.hodge, "p");
  j["operators"] = operators_json(h.operators);
  json ps = json::array();
  for (const auto& [k, p] : h.graded_pairings) ps.push_back(pairing_json(p, k));
  j["pairings"] = std::move(ps);
  j["twist_tag"] = h.twist_tag;
  return j;
}

json orbit_json(const OrbitDatum& o) {
  json j = header("orbit");
  j["dim"] = o.dim;
  j["weight"] = o.weight;
  j["hodge_filtration"] = filtration_json(o.hodge, "p");
  j["operators"] = operators_json(o.operators);
  j["pairings"] = json::array({pairing_json(o.pairing, "global")});
  j["twist_tag"] = o.twist_tag;
  return j;
}

json polarized_json(const PolarizedMixed& p) {
  json j = mixed_json(p.mixed, "polarized-mixed");
  j["monodromy"] = matrix_json(p.n);
  j["weight"] = p.weight;
  j["pairings"].push_back(pairing_json(p.pairing, "global"));
  return j;
}

json report_to_json(const VerdictReport& r) {
  json cs = json::array();
  for (const auto& c : r.clauses) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"verdict", to_string(r.verdict)}, {"clauses", std::move(cs)}};
}

template <class C>
json certificate_json(const C& c, const char* kind, const Matrix& map) {
  json shears = json::array();
  for (const auto& a : c.shears) shears.push_back(rational_json(a));
  return {{"format_version", kCertificateFormat},
          {"kind", kind},
          {"source", mixed_json(c.source)},
          {"target", orbit_json(c.target)},
          {"map", matrix_json(map)},
          {"weight", c.weight},
          {"shears", std::move(shears)},
          {"checks", report_to_json(c.checks)},
          {"target_report", report_to_json(c.target_report)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- reading

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

long read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t read_size(const json& j, const std::string& path) {
  long v = read_int(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a fraction string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Gauss read_scalar(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "expected a [re, im] pair");
    return {read_rational(j[0], path + "[0]"), read_rational(j[1], path + "[1]")};
  }
  return Gauss(read_rational(j, path));
}

const json& read_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Matrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  read_array(j, path);
  if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string rp = path + "[" + std::to_string(r) + "]";
    const json& row = read_array(j[r], rp);
    if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_scalar(row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

// Row count taken from the data.
Matrix read_rows(const json& j, const std::string& path, std::size_t cols) {
  return read_matrix(j, path, read_array(j, path).size(), cols);
}

Filtration read_filtration(const json& j, const std::string& path, std::size_t dim, Direction dir, const char* index) {
  read_array(j, path);
  std::map<int, Subspace> steps;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string sp = path + "[" + std::to_string(t) + "]";
    int k = static_cast<int>(read_int(field(j[t], sp, index), sp + "." + index));
    Matrix b = read_rows(field(j[t], sp, "basis"), sp + ".basis", dim);
    if (!steps.emplace(k, Subspace::span(b.row_list(), dim)).second) fail(sp, "duplicate index");
  }
  return Filtration(dim, dir, std::move(steps));
}

std::vector<Matrix> read_operators(const json& j, const std::string& path, std::size_t dim) {
  read_array(j, path);
  std::vector<Matrix> out;
  for (std::size_t t = 0; t < j.size(); ++t) out.push_back(read_matrix(j[t], path + "[" + std::to_string(t) + "]", dim, dim));
  return out;
}

Pairing read_pairing(const json& j, const std::string& path, std::size_t d) {
  Pairing p;
  p.twist = static_cast<int>(read_int(field(j, path, "twist"), path + ".twist"));
  p.symmetry = static_cast<int>(read_int(field(j, path, "symmetry"), path + ".symmetry"));
  const json& m = field(j, path, "matrix");
  p.matrix = read_matrix(m, path + ".matrix", d, d);
  return p;
}

void expect_header(const json& j, const char* format) {
  const json& v = field(j, "$", "format_version");
  if (!v.is_string() || v.get<std::string>() != format) fail("$.format_version", std::string("expected \"") + format + "\"");
  if (format == std::string(kDatumFormat)) {
    const json& f = field(j, "$", "field");
    if (!f.is_string() || f.get<std::string>() != "Q(i)") fail("$.field", "expected \"Q(i)\"");
  }
}

// Graded pairings go into the map; a "global" pairing (if any) is returned.
std::optional<Pairing> read_pairings(const json& j, const std::string& path, HodgeDatum* h, std::size_t dim) {
  read_array(j, path);
  std::optional<Pairing> global;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string pp = path + "[" + std::to_string(t) + "]";
    const json& w = field(j[t], pp, "weight");
    if (w.is_string()) {
      if (w.get<std::string>() != "global") fail(pp + ".weight", "expected an integer or \"global\"");
      if (global) fail(pp, "more than one global pairing");
      global = read_pairing(j[t], pp, dim);
      continue;
    }
    if (!h) fail(pp + ".weight", "graded pairings are not allowed here");
    int k = static_cast<int>(read_int(w, pp + ".weight"));
    std::size_t d = h->graded(k).dim();
    if (d == 0) throw ValidationError("pairing at weight " + std::to_string(k) + ": graded piece is zero");
    if (h->graded_pairings.count(k)) fail(pp, "duplicate pairing weight");
    h->graded_pairings[k] = read_pairing(j[t], pp, d);
  }
  return global;
}

HodgeDatum mixed_from(const json& j, std::optional<Pairing>* global = nullptr) {
  HodgeDatum h;
  h.dim = read_size(field(j, "$", "dim"), "$.dim");
  h.weight = read_filtration(field(j, "$", "weight_filtration"), "$.weight_filtration", h.dim, Direction::increasing, "k");
  h.hodge = read_filtration(field(j, "$", "hodge_filtration"), "$.hodge_filtration", h.dim, Direction::decreasing, "p");
  h.operators = read_operators(field(j, "$", "operators"), "$.operators", h.dim);
  h.twist_tag = static_cast<int>(read_int(field(j, "$", "twist_tag"), "$.twist_tag"));
  auto g = read_pairings(field(j, "$", "pairings"), "$.pairings", &h, h.dim);
  if (global) *global = g;
  else if (g) fail("$.pairings", "a mixed datum has no global pairing");
  return h;
}

OrbitDatum orbit_from(const json& j) {
  OrbitDatum o;
  o.dim = read_size(field(j, "$", "dim"), "$.dim");
  o.weight = static_cast<int>(read_int(field(j, "$", "weight"), "$.weight"));
  o.hodge = read_filtration(field(j, "$", "hodge_filtration"), "$.hodge_filtration", o.dim, Direction::decreasing, "p");
  o.operators = read_operators(field(j, "$", "operators"), "$.operators", o.dim);
  o.twist_tag = static_cast<int>(read_int(field(j, "$", "twist_tag"), "$.twist_tag"));
  auto g = read_pairings(field(j, "$", "pairings"), "$.pairings", nullptr, o.dim);
  if (!g) fail("$.pairings", "an orbit needs a global pairing");
  o.pairing = *g;
  return o;
}

PolarizedMixed polarized_from(const json& j) {
  PolarizedMixed p;
  std::optional<Pairing> g;
  p.mixed = mixed_from(j, &g);
  if (!g) fail("$.pairings", "missing global pairing");
  p.pairing = *g;
  p.n = read_matrix(field(j, "$", "monodromy"), "$.monodromy", p.mixed.dim, p.mixed.dim);
  p.weight = static_cast<int>(read_int(field(j, "$", "weight"), "$.weight"));
  return p;
}

VerdictReport report_from(const json& j, const std::string& path) {
  VerdictReport r;
  const json& v = field(j, path, "verdict");
  std::string s = v.is_string() ? v.get<std::string>() : "";
  if (s == "CERTIFIED") r.verdict = Verdict::certified;
  else if (s == "SUPPORTED") r.verdict = Verdict::supported;
  else if (s == "REFUTED") r.verdict = Verdict::refuted;
  else fail(path + ".verdict", "unknown verdict");
  const json& cs = read_array(field(j, path, "clauses"), path + ".clauses");
  for (std::size_t t = 0; t < cs.size(); ++t) {
    std::string cp = path + ".clauses[" + std::to_string(t) + "]";
    const json& name = field(cs[t], cp, "name");
    const json& passed = field(cs[t], cp, "passed");
    const json& detail = field(cs[t], cp, "detail");
    if (!name.is_string() || !passed.is_boolean() || !detail.is_string()) fail(cp, "malformed clause");
    r.add(name.get<std::string>(), passed.get<bool>(), detail.get<std::string>());
  }
  return r;
}

json sub_document(const json& j, const char* key, const char* kind) {
  json s = field(j, "$", key);
  std::string path = std::string("$.") + key;
  if (!s.is_object()) fail(path, "expected an object");
  const json& k = field(s, path, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) fail(path + ".kind", std::string("expected \"") + kind + "\"");
  return s;
}

template <class C>
C certificate_from(const json& j, Matrix C::*map) {
  C c;
  json src = sub_document(j, "source", "mixed");
  json tgt = sub_document(j, "target", "orbit");
  expect_header(src, kDatumFormat);
  expect_header(tgt, kDatumFormat);
  c.source = mixed_from(src);
  c.target = orbit_from(tgt);
  validate(c.source);
  validate(c.target);
  bool inj = std::is_same_v<C, EmbeddingCertificate>;
  std::size_t rows = inj ? c.target.dim : c.source.dim, cols = inj ? c.source.dim : c.target.dim;
  c.*map = read_matrix(field(j, "$", "map"), "$.map", rows, cols);
  c.weight = static_cast<int>(read_int(field(j, "$", "weight"), "$.weight"));
  const json& sh = read_array(field(j, "$", "shears"), "$.shears");
  for (std::size_t t = 0; t < sh.size(); ++t) c.shears.push_back(read_rational(sh[t], "$.shears[" + std::to_string(t) + "]"));
  if (j.contains("checks")) c.checks = report_from(j["checks"], "$.checks");
  if (j.contains("target_report")) c.target_report = report_from(j["target_report"], "$.target_report");
  return c;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

}  // namespace

std::string serialize(const HodgeDatum& h) { return dump(mixed_json(h)); }
std::string serialize(const OrbitDatum& o) { return dump(orbit_json(o)); }
std::string serialize(const PolarizedMixed& p) { return dump(polarized_json(p)); }
std::string serialize(const EmbeddingCertificate& c) { return dump(certificate_json(c, "embedding", c.injection)); }
std::string serialize(const SurjectionCertificate& c) { return dump(certificate_json(c, "surjection", c.surjection)); }
std::string serialize(const Document& d) {
  return std::visit([](const auto& x) { return serialize(x); }, d);
}

std::string serialize(const Filtration& f) {
  return dump(filtration_json(f, f.direction() == Direction::increasing ? "k" : "p"));
}

std::string kind_of(const Document& d) {
  switch (d.index()) {
    case 0:
      return "mixed";
    case 1:
      return "orbit";
    case 2:
      return "polarized-mixed";
    case 3:
      return "embedding";
    default:
      return "surjection";
  }
}

Document parse_document(const std::string& text) {
  json j = parse_json(text);
  const json& v = field(j, "$", "format_version");
  if (v.is_string() && v.get<std::string>() == kCertificateFormat) {
    const json& k = field(j, "$", "kind");
    std::string kind = k.is_string() ? k.get<std::string>() : "";
    if (kind == "embedding") return certificate_from<EmbeddingCertificate>(j, &EmbeddingCertificate::injection);
    if (kind == "surjection") return certificate_from<SurjectionCertificate>(j, &SurjectionCertificate::surjection);
    fail("$.kind", "expected \"embedding\" or \"surjection\"");
  }
  expect_header(j, kDatumFormat);
  const json& k = field(j, "$", "kind");
  std::string kind = k.is_string() ? k.get<std::string>() : "";
  if (kind == "mixed") {
    HodgeDatum h = mixed_from(j);
    validate(h);
    return h;
  }
  if (kind == "orbit") {
    OrbitDatum o = orbit_from(j);
    validate(o);
    return o;
  }
  if (kind == "polarized-mixed") {
    PolarizedMixed p = polarized_from(j);
    validate(p.mixed);
    return p;
  }
  fail("$.kind", "expected \"mixed\", \"orbit\" or \"polarized-mixed\"");
}

HodgeDatum parse_mixed(const std::string& text) {
  Document d = parse_document(text);
  if (auto* h = std::get_if<HodgeDatum>(&d)) return *h;
  throw ParseError("$.kind: expected \"mixed\", found \"" + kind_of(d) + "\"");
}

OrbitDatum parse_orbit(const std::string& text) {
  Document d = parse_document(text);
  if (auto* o = std::get_if<OrbitDatum>(&d)) return *o;
  throw ParseError("$.kind: expected \"orbit\", found \"" + kind_of(d) + "\"");
}

std::string report_json(const VerdictReport& r) { return dump(report_to_json(r)); }

std::string report_text(const VerdictReport& r) {
  std::string out = "verdict: " + to_string(r.verdict) + "\n";
  for (const auto& c : r.clauses) {
    out += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace hodge
