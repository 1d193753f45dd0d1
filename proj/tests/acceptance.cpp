// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "hodge/catalog.hpp"
#include "hodge/constructions.hpp"
#include "hodge/document.hpp"
#include "hodge/error.hpp"
#include "hodge/functors.hpp"
#include "hodge/monodromy.hpp"
#include "support.hpp"

using namespace hodge;

namespace {

struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) ++passed;
    else if (notes.size() < 5) notes.push_back(what);
  }
  bool ok() const { return total > 0 && passed == total; }
};

Matrix random_nilpotent(testing::Rng& rng, std::size_t d) {
  Matrix j(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) j(i, i + 1) = rng.integer(0, 1);
  Matrix g = rng.invertible(d);
  return g * j * inverse(g);
}

std::vector<CatalogEntry> entries() { return catalog(); }

// ---- criteria

Tally monodromy_axioms() {
  Tally t;
  testing::Rng rng(1001);
  for (int s = 0; s < 200; ++s) {
    std::size_t d = 1 + static_cast<std::size_t>(s % 8);
    Matrix n = random_nilpotent(rng, d);
    Filtration w = weight_monodromy(n).filtration;
    Matrix g = rng.invertible(d);
    Filtration wg = weight_monodromy(g * n * inverse(g)).filtration;
    t.check(oracle_monodromy_axioms(n, w), "axioms, case " + std::to_string(s));
    t.check(wg == w.transformed(g), "equivariance, case " + std::to_string(s));
  }
  return t;
}

Tally relative_degeneration() {
  Tally t;
  testing::Rng rng(2002);
  for (int s = 0; s < 100; ++s) {
    std::size_t d = 1 + static_cast<std::size_t>(s % 7);
    int w = static_cast<int>(rng.integer(-3, 3));
    Matrix n = random_nilpotent(rng, d);
    auto m = relative_monodromy(n, pure_weight(d, w));
    t.check(m && *m == shift(weight_monodromy(n), w).filtration, "case " + std::to_string(s));
  }
  return t;
}

Tally base_case_agreement() {
  Tally t;
  Policy policy;
  std::size_t pos = 0, neg = 0;
  for (const auto& e : entries()) {
    if (!e.orbit || e.orbit->operators.size() != 1 || e.orbit->dim > 6) continue;
    bool exact = is_positive(check_pure_orbit(*e.orbit, policy).verdict);
    bool sampled = sampled_orbit_membership(*e.orbit, sample_points(1, policy.grid)).all_passed();
    (exact ? pos : neg)++;
    t.check(exact == sampled && exact == e.positive, e.name);
  }
  t.check(pos >= 5 && neg >= 5, "needs at least five orbits of each sign");
  t.notes.insert(t.notes.begin(), std::to_string(pos) + " positive, " + std::to_string(neg) + " negative");
  return t;
}

Tally shear_harness() {
  Tally t;
  Policy policy;
  for (const auto& e : entries()) {
    if (!e.orbit || e.orbit->operators.size() > 3) continue;
    for (const Rational a : {Rational(8), Rational(16)}) {
      ShearReport r = shear_equivalence(*e.orbit, a, policy);
      t.check(r.agree && is_positive(r.left.verdict) == e.positive, e.name + " at a = " + to_string(a));
    }
  }
  return t;
}

// (a) and (b) against W(N_0) computed and checked here.
bool embedding_by_hand(const HodgeDatum& h, const EmbeddingCertificate& c) {
  const Matrix& i = c.injection;
  if (rank(i) != h.dim) return false;
  const Matrix& n0 = c.target.operators[0];
  Filtration m = shift(weight_monodromy(n0), c.target.weight).filtration;
  if (!oracle_monodromy_axioms(n0, m, c.target.weight)) return false;
  Subspace img = image(i);
  for (int k = h.weight.lowest() - 2; k <= h.weight.highest() + 2; ++k)
    if (apply(i, h.weight.at(k)) != intersect(img, m.at(k))) return false;
  for (int p = h.hodge.lowest() - 1; p <= h.hodge.highest() + 1; ++p)
    if (preimage(i, c.target.hodge.at(p)) != h.hodge.at(p)) return false;
  return true;
}

Tally embedding_pipeline() {
  Tally t;
  bool gap = false, three = false;
  for (const auto& e : entries()) {
    if (!e.mixed || !e.positive) continue;
    const HodgeDatum& h = *e.mixed;
    try {
      EmbeddingCertificate c = embed_general(h);
      t.check(c.checks.all_passed() && is_positive(c.target_report.verdict), e.name + ": certificate");
      t.check(embedding_by_hand(h, c), e.name + ": independent (a), (b)");
      t.check(c.target.weight == h.weights().back(), e.name + ": weight");
      t.check(c.target.operators.size() == h.operators.size() + 1, e.name + ": one new operator");
      auto ws = h.weights();
      if (ws.size() == 2 && ws[1] - ws[0] == 2) gap = true;
      if (ws.size() == 3 && h.dim == 4) three = true;
    } catch (const HodgeError& err) {
      t.check(false, e.name + ": " + err.what());
    }
  }
  t.check(gap, "weight-gap Kummer datum present");
  t.check(three, "three-weight dim-4 datum present");
  return t;
}

Tally duality() {
  Tally t;
  std::vector<HodgeDatum> inputs{tate(1)};
  for (unsigned s = 0; s < 10; ++s) inputs.push_back(gen_random_mhs(s, {{{-2, 1}, {-1, 1}}, false}));
  for (unsigned s = 0; s < 4; ++s) inputs.push_back(gen_random_mhs(100 + s, {{{-2, 1}, {-1, 2}}, false}));
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    std::string tag = "input " + std::to_string(k);
    try {
      TildeH th = build_tilde_H(inputs[k]);
      DualityForm d = verify_duality(th);
      Vector e = th.extension.unit_lift;
      t.check(d.unique(), tag + ": uniqueness");
      t.check(d.antisymmetric && rank(d.form) == d.form.rows(), tag + ": perfect antisymmetric");
      t.check(bilinear(e, d.form, th.bottom) == Gauss(1), tag + ": gr_0 and gr_-2 normalization");
      t.check(th.quotient_matches, tag + ": quotient class");
    } catch (const HodgeError& err) {
      t.check(false, tag + ": " + err.what());
    }
  }
  return t;
}

Tally identity_composites() {
  Tally t;
  testing::Rng rng(3003);
  for (int s = 0; s < 50; ++s) {
    std::size_t b = 1 + static_cast<std::size_t>(s % 5);
    t.check(identity_composite(rng.invertible(b)) == Matrix::identity(b), "case " + std::to_string(s));
  }
  return t;
}

Tally surjections() {
  Tally t;
  for (const auto& e : entries()) {
    if (!e.mixed) continue;
    if (!e.positive) {
      bool refused = false;
      try {
        surject_from_pure(*e.mixed);
      } catch (const ConstructionError&) {
        refused = true;
      }
      t.check(refused, e.name + ": no certificate for a negative");
      continue;
    }
    try {
      SurjectionCertificate s = surject_from_pure(*e.mixed);
      VerdictReport src = check_pure_orbit(s.target);
      t.check(s.checks.all_passed(), e.name + ": certificate");
      t.check(is_positive(src.verdict), e.name + ": source is an orbit");
      if (s.target.operators.size() == 1) t.check(src.verdict == Verdict::certified, e.name + ": certified source");
    } catch (const HodgeError& err) {
      t.check(false, e.name + ": " + err.what());
    }
  }
  return t;
}

Tally round_trips() {
  Tally t;
  for (const auto& e : entries()) {
    if (!e.orbit || !e.positive) continue;
    try {
      PolarizedMixed p = orbit_to_mixed(*e.orbit);
      OrbitDatum back = mixed_to_orbit(p).orbit;
      t.check(back == *e.orbit, e.name + ": orbit side");
      t.check(orbit_to_mixed(back) == p, e.name + ": mixed side");
    } catch (const HodgeError& err) {
      t.check(false, e.name + ": " + err.what());
    }
  }
  return t;
}

struct Step {
  int expected;
  std::vector<std::string> args;
};

Tally io() {
  Tally t;
  for (const auto& e : entries()) {
    try {
      if (e.mixed) {
        std::string s = serialize(*e.mixed);
        t.check(serialize(parse_mixed(s)) == s, e.name + ": mixed document");
      }
      if (e.orbit) {
        std::string s = serialize(*e.orbit);
        t.check(serialize(parse_orbit(s)) == s, e.name + ": orbit document");
      }
    } catch (const HodgeError& err) {
      t.check(false, e.name + ": " + err.what());
    }
  }

  auto dir = std::filesystem::temp_directory_path() / ("hodge-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto f = [&](const char* name) { return (dir / name).string(); };
  std::vector<Step> session{
      {0, {"catalog", "--name", "elliptic_orbit", "--output", f("eo.json")}},
      {0, {"check-orbit", "--input", f("eo.json")}},
      {0, {"catalog", "--name", "kummer_i", "--output", f("k.json")}},
      {0, {"embed", "--input", f("k.json"), "--output", f("cert.json")}},
      {0, {"verify-certificate", "--input", f("cert.json")}},
      {0, {"surject", "--input", f("k.json"), "--output", f("surj.json")}},
      {0, {"verify-certificate", "--input", f("surj.json")}},
      {0, {"catalog", "--name", "kummer_flipped", "--output", f("kf.json")}},
      {1, {"check-mhs", "--input", f("kf.json")}},
      {1, {"embed", "--input", f("kf.json")}},
      {0, {"catalog", "--name", "jordan3_orbit", "--output", f("j.json")}},
      {0, {"orbit-to-mixed", "--input", f("j.json"), "--output", f("pm.json")}},
      {0, {"mixed-to-orbit", "--input", f("pm.json")}},
      {0, {"monodromy", "--input", f("j.json")}},
      {0, {"prop44", "--input", f("j.json")}},
      {0, {"catalog", "--name", "inadmissible", "--output", f("ia.json")}},
      {1, {"rel-monodromy", "--input", f("ia.json")}},
      {2, {"embed", "--input", f("j.json")}},
      {2, {"check-orbit", "--input", f("missing.json")}},
      {2, {"no-such-command"}},
  };
  for (const auto& s : session) {
    std::vector<std::string> argv{"hodge"};
    argv.insert(argv.end(), s.args.begin(), s.args.end());
    std::ostringstream out, err;
    int code = cli::run_command(argv, out, err);
    t.check(code == s.expected, s.args[0] + " exited " + std::to_string(code));
  }
  std::filesystem::remove_all(dir);
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Tally()> run;
  };
  std::vector<Criterion> criteria{
      {1, "monodromy axioms and equivariance", monodromy_axioms},
      {2, "relative monodromy degeneration", relative_degeneration},
      {3, "exact base case agrees with sampling", base_case_agreement},
      {4, "shear equivalence harness", shear_harness},
      {5, "embedding pipeline with independent (a), (b)", embedding_pipeline},
      {6, "duality form existence and uniqueness", duality},
      {7, "identity composite", identity_composites},
      {8, "surjections from pure orbits", surjections},
      {9, "orbit and mixed round trips", round_trips},
      {10, "document round trip and CLI session", io},
  };
  bool all = true;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.check(false, std::string("uncaught: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && t.ok();
    std::cout << "criterion " << c.id << ": " << (t.ok() ? "PASS" : "FAIL") << "  " << c.name << " (" << t.passed
              << "/" << t.total << " checks, " << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)";
    for (const auto& n : t.notes) std::cout << "; " << n;
    std::cout << "\n";
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << total << " s\n";
  return all ? 0 : 1;
}
