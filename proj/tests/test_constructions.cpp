#include <doctest.h>

#include "hodge/catalog.hpp"
#include "hodge/constructions.hpp"
#include "hodge/error.hpp"
#include "hodge/functors.hpp"
#include "hodge/monodromy.hpp"
#include "support.hpp"

using namespace hodge;

namespace {

std::vector<CatalogEntry> mixed_positives() {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog())
    if (e.mixed && e.positive) out.push_back(e);
  return out;
}

// Independent evaluation of (a) and (b) from the raw data.
void check_embedding_by_hand(const HodgeDatum& h, const EmbeddingCertificate& c) {
  const Matrix& i = c.injection;
  REQUIRE(rank(i) == h.dim);
  Matrix n0 = c.target.operators[0];
  auto m = shift(weight_monodromy(n0), c.target.weight).filtration;
  CHECK(oracle_monodromy_axioms(n0, m, c.target.weight));
  Subspace img = image(i);
  for (int k = h.weight.lowest() - 2; k <= h.weight.highest() + 2; ++k) {
    INFO(k);
    CHECK(apply(i, h.weight.at(k)).dim() == intersect(img, m.at(k)).dim());
    CHECK(m.at(k).contains(apply(i, h.weight.at(k))));
  }
  for (int p = h.hodge.lowest() - 1; p <= h.hodge.highest() + 1; ++p) {
    Subspace back = preimage(i, c.target.hodge.at(p));
    CHECK(back == h.hodge.at(p));
  }
  for (std::size_t j = 0; j < h.operators.size(); ++j) CHECK(c.target.operators[j + 1] * i == i * h.operators[j]);
  CHECK((n0 * i).is_zero());
}

}  // namespace

TEST_CASE("tilde H of Q(1)") {
  TildeH t = build_tilde_H(tate(1));
  const HodgeDatum& th = t.extension.total;
  CHECK(th.dim == 2);
  CHECK(th.weights() == std::vector<int>{-2, 0});
  CHECK(t.quotient_matches);
  CHECK(t.n.pow(2).is_zero());
  CHECK(rank(th.graded(0).induced_map_to(t.n, th.graded(-2))) == 1);
  DualityForm d = verify_duality(t);
  CHECK(d.unique());
  CHECK(d.antisymmetric);
  // wedge product: <e, g> = 1 for the unit lift e and the generator g
  CHECK(d.form == Matrix{{0, -1}, {1, 0}});
  CHECK(check_pure_orbit(tilde_orbit(t, d)).verdict == Verdict::certified);
}

TEST_CASE("tilde H over an elliptic piece") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    HodgeDatum h = gen_random_mhs(seed, {{{-2, 1}, {-1, 1}}, false});
    TildeH t = build_tilde_H(h);
    CHECK(t.extension.total.dim == 4);
    CHECK(t.extension.total.weights() == std::vector<int>{-2, -1, 0});
    CHECK(t.quotient_matches);
    CHECK(t.n.pow(2).is_zero());
    DualityForm d = verify_duality(t);
    CHECK(d.unique());
    CHECK(d.antisymmetric);
    CHECK(is_positive(check_pure_orbit(tilde_orbit(t, d)).verdict));
  }
}

TEST_CASE("build_tilde_H rejects bad input") {
  CHECK_THROWS_AS(build_tilde_H(tate(0)), ValidationError);
  CHECK_THROWS_AS(build_tilde_H(direct_sum(tate(1), tate(1))), ValidationError);
  CHECK_THROWS_AS(build_tilde_H(gen_random_mhs(0, {{{-1, 1}}, false})), ValidationError);
}

TEST_CASE("identity composite for random bases") {
  testing::Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    std::size_t b = 1 + static_cast<std::size_t>(t % 5);
    CHECK(identity_composite(rng.invertible(b)) == Matrix::identity(b));
  }
}

TEST_CASE("two-weight base cases") {
  HodgeDatum e = gen_elliptic_curve();
  EmbeddingCertificate c = embed_two_weights(e);
  CHECK(c.injection == Matrix::identity(2));
  CHECK(c.target.operators.size() == 1);
  CHECK(c.target.operators[0].is_zero());
  CHECK(c.checks.all_passed());

  HodgeDatum q1 = tate(1);
  EmbeddingCertificate t = embed_two_weights(q1, -1);
  CHECK(t.target.dim == 2);
  CHECK(t.target.weight == -1);
  CHECK(t.checks.all_passed());
  CHECK(t.target_report.verdict == Verdict::certified);
  CHECK_THROWS_AS(embed_two_weights(gen_kummer(Gauss(0, 1)), 0), ValidationError);
}

TEST_CASE("embedding pipeline on the catalog") {
  for (const auto& e : mixed_positives()) {
    INFO(e.name);
    const HodgeDatum& h = *e.mixed;
    EmbeddingCertificate c = embed_general(h);
    CHECK(c.checks.all_passed());
    for (std::string tag : {"(i)", "(ii)", "(a)", "(b)"}) CHECK(c.condition(tag));
    CHECK(c.target.weight == h.weights().back());
    CHECK(c.target.operators.size() == h.operators.size() + 1);
    CHECK(is_positive(c.target_report.verdict));
    if (h.operators.empty()) CHECK(c.target_report.verdict == Verdict::certified);
    check_embedding_by_hand(h, c);
    CHECK(verify_embedding(h, c.target, c.injection).all_passed());
  }
}

TEST_CASE("two-weight inputs delegate") {
  HodgeDatum h = gen_random_mhs(4, {{{-1, 1}, {0, 1}}, false});
  EmbeddingCertificate a = embed_general(h), b = embed_two_weights(h);
  CHECK(a.target == b.target);
  CHECK(a.injection == b.injection);
}

TEST_CASE("tampered certificates fail") {
  HodgeDatum h = gen_kummer(Gauss(0, 1));
  EmbeddingCertificate c = embed_general(h);
  Matrix bad = c.injection;
  bad(0, 0) += 1;
  CHECK_FALSE(verify_embedding(h, c.target, bad).all_passed());
  OrbitDatum t = c.target;
  t.operators[0] = t.operators[0] * Gauss(0);
  CHECK_FALSE(verify_embedding(h, t, c.injection).all_passed());
  HodgeDatum other = gen_kummer(Gauss(1, 1));
  CHECK_FALSE(verify_embedding(other, c.target, c.injection).all_passed());
}

TEST_CASE("negatives produce no certificate") {
  for (const auto& e : catalog()) {
    if (!e.mixed || e.positive) continue;
    INFO(e.name);
    CHECK_THROWS_AS(embed_general(*e.mixed), ConstructionError);
    CHECK_THROWS_AS(surject_from_pure(*e.mixed), ConstructionError);
  }
}

TEST_CASE("surjections from pure orbits") {
  for (const auto& e : mixed_positives()) {
    INFO(e.name);
    const HodgeDatum& h = *e.mixed;
    SurjectionCertificate s = surject_from_pure(h);
    CHECK(s.checks.all_passed());
    CHECK(rank(s.surjection) == h.dim);
    CHECK(s.target.weight == h.weights().front());
    CHECK(is_positive(s.target_report.verdict));
    if (h.operators.empty()) CHECK(s.target_report.verdict == Verdict::certified);
  }
  HodgeDatum e = gen_elliptic_curve();
  CHECK(surject_from_pure(e).surjection == Matrix::identity(2));
  CHECK(surject_from_pure(gen_kummer(Gauss(0, 1))).target.dim >= 2);
}

TEST_CASE("double dual round trip") {
  for (const HodgeDatum& h : {gen_kummer(Gauss(0, 1)), gen_three_weight(Gauss(1, 1), 2, Gauss(0, 1))}) {
    EmbeddingCertificate c = embed_general(h);
    SurjectionCertificate s = surject_from_pure(dual(h));
    CHECK(s.target == dual_orbit(c.target));
    CHECK(s.surjection == c.injection.transpose());
    CHECK(dual_orbit(dual_orbit(c.target)) == c.target);
  }
}

TEST_CASE("orbit and mixed sides correspond") {
  for (const auto& e : catalog()) {
    if (!e.orbit) continue;
    INFO(e.name);
    const OrbitDatum& o = *e.orbit;
    if (e.positive) {
      PolarizedMixed p = orbit_to_mixed(o);
      CHECK_NOTHROW(validate(p.mixed));
      OrbitFromMixed back = mixed_to_orbit(p);
      CHECK(back.orbit == o);
      CHECK(is_positive(back.report.verdict));
      CHECK(orbit_to_mixed(back.orbit) == p);
    } else {
      CHECK_THROWS_AS(orbit_to_mixed(o), ConstructionError);
    }
  }
}

TEST_CASE("elliptic degeneration gives a Kummer-type structure") {
  PolarizedMixed p = orbit_to_mixed(gen_elliptic_orbit());
  CHECK(p.mixed.weights() == std::vector<int>{0, 2});
  CHECK(p.mixed.operators.empty());
  CHECK(is_positive(check_mixed_orbit(p.mixed).verdict));
  CHECK(polarized_mixed_checks(p).all_passed());

  OrbitDatum pure = gen_elliptic_orbit(Gauss(0, -1));
  pure.operators.clear();
  PolarizedMixed q = orbit_to_mixed(pure);
  CHECK(q.mixed.weights() == std::vector<int>{1});
  CHECK(mixed_to_orbit(q).report.verdict == Verdict::certified);
}

TEST_CASE("condition failures are named") {
  try {
    orbit_to_mixed(negate_pairing(gen_elliptic_orbit()));
    FAIL("expected an error");
  } catch (const ConstructionError& e) {
    CHECK(e.stage().find("condition (2)") != std::string::npos);
  }
  PolarizedMixed p = orbit_to_mixed(gen_jordan3_orbit(Gauss(1, 1)));
  p.pairing.matrix = p.pairing.matrix * Gauss(-1);
  try {
    mixed_to_orbit(p);
    FAIL("expected an error");
  } catch (const ConstructionError& e) {
    CHECK(e.stage().find("condition (2)") != std::string::npos);
  }
  PolarizedMixed q = orbit_to_mixed(gen_jordan3_orbit(Gauss(1, 1)));
  q.mixed.weight = q.mixed.weight.reindexed(2);
  try {
    mixed_to_orbit(q);
    FAIL("expected an error");
  } catch (const ConstructionError& e) {
    CHECK(e.stage().find("condition (1)") != std::string::npos);
  }
}
