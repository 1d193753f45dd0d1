#include <doctest.h>

#include "hodge/catalog.hpp"
#include "hodge/error.hpp"
#include "hodge/extension.hpp"
#include "hodge/functors.hpp"
#include "hodge/verifiers.hpp"
#include "support.hpp"

using namespace hodge;

namespace {

std::map<std::pair<int, int>, std::size_t> hodge_numbers(const HodgeDatum& h) {
  std::map<std::pair<int, int>, std::size_t> out;
  for (int w : h.weights()) {
    auto dec = hodge_decomposition(h.hodge.induced(h.graded(w)), w);
    REQUIRE(dec.has_value());
    for (auto& [p, piece] : dec->pieces) out[{p, w - p}] = piece.dim();
  }
  return out;
}

ExtensionClass kummer_class(const Gauss& z, long n = 1) {
  HodgeDatum sub = tate(1);
  sub.operators = {Matrix(1, 1)};
  return normalize_class(sub, Vector{z}, {Vector{Gauss(n)}});
}

}  // namespace

TEST_CASE("filtration stores jumps and evaluates steps") {
  Filtration w(3, Direction::increasing,
               {{-2, Subspace::span(Matrix{{1, 0, 0}})}, {0, Subspace::full(3)}});
  CHECK(w.at(-3).dim() == 0);
  CHECK(w.at(-2).dim() == 1);
  CHECK(w.at(-1).dim() == 1);
  CHECK(w.at(5).dim() == 3);
  CHECK(w.graded(0).dim() == 2);
  CHECK(w.graded(-1).dim() == 0);
  CHECK(w.reindexed(2).at(0).dim() == 1);
  CHECK(w.reindexed(2).lowest() == 0);
  Filtration f(2, Direction::decreasing, {{0, Subspace::full(2)}, {1, Subspace::span(Matrix{{1, 0}})}});
  CHECK(f.at(-4).dim() == 2);
  CHECK(f.at(1).dim() == 1);
  CHECK(f.at(2).dim() == 0);
  CHECK(f.is_rational());
  CHECK_FALSE(Filtration(2, Direction::decreasing,
                         {{0, Subspace::full(2)}, {1, Subspace::span(Matrix{{Gauss(0, 1), Gauss(1)}})}})
                  .is_rational());
  // not nested
  CHECK_THROWS_AS(Filtration(2, Direction::increasing,
                             {{0, Subspace::span(Matrix{{1, 0}})}, {1, Subspace::span(Matrix{{0, 1}})},
                              {2, Subspace::full(2)}}),
                  ValidationError);
  // last step short of the ambient
  CHECK_THROWS_AS(Filtration(2, Direction::increasing, {{0, Subspace::span(Matrix{{1, 0}})}}), ValidationError);
}

TEST_CASE("tate objects and twists") {
  HodgeDatum t = tate(2);
  CHECK(t.weights() == std::vector<int>{-4});
  CHECK(hodge_numbers(t) == std::map<std::pair<int, int>, std::size_t>{{{-2, -2}, 1}});
  HodgeDatum e = tate_twist(gen_elliptic_curve(), 1);
  CHECK(e.weights() == std::vector<int>{-1});
  CHECK(hodge_numbers(e) == std::map<std::pair<int, int>, std::size_t>{{{0, -1}, 1}, {{-1, 0}, 1}});
  CHECK(tate_twist(tate_twist(e, 3), -3) == e);
  CHECK(is_positive(check_mixed_orbit(e).verdict));
}

TEST_CASE("duality is an involution and reverses weights") {
  std::vector<HodgeDatum> samples{gen_kummer(Gauss(0, 1)), gen_three_weight(Gauss(1, 1), 2, Gauss(0, 1), true),
                                  gen_elliptic_curve(), gen_random_mhs(3, {{{-2, 1}, {-1, 1}, {0, 1}}, false})};
  for (const auto& h : samples) {
    HodgeDatum d = dual(h);
    CHECK_NOTHROW(validate(d));
    CHECK(dual(d) == h);
    std::vector<int> neg;
    for (int w : h.weights()) neg.insert(neg.begin(), -w);
    CHECK(d.weights() == neg);
    for (auto [pq, n] : hodge_numbers(h)) CHECK(hodge_numbers(d).at({-pq.first, -pq.second}) == n);
    CHECK(is_positive(check_mixed_orbit(d).verdict) == is_positive(check_mixed_orbit(h).verdict));
  }
}

TEST_CASE("tensor and direct sum dimensions") {
  HodgeDatum k = gen_kummer(Gauss(0, 1));
  HodgeDatum t = tensor(k, k);
  CHECK(t.dim == 4);
  CHECK(t.weights() == std::vector<int>{-4, -2, 0});
  CHECK(t.graded(-2).dim() == 2);
  CHECK_NOTHROW(validate(t));
  CHECK(is_positive(check_mixed_orbit(t).verdict));
  // Leibniz rule
  Matrix n = k.operators[0], id = Matrix::identity(2);
  CHECK(t.operators[0] == kron(n, id) + kron(id, n));
  HodgeDatum u = tensor(unit_datum(), k);
  CHECK(u.hodge == k.hodge);
  CHECK(u.operators == k.operators);
  HodgeDatum s = direct_sum(k, k);
  CHECK(s.dim == 4);
  CHECK(s.graded(0).dim() == 2);
  CHECK_THROWS_AS(direct_sum(k, gen_kummer(Gauss(0, 1), 2)), ValidationError);
  CHECK(hodge_numbers(tensor(gen_elliptic_curve(), gen_elliptic_curve())) ==
        std::map<std::pair<int, int>, std::size_t>{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
}

TEST_CASE("graded pieces and operator sums") {
  HodgeDatum h = gen_three_weight(Gauss(1, 1), 2, Gauss(0, 1));
  HodgeDatum g = graded_piece(h, -1);
  CHECK(g.dim == 2);
  CHECK(g.weights() == std::vector<int>{-1});
  HodgeDatum k = gen_kummer(Gauss(0, 1), 2);
  HodgeDatum m = sum_operators(k, 0, 1);
  REQUIRE(m.operators.size() == 1);
  CHECK(m.operators[0] == k.operators[0] + k.operators[1]);
  CHECK_THROWS_AS(sum_operators(k, 0, 0), ValidationError);
  CHECK_THROWS_AS(sum_operators(k, 0, 5), ValidationError);
}

TEST_CASE("morphism defects") {
  HodgeDatum k = gen_kummer(Gauss(0, 1));
  CHECK_FALSE(morphism_defect(k, k, Matrix::identity(2)).has_value());
  CHECK_FALSE(morphism_defect(k, k, Matrix(2, 2)).has_value());
  // inclusion of W_{-2} is a morphism Q(1) -> Kummer
  HodgeDatum q1 = tate(1);
  q1.operators = {Matrix(1, 1)};
  CHECK_FALSE(morphism_defect(q1, k, Matrix{{1}, {0}}).has_value());
  // onto the Q(1) line from gr_0 is not W-compatible
  CHECK(morphism_defect(k, q1, Matrix{{0, 1}}).has_value());
  // different extension parameter: F is not preserved
  CHECK(morphism_defect(k, gen_kummer(Gauss(1, 1)), Matrix::identity(2)).has_value());
}

TEST_CASE("pushout along an isomorphism is the target") {
  HodgeDatum k = gen_kummer(Gauss(0, 1));
  HodgeDatum q1 = tate(1);
  q1.operators = {Matrix(1, 1)};
  Pushout p = pushout(q1, k, q1, Matrix{{1}, {0}}, Matrix::identity(1));
  CHECK(p.datum.dim == 2);
  CHECK_NOTHROW(validate(p.datum));
  CHECK_FALSE(morphism_defect(k, p.datum, p.from_x).has_value());
  CHECK_FALSE(morphism_defect(q1, p.datum, p.from_y).has_value());
  CHECK(is_positive(check_mixed_orbit(p.datum).verdict));
}

TEST_CASE("extension classes of Kummer type") {
  CHECK(kummer_class(Gauss(0, 1)) == kummer_class(Gauss(frac(7, 2), 1)));
  CHECK_FALSE(kummer_class(Gauss(0, 1)) == kummer_class(Gauss(0, 2)));
  HodgeDatum sub = tate(1);
  sub.operators = {Matrix(1, 1)};
  ExtensionClass c = kummer_class(Gauss(0, 1));
  Extension e = extension_from_class(sub, c);
  CHECK_NOTHROW(validate(e.total));
  CHECK(carlson_class(e) == c);
  CHECK(is_positive(check_mixed_orbit(e.total).verdict));
  // Baer sum adds classes, inverse negates
  Extension f = extension_from_class(sub, kummer_class(Gauss(1, 3)));
  CHECK(carlson_class(baer_sum(e, f)) == kummer_class(Gauss(1, 4), 2));
  CHECK(carlson_class(baer_sum(e, inverse_extension(e))).is_zero());
  CHECK_THROWS_AS(carlson_class(Extension{tate(0), tate(0), Matrix{{1}}, Vector{Gauss(1)}}), ValidationError);
}

TEST_CASE("extension classes over random structures") {
  testing::Rng rng(17);
  for (unsigned seed = 0; seed < 8; ++seed) {
    HodgeDatum sub = gen_random_mhs(seed, {{{-2, 1}, {-1, 1}}, false});
    Vector z(sub.dim);
    for (auto& x : z) x = rng.gauss();
    ExtensionClass c = normalize_class(sub, z, {});
    Extension e = extension_from_class(sub, c);
    CHECK(carlson_class(e) == c);
    CHECK(carlson_class(inverse_extension(e)) == normalize_class(sub, scaled(z, Gauss(-1)), {}));
    // pushing along the identity and lifting along the identity change nothing
    CHECK(push_class(c, sub, Matrix::identity(sub.dim)) == c);
    CHECK(lift_class(c, sub, sub, Matrix::identity(sub.dim)) == c);
  }
}
