#include <doctest.h>

#include "hodge/monodromy.hpp"
#include "support.hpp"

using namespace hodge;
using testing::Rng;

namespace {

Matrix jordan(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return m;
}

// W_k = sum over j >= max(0, -k) of ker N^{k+j+1} cap im N^j.
Subspace oracle_step(const Matrix& n, int k) {
  std::size_t d = n.rows();
  Subspace out = Subspace::zero(d);
  for (int j = std::max(0, -k); j <= static_cast<int>(d); ++j) {
    int e = k + j + 1;
    if (e <= 0) continue;
    out = sum(out, intersect(kernel(n.pow(e)), image(n.pow(j))));
  }
  return out;
}

Matrix random_nilpotent(Rng& rng, std::size_t d) {
  Matrix j(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) j(i, i + 1) = rng.integer(0, 1);
  Matrix g = rng.invertible(d);
  return g * j * inverse(g);
}

}  // namespace

TEST_CASE("weight monodromy examples") {
  auto w0 = weight_monodromy(Matrix(2, 2)).filtration;
  CHECK(w0.at(-1).is_zero());
  CHECK(w0.at(0).is_full());
  auto w2 = weight_monodromy(jordan(2)).filtration;
  Subspace e1 = Subspace::span(Matrix{{1, 0}});
  CHECK(w2.at(-2).is_zero());
  CHECK(w2.at(-1) == e1);
  CHECK(w2.at(0) == e1);
  CHECK(w2.at(1).is_full());
  auto w3 = weight_monodromy(jordan(3)).filtration;
  CHECK(w3.at(-3).is_zero());
  CHECK(w3.at(-2) == Subspace::span(Matrix{{1, 0, 0}}));
  CHECK(w3.at(-1) == w3.at(-2));
  CHECK(w3.at(0) == Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}}));
  CHECK(w3.at(1) == w3.at(0));
  CHECK(w3.at(2).is_full());
  CHECK_THROWS(weight_monodromy(Matrix::identity(2)));
}

TEST_CASE("shift examples") {
  auto m = weight_monodromy(jordan(2));
  CHECK(shift(m, 0).filtration == m.filtration);
  CHECK(shift(shift(m, 3), -3).filtration == m.filtration);
  CHECK(shift(m, -1).filtration.jumps() == std::vector<int>{-2, 0});
}

TEST_CASE("weight monodromy matches the kernel-image oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = rng.integer(1, 6);
    Matrix n = random_nilpotent(rng, d);
    auto w = weight_monodromy(n).filtration;
    for (int k = -static_cast<int>(d) - 1; k <= static_cast<int>(d); ++k) CHECK(w.at(k) == oracle_step(n, k));
    Matrix g = rng.invertible(d);
    CHECK(weight_monodromy(g * n * inverse(g)).filtration == w.transformed(g));
    // gr dimensions are symmetric about 0
    for (int k = 1; k <= static_cast<int>(d); ++k) CHECK(w.graded(k).dim() == w.graded(-k).dim());
  }
}

TEST_CASE("relative monodromy examples") {
  Matrix n = jordan(3);
  for (int w = -2; w <= 2; ++w) {
    auto m = relative_monodromy(n, Filtration::concentrated(3, Direction::increasing, w));
    REQUIRE(m);
    CHECK(*m == shift(weight_monodromy(n), w).filtration);
  }
  Filtration w(3, Direction::increasing, {{-1, Subspace::span(Matrix{{1, 0, 0}})}, {1, Subspace::full(3)}});
  auto m0 = relative_monodromy(Matrix(3, 3), w);
  REQUIRE(m0);
  CHECK(*m0 == w);
  // Kummer shape: e1 at -2, e2 at 0, N e2 = e1.
  Filtration wk(2, Direction::increasing, {{-2, Subspace::span(Matrix{{1, 0}})}, {0, Subspace::full(2)}});
  auto mk = relative_monodromy(jordan(2), wk);
  REQUIRE(mk);
  CHECK(*mk == wk);
  // N e3 = e1 with e1, e2 at weight -1 and e3 at 0: no relative filtration.
  Matrix bad(3, 3);
  bad(0, 2) = 1;
  Filtration wb(3, Direction::increasing, {{-1, Subspace::span(Matrix{{1, 0, 0}, {0, 1, 0}})}, {0, Subspace::full(3)}});
  CHECK(!relative_monodromy(bad, wb));
  Matrix up(3, 3);
  up(2, 0) = 1;
  CHECK_THROWS(relative_monodromy(up, wb));
}

TEST_CASE("relative monodromy on random W-preserving operators satisfies the axioms") {
  Rng rng(9);
  int exist = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = rng.integer(2, 5);
    Matrix u = Matrix::identity(d);
    // strictly upper triangular operator preserving the standard flag
    Matrix n(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) n(i, j) = rng.integer(-1, 1);
    std::map<int, Subspace> steps;
    int k = -2;
    std::size_t top = 0;
    while (top < d) {
      top = std::min<std::size_t>(d, top + rng.integer(1, 2));
      steps[k] = Subspace::span(u.block(0, 0, top, d));
      k += rng.integer(1, 2);
    }
    Filtration w(d, Direction::increasing, steps);
    auto m = relative_monodromy(n, w);
    if (!m) continue;
    ++exist;
    CHECK(satisfies_relative_axioms(n, w, *m));
    CHECK_FALSE(satisfies_relative_axioms(n, w, m->reindexed(1)));
  }
  CHECK(exist > 5);
}
