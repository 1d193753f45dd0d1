#include <doctest.h>

#include "hodge/subspace.hpp"
#include "support.hpp"

using namespace hodge;
using testing::Rng;

TEST_CASE("gauss arithmetic") {
  Gauss a(frac(1, 2), 3), b(-2, frac(1, 3));
  CHECK(a * b / b == a);
  CHECK((a + b) - b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK(Gauss::i() * Gauss::i() == Gauss(-1));
  CHECK(Gauss::i_pow(-1) == -Gauss::i());
  CHECK(Gauss::i_pow(6) == Gauss(-1));
  CHECK(parse_rational("-6/4") == frac(-3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_string(frac(3, 4)) == "3/4");
}

TEST_CASE("echelonize examples") {
  CHECK(echelonize(Matrix::identity(3)) == Matrix::identity(3));
  Matrix m{{2, 4}, {1, 2}};
  CHECK(echelonize(m) == Matrix{{1, 2}});
  CHECK(echelonize(Matrix(3, 2)).rows() == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix(2, 2)).is_full());
  CHECK(kernel(Matrix::identity(2)).is_zero());
  Matrix n{{0, 1}, {0, 0}};
  CHECK(kernel(n) == Subspace::span(Matrix{{1, 0}}));
}

TEST_CASE("subspace operation examples") {
  Subspace s = Subspace::span(Matrix{{1, 2, 0}, {0, 1, 1}});
  CHECK(intersect(s, Subspace::full(3)) == s);
  CHECK(sum(s, Subspace::zero(3)) == s);
  CHECK(intersect(Subspace::span(Matrix{{1, 0}}), Subspace::span(Matrix{{0, 1}})).is_zero());
  CHECK_THROWS(intersect(s, Subspace::full(2)));
  CHECK_THROWS(sum(s, Subspace::full(2)));
}

TEST_CASE("positive definite examples") {
  CHECK(is_positive_definite_hermitian(Matrix::identity(3)));
  CHECK_FALSE(is_positive_definite_hermitian(Matrix{{-1}}));
  Matrix m{{2, Gauss::i()}, {-Gauss::i(), 2}};
  CHECK(is_positive_definite_hermitian(m));
  CHECK_THROWS(is_positive_definite_hermitian(Matrix{{1, 2}, {3, 1}}));
}

TEST_CASE("random rank-nullity and dimension formula") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng.integer(1, 6), c = rng.integer(1, 6);
    Matrix m = trial % 2 ? rng.low_rank(r, c, rng.integer(0, 3)) : rng.gauss_matrix(r, c);
    Matrix e = echelonize(m);
    CHECK(echelonize(e) == e);
    CHECK(rank(m) == testing::brute_rank(m));
    Subspace k = kernel(m);
    CHECK(k.dim() + rank(m) == c);
    for (const auto& v : k.vectors()) CHECK(is_zero(m * v));
    CHECK(image(m).dim() == rank(m));
    Subspace a = Subspace::span(rng.low_rank(3, c, rng.integer(0, c)));
    Subspace b = Subspace::span(rng.low_rank(3, c, rng.integer(0, c)));
    Subspace ab = intersect(a, b);
    CHECK(a.dim() + b.dim() == ab.dim() + sum(a, b).dim());
    CHECK(a.contains(ab));
    CHECK(b.contains(ab));
    CHECK(sum(a, b).contains(a));
  }
}

TEST_CASE("preimage, inverse, determinant") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = rng.integer(1, 5);
    Matrix m = rng.low_rank(n, n, rng.integer(0, n));
    Subspace s = Subspace::span(rng.low_rank(2, n, rng.integer(0, 2)));
    Subspace pre = preimage(m, s);
    for (const auto& v : pre.vectors()) CHECK(s.contains(m * v));
    CHECK(pre.contains(kernel(m)));
    CHECK(pre.dim() == kernel(m).dim() + intersect(s, image(m)).dim());
    Matrix g = rng.invertible(n);
    CHECK(g * inverse(g) == Matrix::identity(n));
    CHECK(determinant(m) == testing::brute_det(m));
    CHECK(determinant(g) == testing::brute_det(g));
  }
  CHECK_THROWS(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST_CASE("solve") {
  Matrix a{{1, 2}, {2, 4}};
  CHECK(!solve(a, Vector{1, 0}));
  auto x = solve(a, Vector{1, 2});
  REQUIRE(x);
  CHECK(a * *x == Vector{1, 2});
}

TEST_CASE("positivity agrees with brute-force evaluation") {
  Rng rng(7);
  int positives = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = rng.integer(1, 6);
    Matrix b = rng.gauss_matrix(n, n, 2);
    Matrix h = b.adjoint() * b;
    if (trial % 3 == 0) h = h - Matrix::identity(n) * Gauss(rng.integer(0, 4));
    bool pd = is_positive_definite_hermitian(h);
    bool minors = true;
    for (std::size_t k = 1; k <= n; ++k) {
      Gauss d = testing::brute_det(h.block(0, 0, k, k));
      CHECK(d.is_real());
      if (sgn(d.re()) <= 0) minors = false;
    }
    CHECK(pd == minors);
    bool sampled_positive = true;
    for (int s = 0; s < 20; ++s) {
      Vector v(n);
      for (auto& x : v) x = s < static_cast<int>(n) ? Gauss(0) : rng.gauss(3);
      if (s < static_cast<int>(n)) v[s] = 1;
      if (is_zero(v)) continue;
      Gauss q = bilinear(conj(v), h, v);
      CHECK(q.is_real());
      if (sgn(q.re()) <= 0) sampled_positive = false;
    }
    if (pd) {
      CHECK(sampled_positive);
      ++positives;
    }
    if (!sampled_positive) CHECK_FALSE(pd);
  }
  CHECK(positives > 10);
}

TEST_CASE("subquotient coordinates") {
  Subspace u = Subspace::span(Matrix{{1, 0, 0}, {0, 1, 1}});
  Subspace l = Subspace::span(Matrix{{1, 1, 1}});
  Subquotient sq(u, l);
  CHECK(sq.dim() == 1);
  CHECK(sq.lift(0) == Vector{0, 1, 1});
  CHECK(sq.coords(Vector{1, 0, 0}) == Vector{-1});
  CHECK(sq.coords(Vector{0, 1, 1}) == Vector{1});
  CHECK(sq.coords(Vector{1, 1, 1}) == Vector{0});
  CHECK_THROWS(sq.coords(Vector{0, 0, 1}));
  CHECK_THROWS(Subquotient(l, u));
  QuotientMap q = quotient_map(l);
  CHECK(q.project.rows() == 2);
  CHECK(is_zero(q.project * Vector{1, 1, 1}));
  CHECK(q.project * q.section == Matrix::identity(2));
}
