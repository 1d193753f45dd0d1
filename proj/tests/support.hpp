#pragma once

#include <random>

#include "hodge/subspace.hpp"

namespace testing {

using namespace hodge;

/// Small random rationals with numerators in [-range, range] and denominators in [1, den].
struct Rng {
  explicit Rng(unsigned seed) : gen(seed) {}
  std::mt19937 gen;

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational rational(long range = 3, long den = 2) { return frac(integer(-range, range), integer(1, den)); }
  Gauss gauss(long range = 3) { return Gauss(rational(range), rational(range)); }
  Matrix rational_matrix(std::size_t r, std::size_t c, long range = 3);
  Matrix gauss_matrix(std::size_t r, std::size_t c, long range = 3);
  /// Invertible rational matrix (unit triangular product with a permutation).
  Matrix invertible(std::size_t n);
  /// Random matrix of rank <= r.
  Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t r);
};

/// Rank by determinants of minors: brute-force oracle for small matrices.
std::size_t brute_rank(const Matrix& m);
Gauss brute_det(const Matrix& m);

}  // namespace testing
