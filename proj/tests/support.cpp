#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace testing {

Matrix Rng::rational_matrix(std::size_t r, std::size_t c, long range) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(range);
  return m;
}

Matrix Rng::gauss_matrix(std::size_t r, std::size_t c, long range) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = gauss(range);
  return m;
}

Matrix Rng::invertible(std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n), p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) l(i, j) = integer(-2, 2);
      if (j > i) u(i, j) = integer(-2, 2);
    }
  for (std::size_t i = 0; i < n; ++i) u(i, i) = integer(1, 3) * (integer(0, 1) ? 1 : -1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * l * u;
}

Matrix Rng::low_rank(std::size_t rows, std::size_t cols, std::size_t r) {
  return rational_matrix(rows, r) * rational_matrix(r, cols);
}

// Laplace expansion along the first row.
Gauss brute_det(const Matrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Gauss total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Gauss term = m(0, c) * brute_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

std::size_t brute_rank(const Matrix& m) {
  std::size_t best = 0;
  std::size_t k_max = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= k_max; ++k) {
    bool found = false;
    std::vector<bool> rsel(m.rows()), csel(m.cols());
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        Matrix sub(k, k);
        for (std::size_t i = 0, ii = 0; i < m.rows(); ++i) {
          if (!rsel[i]) continue;
          for (std::size_t j = 0, jj = 0; j < m.cols(); ++j)
            if (csel[j]) sub(ii, jj++) = m(i, j);
          ++ii;
        }
        if (!brute_det(sub).is_zero()) found = true;
      } while (!found && std::prev_permutation(csel.begin(), csel.end()));
    } while (!found && std::prev_permutation(rsel.begin(), rsel.end()));
    if (!found) break;
    best = k;
  }
  return best;
}

}  // namespace testing
