#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodge/matrix.hpp"

namespace hodge {

Rational frac(long num, long den);

/// Canonical reduced row-echelon form with zero rows dropped. Optionally reports pivot columns.
Matrix echelonize(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);

/// A subspace of Q(i)^n stored by its canonical echelon basis (rows).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  /// Row span of the given vectors.
  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<Vector>& rows, std::size_t ambient);
  static Subspace column_span(const Matrix& cols);
  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_list(); }
  /// Basis as columns (ambient x dim).
  Matrix column_basis() const { return basis_.transpose(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool is_rational() const { return basis_.is_rational(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  /// v minus its projection along the echelon basis: zero exactly when v is in the span.
  Vector reduce(const Vector& v) const;

  Subspace conj() const;
  /// {phi : phi^T x = 0 for x in this}, in the same coordinates.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {v : m v in s}.
Subspace preimage(const Matrix& m, const Subspace& s);
/// {m v : v in s}.
Subspace apply(const Matrix& m, const Subspace& s);

/// Any solution x of a x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Solution of a X = B column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Gauss determinant(const Matrix& m);

/// True iff all leading principal minors of the Hermitian matrix m are positive.
/// Throws std::invalid_argument for non-Hermitian input.
bool is_positive_definite_hermitian(const Matrix& m);

/// Splits each row into its real and imaginary parts (rational rows), doubling the row count.
Matrix realify_rows(const Matrix& m);

/// Coordinates on U/L for subspaces L subset U, with canonical lifts: the echelon rows of U
/// reduced modulo L. Lifts depend only on the canonical forms of U and L.
class Subquotient {
 public:
  Subquotient(Subspace upper, Subspace lower);

  std::size_t dim() const { return lifts_.rows(); }
  std::size_t ambient_dim() const { return upper_.ambient_dim(); }
  const Subspace& upper() const { return upper_; }
  const Subspace& lower() const { return lower_; }
  /// Lift vectors as rows (dim x ambient).
  const Matrix& lifts() const { return lifts_; }
  Vector lift(std::size_t k) const { return lifts_.row(k); }

  /// Coordinates of the class of x; throws std::invalid_argument unless x is in U.
  Vector coords(const Vector& x) const;
  /// coords(x) without the membership check; x must lie in U.
  Vector coords_unchecked(const Vector& x) const;
  /// Image of (s intersect U) + L in coordinates.
  Subspace induced(const Subspace& s) const;
  /// Induced endomorphism for m with m U in U and m L in L; throws otherwise.
  Matrix induced_map(const Matrix& m) const;
  /// Matrix of the map from this subquotient to another one induced by m.
  Matrix induced_map_to(const Matrix& m, const Subquotient& target) const;
  /// Gram matrix of the bilinear form `gram` on the lift basis.
  Matrix gram(const Matrix& ambient_gram) const;

 private:
  Subspace upper_;
  Subspace lower_;
  Matrix lifts_;
  std::vector<std::size_t> lift_pivots_;
};

/// Quotient Q^n -> Q^n / K using the non-pivot coordinates of K as the quotient basis.
struct QuotientMap {
  Matrix project;   // (n - k) x n
  Matrix section;   // n x (n - k)
};
QuotientMap quotient_map(const Subspace& k);

}  // namespace hodge
