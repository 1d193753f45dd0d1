#pragma once

#include <map>
#include <vector>

#include "hodge/subspace.hpp"

namespace hodge {

enum class Direction { increasing, decreasing };

/// A finite filtration by subspaces, stored by its jumps only.
///
/// Increasing: W_k is the step at the greatest stored index <= k (zero below the first step),
/// and the last step is the full space. Decreasing: F^p is the step at the smallest stored
/// index >= p (zero above the last step), and the first step is the full space.
class Filtration {
 public:
  Filtration() = default;
  /// Validates nesting and exhaustiveness, then drops redundant steps. Throws ValidationError.
  Filtration(std::size_t ambient, Direction dir, std::map<int, Subspace> steps);

  /// Single jump: W_{k-1} = 0, W_k = V (increasing) or F^k = V, F^{k+1} = 0 (decreasing).
  static Filtration concentrated(std::size_t ambient, Direction dir, int k);

  std::size_t ambient_dim() const { return ambient_; }
  Direction direction() const { return dir_; }
  const std::map<int, Subspace>& steps() const { return steps_; }

  Subspace at(int k) const;
  /// Indices with nonzero graded piece (W_k/W_{k-1} or F^p/F^{p+1}), ascending.
  std::vector<int> jumps() const;
  /// Lowest and highest jump; (0, 0) for the zero space.
  int lowest() const;
  int highest() const;
  /// Graded piece at k as a subquotient.
  Subquotient graded(int k) const;

  /// Result with at'(k) = at(k - offset).
  Filtration reindexed(int offset) const;
  /// Image under an invertible map g.
  Filtration transformed(const Matrix& g) const;
  Filtration conj() const;
  /// Trace on the subquotient sq (steps intersected with the upper space, then projected).
  Filtration induced(const Subquotient& sq) const;
  bool is_rational() const;

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return a.ambient_ == b.ambient_ && a.dir_ == b.dir_ && a.steps_ == b.steps_;
  }
  friend bool operator!=(const Filtration& a, const Filtration& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Direction dir_ = Direction::increasing;
  std::map<int, Subspace> steps_;
};

std::string to_string(const Filtration& f);

}  // namespace hodge
