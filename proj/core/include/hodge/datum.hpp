#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hodge/filtration.hpp"

namespace hodge {

/// Bilinear form with values in Q·(2 pi i)^twist, stored with the power of 2 pi i stripped.
struct Pairing {
  Matrix matrix;
  int twist = 0;
  int symmetry = 1;

  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// (V, W, F, N_1..N_n, <,>_w). Graded pairings are Gram matrices in the canonical lift basis
/// of gr^W_w (see Filtration::graded).
struct HodgeDatum {
  std::size_t dim = 0;
  Filtration weight;
  Filtration hodge;
  std::vector<Matrix> operators;
  std::map<int, Pairing> graded_pairings;
  int twist_tag = 0;

  std::vector<int> weights() const { return weight.jumps(); }
  Subquotient graded(int w) const { return weight.graded(w); }
  std::size_t operator_count() const { return operators.size(); }

  friend bool operator==(const HodgeDatum&, const HodgeDatum&) = default;
};

/// (V, <,>, N_0..N_n, F) pure of weight w. operators[0] is N_0.
struct OrbitDatum {
  std::size_t dim = 0;
  int weight = 0;
  Pairing pairing;
  std::vector<Matrix> operators;
  Filtration hodge;
  int twist_tag = 0;

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
};

/// Pure weight filtration at w.
Filtration pure_weight(std::size_t dim, int w);

/// Structural invariants: filtration shapes, rational W, nilpotent commuting W-preserving
/// rational operators, graded pairings perfect with the right symmetry and twist.
/// Throws ValidationError naming the invariant.
void validate(const HodgeDatum& h, bool require_pairings = true);
void validate(const OrbitDatum& o);
/// Checks shape, symmetry (-1)^w, twist -w, rationality and perfection of a pairing on a space of dim d.
void validate_pairing(const Pairing& p, std::size_t d, int w, const std::string& where);

/// The datum with W concentrated at the orbit weight and the global pairing as its graded pairing.
HodgeDatum as_mixed(const OrbitDatum& o);
/// Same, keeping only operators N_1..N_n (dropping N_0).
HodgeDatum as_mixed_without_first(const OrbitDatum& o);

inline int sign_of_weight(int w) { return (w % 2 == 0) ? 1 : -1; }

}  // namespace hodge
