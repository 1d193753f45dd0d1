#pragma once

#include <optional>
#include <string>

#include "hodge/datum.hpp"

namespace hodge {

/// Q(r): dimension one, weight -2r, F^{-r} = V, pairing [[1]].
HodgeDatum tate(int r);
inline HodgeDatum unit_datum() { return tate(0); }
/// The zero datum with the given number of (zero) operators.
HodgeDatum zero_datum(std::size_t operator_count = 0);

HodgeDatum dual(const HodgeDatum& h);
HodgeDatum tate_twist(const HodgeDatum& h, int r);
/// Basis e_i (x) f_j has index i * dim(b) + j. A side without operators is padded with zeros.
HodgeDatum tensor(const HodgeDatum& a, const HodgeDatum& b);
HodgeDatum direct_sum(const HodgeDatum& a, const HodgeDatum& b);
HodgeDatum graded_piece(const HodgeDatum& h, int w);
/// Replaces (N_i, N_j) by N_i + N_j at position i; N_j is removed.
HodgeDatum sum_operators(const HodgeDatum& h, std::size_t i, std::size_t j);

/// Subspace spanned by u (x) v.
Subspace kron_span(const Subspace& a, const Subspace& b);
/// a (+) b inside the direct sum of the ambients.
Subspace direct_sum(const Subspace& a, const Subspace& b);

/// Gram matrix in the canonical basis of sq, given the Gram matrix on a basis of rows `basis`
/// of the same subquotient.
Matrix regram(const Subquotient& sq, const Matrix& basis, const Matrix& gram);
/// Transports a graded Gram matrix along a map inducing an isomorphism src -> dst; nullopt if
/// the induced map is not invertible.
std::optional<Matrix> transport_gram(const Subquotient& src, const Matrix& gram, const Matrix& map,
                                     const Subquotient& dst);

/// Reason f: a -> b fails to be a morphism (W-strict, F-preserving, operator-equivariant), or nullopt.
std::optional<std::string> morphism_defect(const HodgeDatum& a, const HodgeDatum& b, const Matrix& f);

struct Pushout {
  HodgeDatum datum;
  Matrix from_x;
  Matrix from_y;
};
/// (X (+) Y) / {(f a, -g a)}. A graded pairing of the result is taken from Y where gr f is an
/// isomorphism, from X where gr g is, and as the direct sum where gr A vanishes.
Pushout pushout(const HodgeDatum& a, const HodgeDatum& x, const HodgeDatum& y, const Matrix& f, const Matrix& g);

/// Sub-datum U/L of h (U, L stable under the operators) with induced filtrations and operators.
/// No graded pairings are attached.
HodgeDatum subquotient_datum(const HodgeDatum& h, const Subspace& upper, const Subspace& lower);

}  // namespace hodge
