#pragma once

#include <optional>

#include "hodge/datum.hpp"
#include "hodge/report.hpp"

namespace hodge {

struct MonodromyFiltration {
  Filtration filtration;
  int center = 0;
};

/// W(N) centered at 0, by recursive peel-off; axioms verified before returning.
/// Throws ValidationError for non-nilpotent N.
MonodromyFiltration weight_monodromy(const Matrix& n);
/// (W[-w])_k = W_{k-w}.
MonodromyFiltration shift(const MonodromyFiltration& m, int w);

/// N W_k in W_{k-2} and N^k : gr_k -> gr_{-k} bijective for k >= 1 (centered at `center`).
bool satisfies_monodromy_axioms(const Matrix& n, const Filtration& m, int center = 0);

/// M(N, W) or nullopt when it does not exist. Throws ValidationError if N does not preserve W.
std::optional<Filtration> relative_monodromy(const Matrix& n, const Filtration& w);
/// Both defining properties of M(N, W), checked directly.
bool satisfies_relative_axioms(const Matrix& n, const Filtration& w, const Filtration& m);

/// Existence of M(N_1 + ... + N_j, W) for every j, and equality of M along sampled positive
/// combinations of the operators (coefficients from `grid`).
VerdictReport admissibility_checks(const std::vector<Matrix>& ops, const Filtration& w,
                                   const std::vector<Rational>& grid);

/// Facts used when two operators are merged. W1 = M(N_1, W), W2 = M(N_2, W1), M12 = M(N_1 + N_2, W): existence of W1 with partial sums of
/// (W1, N_2..N_n), equality W2 = M12, existence for the partial sums of (W, N_1 + N_2, N_3, ...).
std::vector<Clause> check_merge_facts(const HodgeDatum& h);

}  // namespace hodge
