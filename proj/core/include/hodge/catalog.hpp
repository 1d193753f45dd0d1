#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/datum.hpp"

namespace hodge {

HodgeDatum gen_tate(int r);
/// e1 at weight -2, e2 at weight 0, F^0 = span(e2 + z e1), N e2 = e1 repeated `operators` times
/// with coefficients 1, 2, ...
HodgeDatum gen_kummer(const Gauss& z, std::size_t operators = 1);
/// Weight 1, S = [[0,1],[-1,0]], N e2 = -e1, F^1 = span(e2 + tau e1). Polarized limit points
/// exist for every tau; F_y is polarized exactly when y > Im(tau).
OrbitDatum gen_elliptic_orbit(const Gauss& tau = Gauss(0, 1));
/// Pure weight 1 elliptic structure with F^1 = span(e2 + tau e1); polarized iff Im(tau) < 0.
HodgeDatum gen_elliptic_curve(const Gauss& tau = Gauss(0, -1));
/// Weight 0, Jordan block of size 3, S antidiagonal (1,-1,1), F^1 = span(e3 + a e2 + a^2/2 e1),
/// F^0 = F^1 + span(e2 + a e1).
OrbitDatum gen_jordan3_orbit(const Gauss& a);
/// e1 at weight -2, (e2, e3) an elliptic piece at weight -1, e4 at weight 0;
/// F^0 = span(e3 - i e2 + a e1, e4 + b e1 + c e3). Optional operator N e4 = e1.
HodgeDatum gen_three_weight(const Gauss& a, const Gauss& b, const Gauss& c, bool with_operator = false);
/// Q(0) e3 over an elliptic piece (e1, e2) of weight -1 with N e3 = e1: no relative filtration.
HodgeDatum gen_inadmissible();
/// Two elliptic orbits with N e4 = e1 added: violates infinitesimal isotropy.
OrbitDatum gen_non_isotropic();
/// Sum of two elliptic orbits with operators N (+) 0 and 0 (+) N.
OrbitDatum gen_elliptic_pair(const Gauss& tau1, const Gauss& tau2);

/// Pieces per weight: even weights carry Tate pieces (dim 1), odd weights elliptic pieces (dim 2).
struct RandomProfile {
  std::vector<std::pair<int, int>> pieces;  // (weight, multiplicity)
  bool with_operator = false;
};
/// Direct sum of polarized pieces with F moved by a seeded unipotent W-lowering map; with an
/// operator, a seeded rational map from the top to the bottom weight (these must differ by 2 and
/// be even). Throws ValidationError for an infeasible profile.
HodgeDatum gen_random_mhs(unsigned seed, const RandomProfile& profile);

OrbitDatum negate_pairing(const OrbitDatum& o);
HodgeDatum negate_pairing(const HodgeDatum& h, int w);

struct CatalogEntry {
  std::string name;
  std::optional<HodgeDatum> mixed;
  std::optional<OrbitDatum> orbit;
  bool positive = true;
  /// For negatives: substring of the clause expected to fail.
  std::string expected_clause;
  std::string provenance;
};
std::vector<CatalogEntry> catalog();

/// Independent check of N W_k in W_{k-2} and N^j : gr_{c+j} -> gr_{c-j} bijective, by ranks.
bool oracle_monodromy_axioms(const Matrix& n, const Filtration& m, int center = 0);
/// Independent check of the relative axioms by ranks.
bool oracle_relative_axioms(const Matrix& n, const Filtration& w, const Filtration& m);

}  // namespace hodge
