#pragma once

#include <map>
#include <optional>

#include "hodge/datum.hpp"
#include "hodge/monodromy.hpp"
#include "hodge/report.hpp"

namespace hodge {

/// Sampling policy for the "y large" and "a large" quantifiers.
struct Policy {
  std::vector<Rational> grid{4, 8, 16};
  std::vector<Rational> shear{8, 16};
};

struct HodgeDecomposition {
  int weight = 0;
  std::map<int, Subspace> pieces;  // p -> H^{p, w-p}
};

/// H^{p,q} = F^p cap conj(F^q) when V_C = F^p (+) conj(F^{w+1-p}) for all p.
std::optional<HodgeDecomposition> hodge_decomposition(const Filtration& f, int w);
bool is_pure_hs(const Filtration& f, int w);
/// Annihilator of F^p is F^{w+1-p}, purity, and i^{p-q} S(u, conj v) positive definite on
/// each H^{p,q}. Throws ValidationError for a malformed pairing.
bool is_polarized_hs(const Filtration& f, int w, const Pairing& s);
/// Clause per failing condition; empty reason list means polarized.
VerdictReport polarization_report(const Filtration& f, int w, const Pairing& s);

bool is_mhs(const HodgeDatum& h);
/// One clause per weight.
VerdictReport mhs_report(const HodgeDatum& h);

/// N_j F^p in F^{p-1}.
bool is_transversal(const std::vector<Matrix>& ops, const Filtration& f);
/// Transversality, infinitesimal isotropy of each N_j, and annihilator of F^p = F^{w+1-p}.
VerdictReport griffiths_isotropy_checks(const OrbitDatum& o);

/// exp(i sum_j y_j N_j) F.
Filtration orbit_point(const std::vector<Matrix>& ops, const std::vector<Rational>& y, const Filtration& f);
/// Grid points: the full product grid^n for n <= 3, otherwise constant vectors.
std::vector<std::vector<Rational>> sample_points(std::size_t n, const std::vector<Rational>& grid);

/// A primitive part P_k of gr_k for W = W(N_0)[-w], k >= w, as a subspace with a basis of
/// ambient lifts, its induced Hodge filtration and the form <u, N_0^{k-w} v>.
struct PrimitivePart {
  int k = 0;
  Matrix basis;  // rows: ambient lifts
  Filtration hodge;
  Pairing pairing;
  std::vector<Matrix> operators;  // N_1..N_n induced on P_k
};
struct PrimitiveDecomposition {
  int weight = 0;
  Filtration weight_filtration;
  std::vector<PrimitivePart> parts;
};
/// Throws ValidationError when `w_filtration` differs from W(N_0)[-w] or the Lefschetz count fails.
PrimitiveDecomposition primitive_parts(const OrbitDatum& o, const Filtration& w_filtration);
PrimitiveDecomposition primitive_parts(const OrbitDatum& o);

/// Graded pairings on W(N)[-w] induced by the primitive decomposition.
std::map<int, Pairing> lefschetz_graded_pairings(const OrbitDatum& o);

/// One clause per grid point: F_y polarized.
VerdictReport sampled_orbit_membership(const OrbitDatum& o, const std::vector<std::vector<Rational>>& points);

/// W(N)[-w] with F is an MHS, transversality, and each primitive part polarized.
VerdictReport schmid_criterion(const OrbitDatum& o);

VerdictReport check_pure_orbit(const OrbitDatum& o, const Policy& policy = {});
VerdictReport check_mixed_orbit(const HodgeDatum& h, const Policy& policy = {});

struct ShearReport {
  Rational shear;
  VerdictReport left;
  VerdictReport right;
  bool agree = false;
};
/// LEFT: the sheared pure orbit (N_0, a N_0 + N_1, ...). RIGHT: the mixed orbit
/// (W(N_0)[-w], N_1..N_n, F) together with pure orbit checks on the primitive parts.
/// Transversality of N_0 is a shared hypothesis recorded on both sides.
ShearReport shear_equivalence(const OrbitDatum& o, const Rational& a, const Policy& policy = {});

}  // namespace hodge
