#pragma once

#include <string>

#include "hodge/datum.hpp"
#include "hodge/extension.hpp"
#include "hodge/report.hpp"
#include "hodge/verifiers.hpp"

namespace hodge {

/// Extension 0 -> h -> tilde H -> Q(0) -> 0 for h with weights in {-1, -2} and gr_{-2} of rank one,
/// with N sending the unit lift to the generator of W_{-2}.
struct TildeH {
  Extension extension;       // extension.total is tilde H, extension.sub is h
  Matrix n;                  // e -> bottom
  Vector bottom;             // generator of W_{-2} in tilde H coordinates
  ExtensionClass lifted;     // class over h
  ExtensionClass target;     // class of h*(1) over gr_{-1}
  bool quotient_matches = false;  // class of tilde H / W_{-2} equals `target`
};

TildeH build_tilde_H(const HodgeDatum& h);

struct DualityForm {
  Matrix form;  // B(u, v) = f(u)(v) for the isomorphism f: tilde H -> tilde H*(1)
  std::size_t homogeneous_nullity = 0;
  bool antisymmetric = false;
  bool unique() const { return homogeneous_nullity == 0; }
};

/// Solves for the isomorphism with gr_{-1} the pairing map, gr_0 = 1, gr_{-2} = -1.
/// Throws ConstructionError when the system has no solution.
DualityForm verify_duality(const TildeH& t);

/// Pure orbit of weight -1 on tilde H: pairing from the duality form, N_0 = N, and N_j -> N_j + a N
/// on the remaining operators (pullback along q -> q f).
OrbitDatum tilde_orbit(const TildeH& t, const DualityForm& d, const Rational& shear = 0);

/// Smallest shear among the policy values, then doublings up to 1024, for which the tilde orbit
/// passes check_pure_orbit; the largest candidate when none does. Zero without operators.
Rational choose_shear(const TildeH& t, const DualityForm& d, const Policy& policy = {});

/// B -> B (x) B* (x) B -> B computed with the basis given by the columns of `basis`.
Matrix identity_composite(const Matrix& basis);

struct EmbeddingCertificate {
  HodgeDatum source;
  OrbitDatum target;  // operators: new N_0 followed by the images of the source operators
  Matrix injection;   // target.dim x source.dim
  int weight = 0;     // requested weight of the target
  std::vector<Rational> shears;  // per two-weight stage: N_j -> N_j + a N_0 on tilde P
  VerdictReport checks;
  VerdictReport target_report;
  bool condition(const std::string& tag) const;
};

struct SurjectionCertificate {
  HodgeDatum source;  // the mixed datum being surjected onto
  OrbitDatum target;  // the pure orbit mapping onto it
  Matrix surjection;  // source.dim x target.dim
  int weight = 0;
  std::vector<Rational> shears;
  VerdictReport checks;
  VerdictReport target_report;
  bool condition(const std::string& tag) const;
};

/// Recomputes every clause of an embedding: (i) injective with free cokernel, (ii) perfect
/// (-1)^w-symmetric pairing, (a) F^p = i^{-1} F'^p, (b) i W_k = i(H) cap M_k with M computed
/// from the new operator, operator compatibility and the new operator vanishing on the image.
/// The expected weight defaults to the top (resp. bottom) weight of the source.
VerdictReport verify_embedding(const HodgeDatum& source, const OrbitDatum& target, const Matrix& injection,
                               std::optional<int> weight = std::nullopt);
VerdictReport verify_surjection(const HodgeDatum& source, const OrbitDatum& target, const Matrix& surjection,
                                std::optional<int> weight = std::nullopt);
void verify(EmbeddingCertificate& c, const Policy& policy = {});
void verify(SurjectionCertificate& c, const Policy& policy = {});

/// Weights of h within {w, w-1}.
EmbeddingCertificate embed_two_weights(const HodgeDatum& h, int w, const Policy& policy = {});
EmbeddingCertificate embed_two_weights(const HodgeDatum& h, const Policy& policy = {});

/// Throws ConstructionError("precondition", ...) when check_mixed_orbit refutes h.
EmbeddingCertificate embed_general(const HodgeDatum& h, const Policy& policy = {});
SurjectionCertificate surject_from_pure(const HodgeDatum& h, const Policy& policy = {});

OrbitDatum dual_orbit(const OrbitDatum& o);

/// (H, <,>, N): an LMH at the point with operators N_1..N_n, a pairing of weight w and one more
/// nilpotent N.
struct PolarizedMixed {
  HodgeDatum mixed;
  Matrix n;
  Pairing pairing;
  int weight = 0;
  friend bool operator==(const PolarizedMixed&, const PolarizedMixed&) = default;
};

/// Structures (i), (ii) and conditions (1), (2); clause names start with "structure" or "condition".
VerdictReport polarized_mixed_checks(const PolarizedMixed& p, const Policy& policy = {});

/// Throws ConstructionError naming the first failing clause.
PolarizedMixed orbit_to_mixed(const OrbitDatum& o, const Policy& policy = {});

struct OrbitFromMixed {
  OrbitDatum orbit;
  VerdictReport report;
};
OrbitFromMixed mixed_to_orbit(const PolarizedMixed& p, const Policy& policy = {});

}  // namespace hodge
