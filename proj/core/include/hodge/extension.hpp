#pragma once

#include <vector>

#include "hodge/datum.hpp"

namespace hodge {

/// 0 -> sub -> total -> Q(0) -> 0, with a rational lift of the generator of Q(0).
struct Extension {
  HodgeDatum total;
  HodgeDatum sub;
  Matrix inclusion;  // total.dim x sub.dim
  Vector unit_lift;  // in total coordinates
};

/// Class of an extension of Q(0) by a datum Q: the Hodge part z in Q_C / (F^0 Q_C + Q_Q)
/// together with the monodromy parts n_j = N_j(unit lift), all modulo the changes of rational
/// lift (z, n_j) -> (z - q, n_j + N_j q). Stored in normalized form.
struct ExtensionClass {
  std::size_t sub_dim = 0;
  Vector representative;
  std::vector<Vector> operator_parts;

  bool is_zero() const;
  friend bool operator==(const ExtensionClass&, const ExtensionClass&) = default;
};

/// Deterministic normal form: reduction modulo the canonical echelon basis of the relations.
ExtensionClass normalize_class(const HodgeDatum& sub, const Vector& z, const std::vector<Vector>& parts);

/// Throws ConstructionError when F^0 total has no element over the generator.
ExtensionClass carlson_class(const Extension& e);

/// Class over h mapping to c along the surjection surj: h -> q (canonical echelon preimage).
ExtensionClass lift_class(const ExtensionClass& c, const HodgeDatum& h, const HodgeDatum& q, const Matrix& surj);
ExtensionClass push_class(const ExtensionClass& c, const HodgeDatum& q, const Matrix& map);

/// total = sub (+) Q e, F^p(total) = F^p(sub) + [p <= 0] span(e + z), N_j e = n_j.
Extension extension_from_class(const HodgeDatum& sub, const ExtensionClass& c);

Extension baer_sum(const Extension& a, const Extension& b);
Extension inverse_extension(const Extension& e);

/// Transports the pairings of sub along the inclusion and uses [[1]] on gr_0.
void attach_extension_pairings(Extension& e);

}  // namespace hodge
