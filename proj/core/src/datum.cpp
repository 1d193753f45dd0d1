#include "hodge/datum.hpp"

#include "hodge/error.hpp"

namespace hodge {

Filtration pure_weight(std::size_t dim, int w) { return Filtration::concentrated(dim, Direction::increasing, w); }

void validate_pairing(const Pairing& p, std::size_t d, int w, const std::string& where) {
  const Matrix& m = p.matrix;
  if (m.rows() != d || m.cols() != d) throw ValidationError(where + ": pairing matrix has wrong size");
  if (!m.is_rational()) throw ValidationError(where + ": pairing matrix is not rational");
  if (p.symmetry != sign_of_weight(w)) throw ValidationError(where + ": pairing symmetry is not (-1)^w");
  if (p.twist != -w) throw ValidationError(where + ": pairing twist is not -w");
  Matrix expected = m.transpose() * Gauss(p.symmetry);
  if (!(expected == m)) throw ValidationError(where + ": pairing matrix does not have the declared symmetry");
  if (d > 0 && rank(m) != d) throw ValidationError(where + ": pairing is not perfect");
}

namespace {

void validate_operators(const std::vector<Matrix>& ops, std::size_t d, const Filtration* w) {
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const Matrix& n = ops[j];
    std::string tag = "operator " + std::to_string(j);
    if (n.rows() != d || n.cols() != d) throw ValidationError(tag + ": wrong size");
    if (!n.is_rational()) throw ValidationError(tag + ": not rational");
    if (!is_nilpotent(n)) throw ValidationError(tag + ": not nilpotent");
    if (w)
      for (const auto& [k, s] : w->steps())
        if (!s.contains(apply(n, s))) throw ValidationError(tag + ": does not preserve W");
    for (std::size_t i = 0; i < j; ++i)
      if (!(ops[i] * n == n * ops[i]))
        throw ValidationError(tag + ": does not commute with operator " + std::to_string(i));
  }
}

void validate_filtrations(std::size_t d, const Filtration& w, const Filtration& f) {
  if (w.ambient_dim() != d || w.direction() != Direction::increasing)
    throw ValidationError("weight filtration: wrong shape");
  if (!w.is_rational()) throw ValidationError("weight filtration: not defined over Q");
  if (f.ambient_dim() != d || f.direction() != Direction::decreasing)
    throw ValidationError("hodge filtration: wrong shape");
}

}  // namespace

void validate(const HodgeDatum& h, bool require_pairings) {
  validate_filtrations(h.dim, h.weight, h.hodge);
  validate_operators(h.operators, h.dim, &h.weight);
  for (const auto& [w, p] : h.graded_pairings) {
    std::size_t d = h.graded(w).dim();
    if (d == 0) throw ValidationError("pairing at weight " + std::to_string(w) + ": graded piece is zero");
    validate_pairing(p, d, w, "pairing at weight " + std::to_string(w));
  }
  if (require_pairings)
    for (int w : h.weights())
      if (!h.graded_pairings.count(w))
        throw ValidationError("missing pairing for nonzero graded piece at weight " + std::to_string(w));
}

void validate(const OrbitDatum& o) {
  validate_filtrations(o.dim, pure_weight(o.dim, o.weight), o.hodge);
  validate_operators(o.operators, o.dim, nullptr);
  validate_pairing(o.pairing, o.dim, o.weight, "global pairing");
}

HodgeDatum as_mixed(const OrbitDatum& o) {
  HodgeDatum h;
  h.dim = o.dim;
  h.weight = pure_weight(o.dim, o.weight);
  h.hodge = o.hodge;
  h.operators = o.operators;
  if (o.dim > 0) h.graded_pairings[o.weight] = o.pairing;
  h.twist_tag = o.twist_tag;
  return h;
}

HodgeDatum as_mixed_without_first(const OrbitDatum& o) {
  HodgeDatum h = as_mixed(o);
  if (!h.operators.empty()) h.operators.erase(h.operators.begin());
  return h;
}

}  // namespace hodge
