#include "hodge/verifiers.hpp"

#include "hodge/error.hpp"
#include "hodge/functors.hpp"

namespace hodge {

namespace {

std::pair<int, int> purity_range(const Filtration& f, int w) {
  int lo = f.lowest(), hi = f.highest();
  return {std::min(lo, w - hi) - 1, std::max(hi, w - lo) + 1};
}

std::string label(const std::vector<Rational>& y) {
  std::string s = "(";
  for (std::size_t j = 0; j < y.size(); ++j) s += (j ? "," : "") + to_string(y[j]);
  return s + ")";
}

Vector coords_in(const Matrix& basis_rows, const Vector& v) {
  auto c = solve(basis_rows.transpose(), v);
  if (!c) throw HodgeError("vector outside the spanned subspace");
  return *c;
}

// F restricted to the row span of `basis` (rows in the same coordinates as f), in basis coordinates.
Filtration restrict_to(const Filtration& f, const Matrix& basis) {
  Subspace span = Subspace::span(basis);
  std::map<int, Subspace> steps;
  for (int p : f.jumps()) {
    Subspace cut = intersect(f.at(p), span);
    std::vector<Vector> rows;
    for (const auto& v : cut.vectors()) rows.push_back(coords_in(basis, v));
    steps.emplace(p, Subspace::span(rows, basis.rows()));
  }
  int low = f.lowest();
  steps[low] = Subspace::full(basis.rows());
  if (basis.rows() == 0) steps.clear();
  return Filtration(basis.rows(), Direction::decreasing, std::move(steps));
}

Matrix zero_or_first(const OrbitDatum& o) { return o.operators.empty() ? Matrix(o.dim, o.dim) : o.operators[0]; }

}  // namespace

std::optional<HodgeDecomposition> hodge_decomposition(const Filtration& f, int w) {
  std::size_t d = f.ambient_dim();
  auto [lo, hi] = purity_range(f, w);
  for (int p = lo; p <= hi; ++p) {
    Subspace a = f.at(p), b = f.at(w + 1 - p).conj();
    if (a.dim() + b.dim() != d || !intersect(a, b).is_zero()) return std::nullopt;
  }
  HodgeDecomposition h;
  h.weight = w;
  for (int p = lo; p <= hi; ++p) {
    Subspace piece = intersect(f.at(p), f.at(w - p).conj());
    if (!piece.is_zero()) h.pieces.emplace(p, piece);
  }
  return h;
}

bool is_pure_hs(const Filtration& f, int w) { return hodge_decomposition(f, w).has_value(); }

VerdictReport polarization_report(const Filtration& f, int w, const Pairing& s) {
  VerdictReport r;
  std::size_t d = f.ambient_dim();
  try {
    validate_pairing(s, d, w, "polarization");
  } catch (const ValidationError& e) {
    r.add("pairing well-formed", false, e.what());
    return r;
  }
  auto [lo, hi] = purity_range(f, w);
  bool riemann = true;
  for (int p = lo; p <= hi && riemann; ++p) {
    Subspace fp = f.at(p);
    Subspace ann = fp.is_zero() ? Subspace::full(d) : kernel(fp.basis() * s.matrix);
    if (ann != f.at(w + 1 - p)) riemann = false;
  }
  r.add("first relation: annihilator of F^p is F^{w+1-p}", riemann);
  auto dec = hodge_decomposition(f, w);
  r.add("pure of weight " + std::to_string(w), dec.has_value());
  if (!dec) return r;
  for (const auto& [p, piece] : dec->pieces) {
    int q = w - p;
    Matrix h = piece.basis();
    Matrix g = h * s.matrix * h.conj().transpose() * Gauss::i_pow(p - q);
    bool positive = g.is_hermitian() && is_positive_definite_hermitian(g);
    r.add("positivity on H^{" + std::to_string(p) + "," + std::to_string(q) + "}", positive);
  }
  return r;
}

bool is_polarized_hs(const Filtration& f, int w, const Pairing& s) {
  validate_pairing(s, f.ambient_dim(), w, "polarization");
  return polarization_report(f, w, s).all_passed();
}

VerdictReport mhs_report(const HodgeDatum& h) {
  VerdictReport r;
  for (int w : h.weights()) {
    Subquotient sq = h.graded(w);
    r.add("gr_" + std::to_string(w) + " pure of weight " + std::to_string(w), is_pure_hs(h.hodge.induced(sq), w));
  }
  return r;
}

bool is_mhs(const HodgeDatum& h) { return mhs_report(h).all_passed(); }

bool is_transversal(const std::vector<Matrix>& ops, const Filtration& f) {
  for (const Matrix& n : ops)
    for (int p : f.jumps())
      if (!f.at(p - 1).contains(apply(n, f.at(p)))) return false;
  return true;
}

VerdictReport griffiths_isotropy_checks(const OrbitDatum& o) {
  VerdictReport r;
  for (std::size_t j = 0; j < o.operators.size(); ++j) {
    const Matrix& n = o.operators[j];
    std::string tag = "N_" + std::to_string(j);
    r.add("transversality " + tag, is_transversal({n}, o.hodge));
    Matrix iso = n.transpose() * o.pairing.matrix + o.pairing.matrix * n;
    r.add("isotropy " + tag, iso.is_zero());
  }
  bool riemann = true;
  auto [lo, hi] = purity_range(o.hodge, o.weight);
  for (int p = lo; p <= hi && riemann; ++p) {
    Subspace fp = o.hodge.at(p);
    Subspace ann = fp.is_zero() ? Subspace::full(o.dim) : kernel(fp.basis() * o.pairing.matrix);
    if (ann != o.hodge.at(o.weight + 1 - p)) riemann = false;
  }
  r.add("annihilator of F^p is F^{w+1-p}", riemann);
  return r;
}

Filtration orbit_point(const std::vector<Matrix>& ops, const std::vector<Rational>& y, const Filtration& f) {
  std::size_t d = f.ambient_dim();
  Matrix x(d, d);
  for (std::size_t j = 0; j < ops.size(); ++j) x = x + ops[j] * Gauss(Rational(0), y[j]);
  return f.transformed(exp_nilpotent(x));
}

std::vector<std::vector<Rational>> sample_points(std::size_t n, const std::vector<Rational>& grid) {
  std::vector<std::vector<Rational>> out{{}};
  if (n == 0) return out;
  if (n > 3) {
    out.clear();
    for (const auto& g : grid) out.push_back(std::vector<Rational>(n, g));
    return out;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : out)
      for (const auto& g : grid) {
        auto v = prefix;
        v.push_back(g);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

PrimitiveDecomposition primitive_parts(const OrbitDatum& o, const Filtration& wf) {
  Matrix n0 = zero_or_first(o);
  Filtration expected = shift(weight_monodromy(n0), o.weight).filtration;
  if (wf != expected) throw ValidationError("primitive_parts: W mismatch");
  PrimitiveDecomposition dec;
  dec.weight = o.weight;
  dec.weight_filtration = wf;
  std::size_t count = 0;
  for (int k : wf.jumps()) {
    if (k < o.weight) continue;
    int m = k - o.weight;
    Subquotient gr = wf.graded(k);
    Subquotient tgt = wf.graded(k - 2 * (m + 1));
    Matrix a = gr.induced_map_to(n0.pow(static_cast<unsigned>(m + 1)), tgt);
    Subspace pcoords = a.rows() == 0 ? Subspace::full(gr.dim()) : kernel(a);
    if (pcoords.is_zero()) continue;
    PrimitivePart part;
    part.k = k;
    part.basis = pcoords.basis() * gr.lifts();
    Filtration fgr = o.hodge.induced(gr);
    part.hodge = restrict_to(fgr, pcoords.basis());
    Matrix nm = n0.pow(static_cast<unsigned>(m));
    part.pairing = Pairing{part.basis * o.pairing.matrix * nm * part.basis.transpose(), -k, sign_of_weight(k)};
    for (std::size_t j = 1; j < o.operators.size(); ++j) {
      std::size_t dp = part.basis.rows();
      Matrix op(dp, dp);
      for (std::size_t c = 0; c < dp; ++c) {
        Vector img = gr.coords(o.operators[j] * part.basis.row(c));
        Vector pc = coords_in(pcoords.basis(), img);
        for (std::size_t r = 0; r < dp; ++r) op(r, c) = pc[r];
      }
      part.operators.push_back(op);
    }
    count += static_cast<std::size_t>(m + 1) * part.basis.rows();
    dec.parts.push_back(std::move(part));
  }
  if (count != o.dim) throw ValidationError("primitive_parts: Lefschetz dimension count failed");
  return dec;
}

PrimitiveDecomposition primitive_parts(const OrbitDatum& o) {
  return primitive_parts(o, shift(weight_monodromy(zero_or_first(o)), o.weight).filtration);
}

std::map<int, Pairing> lefschetz_graded_pairings(const OrbitDatum& o) {
  PrimitiveDecomposition dec = primitive_parts(o);
  Matrix n0 = zero_or_first(o);
  const Filtration& wf = dec.weight_filtration;
  std::map<int, Pairing> out;
  for (int k : wf.jumps()) {
    Matrix basis(0, o.dim), gram(0, 0);
    for (const auto& part : dec.parts) {
      int diff = part.k - k;
      if (diff < 0 || diff % 2 != 0 || diff / 2 > part.k - o.weight) continue;
      basis = vstack(basis, part.basis * n0.pow(static_cast<unsigned>(diff / 2)).transpose());
      gram = block_diag(gram, part.pairing.matrix);
    }
    out[k] = Pairing{regram(wf.graded(k), basis, gram), -k, sign_of_weight(k)};
  }
  return out;
}

VerdictReport sampled_orbit_membership(const OrbitDatum& o, const std::vector<std::vector<Rational>>& points) {
  VerdictReport r;
  for (const auto& y : points) {
    Filtration fy = orbit_point(o.operators, y, o.hodge);
    r.add("F_y polarized at y=" + label(y), polarization_report(fy, o.weight, o.pairing).all_passed());
  }
  return r;
}

VerdictReport schmid_criterion(const OrbitDatum& o) {
  VerdictReport r;
  Matrix n0 = zero_or_first(o);
  HodgeDatum lim;
  lim.dim = o.dim;
  lim.weight = shift(weight_monodromy(n0), o.weight).filtration;
  lim.hodge = o.hodge;
  r.merge("limit: ", mhs_report(lim));
  r.add("limit: N F^p in F^{p-1}", is_transversal({n0}, o.hodge));
  PrimitiveDecomposition dec;
  try {
    dec = primitive_parts(o, lim.weight);
  } catch (const ValidationError& e) {
    r.add("primitive decomposition", false, e.what());
    return r;
  }
  for (const auto& part : dec.parts) {
    VerdictReport pr = polarization_report(part.hodge, part.k, part.pairing);
    r.add("primitive P_" + std::to_string(part.k) + " polarized", pr.all_passed(), pr.first_failure());
  }
  return r;
}

VerdictReport check_pure_orbit(const OrbitDatum& o, const Policy& policy) {
  VerdictReport r;
  r.merge("structural: ", griffiths_isotropy_checks(o));
  std::size_t n = o.operators.size();
  if (n == 0) {
    r.merge("exact: ", polarization_report(o.hodge, o.weight, o.pairing));
    r.verdict = r.all_passed() ? Verdict::certified : Verdict::refuted;
    return r;
  }
  if (n == 1) {
    r.merge("exact: ", schmid_criterion(o));
    r.merge("sampled: ", sampled_orbit_membership(o, sample_points(1, policy.grid)));
    r.verdict = r.all_passed() ? Verdict::certified : Verdict::refuted;
    return r;
  }
  auto points = sample_points(n, policy.grid);
  r.merge("sampled: ", sampled_orbit_membership(o, points));
  std::optional<Filtration> first;
  bool constant = true;
  for (const auto& y : points) {
    Matrix s(o.dim, o.dim);
    for (std::size_t j = 0; j < n; ++j) s = s + o.operators[j] * Gauss(y[j]);
    Filtration m = weight_monodromy(s).filtration;
    if (!first) first = m;
    else if (m != *first) constant = false;
  }
  r.add("sampled: W(sum y_j N_j) constant on the cone samples", constant);
  r.verdict = r.all_passed() ? Verdict::supported : Verdict::refuted;
  return r;
}

namespace {

VerdictReport mixed_clauses(const HodgeDatum& h, const Policy& policy, bool graded_pieces, bool* gr_certified) {
  VerdictReport r;
  try {
    validate(h, false);
  } catch (const ValidationError& e) {
    r.add("structural: datum valid", false, e.what());
    return r;
  }
  r.add("structural: transversality", is_transversal(h.operators, h.hodge));
  r.merge("", admissibility_checks(h.operators, h.weight, policy.grid));
  if (gr_certified) *gr_certified = true;
  if (graded_pieces) {
    for (int w : h.weights()) {
      HodgeDatum g = graded_piece(h, w);
      auto it = g.graded_pairings.find(w);
      std::string tag = "gr_" + std::to_string(w) + " polarized orbit";
      if (it == g.graded_pairings.end()) {
        r.add(tag, false, "missing pairing");
        if (gr_certified) *gr_certified = false;
        continue;
      }
      OrbitDatum o{g.dim, w, it->second, g.operators, g.hodge, g.twist_tag};
      VerdictReport sub = check_pure_orbit(o, policy);
      r.add(tag, is_positive(sub.verdict), to_string(sub.verdict) + (sub.all_passed() ? "" : " at " + sub.first_failure()));
      if (gr_certified && sub.verdict != Verdict::certified) *gr_certified = false;
    }
  }
  for (const auto& y : sample_points(h.operators.size(), policy.grid)) {
    HodgeDatum s = h;
    s.hodge = orbit_point(h.operators, y, h.hodge);
    r.add("sampled: MHS at y=" + label(y), is_mhs(s));
  }
  if (!h.operators.empty()) {
    Matrix total(h.dim, h.dim);
    for (const auto& n : h.operators) total = total + n;
    auto m = relative_monodromy(total, h.weight);
    bool limit = false;
    if (m) {
      HodgeDatum lim = h;
      lim.weight = *m;
      limit = is_mhs(lim);
    }
    r.add("limit: (M(N_1+...+N_n, W), F) is an MHS", limit);
  }
  return r;
}

}  // namespace

VerdictReport check_mixed_orbit(const HodgeDatum& h, const Policy& policy) {
  if (h.dim == 0) {
    VerdictReport r;
    r.add("zero datum", true);
    r.verdict = Verdict::certified;
    return r;
  }
  bool gr_certified = false;
  VerdictReport r = mixed_clauses(h, policy, true, &gr_certified);
  if (!r.all_passed()) r.verdict = Verdict::refuted;
  else if (h.operators.size() <= 1 && gr_certified) r.verdict = Verdict::certified;
  else r.verdict = Verdict::supported;
  return r;
}

ShearReport shear_equivalence(const OrbitDatum& o, const Rational& a, const Policy& policy) {
  if (a <= 0) throw ValidationError("shear_equivalence: shear parameter must be positive");
  ShearReport out;
  out.shear = a;
  Matrix n0 = zero_or_first(o);
  bool n0_transversal = is_transversal({n0}, o.hodge);

  OrbitDatum sheared = o;
  if (sheared.operators.empty()) sheared.operators.push_back(n0);
  for (std::size_t j = 1; j < sheared.operators.size(); ++j) sheared.operators[j] = n0 * Gauss(a) + o.operators[j];
  out.left = check_pure_orbit(sheared, policy);

  VerdictReport& r = out.right;
  r.add("hypothesis: N_0 F^p in F^{p-1}", n0_transversal);
  HodgeDatum mixed;
  mixed.dim = o.dim;
  mixed.weight = shift(weight_monodromy(n0), o.weight).filtration;
  mixed.hodge = o.hodge;
  mixed.operators.assign(o.operators.size() > 1 ? o.operators.begin() + 1 : o.operators.end(), o.operators.end());
  mixed.twist_tag = o.twist_tag;
  r.merge("mixed: ", mixed_clauses(mixed, policy, false, nullptr));
  bool exact = mixed.operators.empty();
  try {
    PrimitiveDecomposition dec = primitive_parts(o, mixed.weight);
    for (const auto& part : dec.parts) {
      OrbitDatum po{part.basis.rows(), part.k, part.pairing, part.operators, part.hodge, 0};
      VerdictReport pr = check_pure_orbit(po, policy);
      r.add("primitive P_" + std::to_string(part.k) + " pure orbit", is_positive(pr.verdict),
            to_string(pr.verdict) + (pr.all_passed() ? "" : " at " + pr.first_failure()));
      if (pr.verdict != Verdict::certified) exact = false;
    }
  } catch (const ValidationError& e) {
    r.add("primitive decomposition", false, e.what());
  }
  if (!r.all_passed()) r.verdict = Verdict::refuted;
  else r.verdict = exact ? Verdict::certified : Verdict::supported;
  out.agree = is_positive(out.left.verdict) == is_positive(out.right.verdict);
  return out;
}

}  // namespace hodge
