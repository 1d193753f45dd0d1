#include "hodge/constructions.hpp"

#include "hodge/error.hpp"
#include "hodge/functors.hpp"
#include "hodge/monodromy.hpp"

namespace hodge {

namespace {

// Linear system over Q for an unknown m x m matrix, entry (r, c) at index r * m + c.
struct FormSystem {
  std::size_t m;
  std::vector<Vector> rows;
  Vector rhs;

  void add_real(const Vector& coeff, const Gauss& value) {
    Vector re(m * m), im(m * m);
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      re[k] = coeff[k].re();
      im[k] = coeff[k].im();
    }
    rows.push_back(re);
    rhs.push_back(value.re());
    if (!is_zero(im) || value.im() != 0) {
      rows.push_back(im);
      rhs.push_back(value.im());
    }
  }
  // B(u, v) = value
  void add(const Vector& u, const Vector& v, const Gauss& value) {
    Vector coeff(m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) coeff[r * m + c] = u[r] * v[c];
    add_real(coeff, value);
  }
  Matrix matrix() const { return rows.empty() ? Matrix(0, m * m) : Matrix::from_rows(rows, m * m); }
};

Matrix coords_matrix(const Subquotient& sq, std::size_t ambient) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < ambient; ++i) cols.push_back(sq.coords_unchecked(unit_vector(ambient, i)));
  return Matrix::from_columns(cols, sq.dim());
}

}  // namespace

TildeH build_tilde_H(const HodgeDatum& h) {
  for (int w : h.weights())
    if (w != -1 && w != -2) throw ValidationError("build_tilde_H: weights must lie in {-1, -2}");
  std::size_t d = h.dim;
  Subspace bottom_space = h.weight.at(-2);
  if (bottom_space.dim() != 1) throw ValidationError("build_tilde_H: gr_-2 must have rank one");
  Filtration f2 = h.hodge.induced(h.graded(-2));
  if (f2.at(-1).dim() != 1 || f2.at(0).dim() != 0) throw ValidationError("build_tilde_H: gr_-2 is not of type (-1,-1)");
  Subquotient sq_q(Subspace::full(d), bottom_space);
  std::size_t dq = sq_q.dim();
  Matrix s_q(0, 0);
  if (dq > 0) {
    auto it = h.graded_pairings.find(-1);
    if (it == h.graded_pairings.end()) throw ValidationError("build_tilde_H: missing pairing on gr_-1");
    validate_pairing(it->second, dq, -1, "build_tilde_H gr_-1");
    s_q = it->second.matrix;
  }
  Vector g = bottom_space.vectors()[0];

  HodgeDatum q = subquotient_datum(h, Subspace::full(d), bottom_space);
  if (dq > 0) q.graded_pairings[-1] = Pairing{s_q, 1, -1};
  Matrix surj = coords_matrix(sq_q, d);

  // h*(1) as an extension of Q(0) by Q*(1).
  HodgeDatum tq = tate_twist(dual(h), 1);
  Subspace w1 = tq.weight.at(-1);
  Extension eq;
  eq.total = tq;
  eq.sub = subquotient_datum(tq, w1, Subspace::zero(d));
  eq.inclusion = w1.basis().transpose();
  std::size_t piv = 0;
  while (g[piv].is_zero()) ++piv;
  eq.unit_lift = scaled(unit_vector(d, piv), Gauss(1) / g[piv]);
  ExtensionClass c_dual = carlson_class(eq);

  // Q -> Q*(1), u -> <u, .>, in the coordinates of eq.sub.
  Matrix lam(dq, dq);
  Matrix beta = w1.basis(), ell = sq_q.lifts();
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t s = 0; s < dq; ++s) {
      Gauss acc;
      for (std::size_t k = 0; k < d; ++k) acc += beta(r, k) * ell(s, k);
      lam(r, s) = acc;
    }
  ExtensionClass c_q = c_dual;
  if (dq > 0) {
    Matrix psi = inverse(lam.transpose()) * s_q.transpose();
    c_q = push_class(c_dual, q, inverse(psi));
  }

  TildeH t;
  t.target = c_q;
  t.lifted = lift_class(c_q, h, q, surj);
  for (std::size_t i = 0; i < h.operators.size(); ++i)
    for (std::size_t j = i + 1; j < h.operators.size(); ++j) {
      Vector a = h.operators[i] * t.lifted.operator_parts[j], b = h.operators[j] * t.lifted.operator_parts[i];
      if (!(a == b)) throw ConstructionError("lift", "lifted operator parts do not commute");
    }
  t.extension = extension_from_class(h, t.lifted);
  try {
    validate(t.extension.total);
  } catch (const ValidationError& e) {
    throw ConstructionError("build_tilde_H", e.what());
  }

  std::size_t m = d + 1;
  t.bottom = t.extension.inclusion * g;
  t.n = Matrix(m, m);
  for (std::size_t k = 0; k < m; ++k) t.n(k, d) = t.bottom[k];

  // tilde H / W_{-2} as an extension of Q(0) by Q.
  Subspace low = Subspace::span(std::vector<Vector>{t.bottom}, m);
  Subquotient sq_t(Subspace::full(m), low);
  Extension quo;
  quo.total = subquotient_datum(t.extension.total, Subspace::full(m), low);
  quo.sub = q;
  std::vector<Vector> cols;
  for (std::size_t s = 0; s < dq; ++s) cols.push_back(sq_t.coords(t.extension.inclusion * ell.row(s)));
  quo.inclusion = Matrix::from_columns(cols, sq_t.dim());
  quo.unit_lift = sq_t.coords(t.extension.unit_lift);
  t.quotient_matches = carlson_class(quo) == c_q;
  return t;
}

DualityForm verify_duality(const TildeH& t) {
  const HodgeDatum& th = t.extension.total;
  std::size_t m = th.dim, d = m - 1;
  FormSystem sys{m, {}, {}};
  const Vector& e = t.extension.unit_lift;
  const Vector& g = t.bottom;

  // f(W_k) lies in W_k of the twisted dual: B(W_k, W_{-k-3}) = 0.
  for (int k = -2; k <= -1; ++k)
    for (const auto& u : th.weight.at(k).vectors())
      for (const auto& v : th.weight.at(-k - 3).vectors()) sys.add(u, v, 0);
  // F^p goes to F^p of the twisted dual: B(F^p, F^{-p}) = 0.
  for (int p = th.hodge.lowest() - 1; p <= th.hodge.highest() + 1; ++p)
    for (const auto& u : th.hodge.at(p).vectors())
      for (const auto& v : th.hodge.at(-p).vectors()) sys.add(u, v, 0);
  // operators: B(N u, v) + B(u, N v) = 0
  for (const Matrix& n : th.operators)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vector coeff(m * m);
        for (std::size_t r = 0; r < m; ++r) {
          coeff[r * m + b] += n(r, a);
          coeff[a * m + r] += n(r, b);
        }
        sys.add_real(coeff, 0);
      }
  // graded conditions
  Subquotient sq_q(Subspace::full(d), t.extension.sub.weight.at(-2));
  auto it = t.extension.sub.graded_pairings.find(-1);
  for (std::size_t s = 0; s < sq_q.dim(); ++s)
    for (std::size_t r = 0; r < sq_q.dim(); ++r)
      sys.add(t.extension.inclusion * sq_q.lift(s), t.extension.inclusion * sq_q.lift(r), it->second.matrix(s, r));
  sys.add(e, g, 1);
  sys.add(g, e, -1);

  Matrix a = sys.matrix();
  auto sol = solve(a, sys.rhs);
  if (!sol) throw ConstructionError("verify_duality", "no isomorphism with the prescribed graded pieces");
  DualityForm out;
  out.form = Matrix(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out.form(r, c) = (*sol)[r * m + c];
  out.homogeneous_nullity = m * m - rank(a);
  out.antisymmetric = out.form.transpose() == out.form * Gauss(-1);
  return out;
}

OrbitDatum tilde_orbit(const TildeH& t, const DualityForm& d, const Rational& shear) {
  const HodgeDatum& th = t.extension.total;
  OrbitDatum o;
  o.dim = th.dim;
  o.weight = -1;
  o.pairing = Pairing{d.form, 1, -1};
  o.operators.push_back(t.n);
  for (const Matrix& n : th.operators) o.operators.push_back(n + t.n * Gauss(shear));
  o.hodge = th.hodge;
  o.twist_tag = th.twist_tag;
  return o;
}

Rational choose_shear(const TildeH& t, const DualityForm& d, const Policy& policy) {
  if (t.extension.total.operators.empty()) return 0;
  std::vector<Rational> candidates = policy.shear;
  Rational a = candidates.empty() ? Rational(1) : candidates.back();
  while (a < 1024) {
    a *= 2;
    candidates.push_back(a);
  }
  for (const Rational& c : candidates)
    if (is_positive(check_pure_orbit(tilde_orbit(t, d, c), policy).verdict)) return c;
  return candidates.back();
}

Matrix identity_composite(const Matrix& basis) {
  // b -> sum_j e_j (x) e_j* (x) b, then u (x) v (x) x -> u v(x), in standard coordinates.
  std::size_t b = basis.rows();
  Matrix dual_basis = inverse(basis);  // rows: e_j*
  std::size_t big = b * b * b;
  Matrix coev(big, b), contract(b, big);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t u = 0; u < b; ++u)
        for (std::size_t v = 0; v < b; ++v) coev(u * b * b + v * b + i, i) += basis(u, j) * dual_basis(j, v);
  for (std::size_t u = 0; u < b; ++u)
    for (std::size_t v = 0; v < b; ++v) contract(u, u * b * b + v * b + v) = 1;
  return contract * coev;
}

namespace {

bool has_prefix(const std::string& s, const std::string& tag) { return s.compare(0, tag.size(), tag) == 0; }

bool tagged(const VerdictReport& r, const std::string& tag) {
  bool any = false;
  for (const auto& c : r.clauses)
    if (has_prefix(c.name, tag)) {
      any = true;
      if (!c.passed) return false;
    }
  return any;
}

HodgeDatum sub_datum(const HodgeDatum& h, const Subspace& u) {
  HodgeDatum s = subquotient_datum(h, u, Subspace::zero(h.dim));
  Matrix incl = u.basis().transpose();
  Matrix left = inverse(incl.transpose() * incl) * incl.transpose();
  for (int k : s.weights()) {
    auto it = h.graded_pairings.find(k);
    if (it == h.graded_pairings.end()) continue;
    auto g = transport_gram(h.graded(k), it->second.matrix, left, s.graded(k));
    if (g) s.graded_pairings[k] = Pairing{*g, -k, sign_of_weight(k)};
  }
  return s;
}

std::vector<Matrix> with_zero_first(const std::vector<Matrix>& ops, std::size_t d) {
  std::vector<Matrix> out{Matrix(d, d)};
  out.insert(out.end(), ops.begin(), ops.end());
  return out;
}

std::pair<int, int> index_range(const Filtration& a, const Filtration& b) {
  int lo = std::min(a.lowest(), b.lowest()) - 1, hi = std::max(a.highest(), b.highest()) + 1;
  return {lo, hi};
}

// Shared clauses: pairing, weight, operator count, compatibility, and the monodromy filtration.
std::optional<Filtration> common_clauses(VerdictReport& r, const HodgeDatum& src, const OrbitDatum& tgt,
                                         int expected_weight, bool injective_side, const Matrix& map) {
  try {
    validate_pairing(tgt.pairing, tgt.dim, tgt.weight, "target");
    r.add("(ii) pairing perfect and (-1)^w-symmetric", true);
  } catch (const ValidationError& e) {
    r.add("(ii) pairing perfect and (-1)^w-symmetric", false, e.what());
  }
  r.add("weight of H' is " + std::to_string(expected_weight), tgt.weight == expected_weight,
        "found " + std::to_string(tgt.weight));
  bool count = tgt.operators.size() == src.operators.size() + 1;
  r.add("exactly one new operator", count);
  if (!count) return std::nullopt;
  bool commute = true;
  for (std::size_t j = 0; j < src.operators.size(); ++j) {
    const Matrix& a = src.operators[j];
    const Matrix& b = tgt.operators[j + 1];
    commute = commute && (injective_side ? map * a == b * map : map * b == a * map);
  }
  r.add("map intertwines the operators", commute);
  Matrix n0 = tgt.operators[0];
  r.add(injective_side ? "new operator vanishes on the image" : "new operator maps into the kernel",
        (injective_side ? n0 * map : map * n0).is_zero());
  if (!is_nilpotent(n0)) {
    r.add("(b) new operator nilpotent", false);
    return std::nullopt;
  }
  Filtration m = shift(weight_monodromy(n0), tgt.weight).filtration;
  auto rel = relative_monodromy(n0, pure_weight(tgt.dim, tgt.weight));
  r.add("(b) M(N_0, W') = W(N_0)[-w]", rel && *rel == m);
  return m;
}

}  // namespace

bool EmbeddingCertificate::condition(const std::string& tag) const { return tagged(checks, tag); }
bool SurjectionCertificate::condition(const std::string& tag) const { return tagged(checks, tag); }

VerdictReport verify_embedding(const HodgeDatum& src, const OrbitDatum& tgt, const Matrix& inj, std::optional<int> weight) {
  VerdictReport r;
  bool shape = inj.rows() == tgt.dim && inj.cols() == src.dim && inj.is_rational();
  r.add("map shape and rationality", shape);
  if (!shape) return r;
  std::size_t rk = rank(inj);
  r.add("(i) injective with free cokernel", rk == src.dim, "cokernel dimension " + std::to_string(tgt.dim - rk));
  int top = weight ? *weight : src.dim == 0 ? tgt.weight : src.weights().back();
  auto m = common_clauses(r, src, tgt, top, true, inj);
  bool a = true;
  auto [lo, hi] = index_range(src.hodge, tgt.hodge);
  for (int p = lo; p <= hi; ++p) a = a && src.hodge.at(p) == preimage(inj, tgt.hodge.at(p));
  r.add("(a) F^p H = i^{-1} F^p H'", a);
  if (m) {
    Subspace img = image(inj);
    bool b = true;
    auto [wl, wh] = index_range(src.weight, *m);
    for (int k = wl; k <= wh; ++k) b = b && apply(inj, src.weight.at(k)) == intersect(img, m->at(k));
    r.add("(b) i(W_k H) = i(H) cap M_k", b);
  }
  r.verdict = r.all_passed() ? Verdict::certified : Verdict::refuted;
  return r;
}

VerdictReport verify_surjection(const HodgeDatum& src, const OrbitDatum& tgt, const Matrix& sur, std::optional<int> weight) {
  VerdictReport r;
  bool shape = sur.rows() == src.dim && sur.cols() == tgt.dim && sur.is_rational();
  r.add("map shape and rationality", shape);
  if (!shape) return r;
  std::size_t rk = rank(sur);
  r.add("(i) surjective with free kernel", rk == src.dim, "kernel dimension " + std::to_string(tgt.dim - rk));
  int bottom = weight ? *weight : src.dim == 0 ? tgt.weight : src.weights().front();
  auto m = common_clauses(r, src, tgt, bottom, false, sur);
  bool a = true;
  auto [lo, hi] = index_range(src.hodge, tgt.hodge);
  for (int p = lo; p <= hi; ++p) a = a && src.hodge.at(p) == apply(sur, tgt.hodge.at(p));
  r.add("(a) F^p H = p(F^p H')", a);
  if (m) {
    bool b = true;
    auto [wl, wh] = index_range(src.weight, *m);
    for (int k = wl; k <= wh; ++k) b = b && src.weight.at(k) == apply(sur, m->at(k));
    r.add("(b) W_k H = p(M_k)", b);
  }
  r.verdict = r.all_passed() ? Verdict::certified : Verdict::refuted;
  return r;
}

void verify(EmbeddingCertificate& c, const Policy& policy) {
  c.checks = verify_embedding(c.source, c.target, c.injection, c.weight);
  c.target_report = check_pure_orbit(c.target, policy);
}

void verify(SurjectionCertificate& c, const Policy& policy) {
  c.checks = verify_surjection(c.source, c.target, c.surjection, c.weight);
  c.target_report = check_pure_orbit(c.target, policy);
}

namespace {

EmbeddingCertificate pure_case(const HodgeDatum& h, int w) {
  EmbeddingCertificate c;
  c.source = h;
  OrbitDatum& o = c.target;
  o.dim = h.dim;
  o.weight = w;
  auto it = h.graded_pairings.find(w);
  o.pairing = it != h.graded_pairings.end() ? it->second : Pairing{Matrix(0, 0), -w, sign_of_weight(w)};
  o.operators = with_zero_first(h.operators, h.dim);
  o.hodge = h.hodge;
  o.twist_tag = h.twist_tag;
  c.injection = Matrix::identity(h.dim);
  c.weight = w;
  return c;
}

EmbeddingCertificate two_weights(const HodgeDatum& h, int w, const Policy& policy) {
  for (int k : h.weights())
    if (k != w && k != w - 1) throw ValidationError("embed_two_weights: weights must lie in {w, w-1}");
  Subspace wb = h.weight.at(w - 1);
  if (wb.is_zero()) return pure_case(h, w);
  std::size_t b = wb.dim(), dh = h.dim, n = h.operators.size();
  HodgeDatum bd = sub_datum(h, wb);
  if (!bd.graded_pairings.count(w - 1)) throw ValidationError("embed_two_weights: missing pairing on gr_(w-1)");
  Matrix incl = wb.basis().transpose();

  HodgeDatum bs = tate_twist(dual(bd), 1);
  HodgeDatum x = tensor(bs, h), a = tensor(bs, bd);
  HodgeDatum y = tate(1);
  y.operators.assign(n, Matrix(1, 1));
  y.twist_tag = x.twist_tag;
  Matrix trace(1, b * b);
  for (std::size_t j = 0; j < b; ++j) trace(0, j * b + j) = 1;
  Pushout p;
  try {
    p = pushout(a, x, y, kron(Matrix::identity(b), incl), trace);
  } catch (const ValidationError& e) {
    throw ConstructionError("trace pushout", e.what());
  }
  TildeH t = build_tilde_H(p.datum);
  DualityForm df = verify_duality(t);
  if (!df.unique()) throw ConstructionError("verify_duality", "duality isomorphism is not unique");
  Rational shear = choose_shear(t, df, policy);

  HodgeDatum hm = tensor(tate_twist(bd, -1), t.extension.total);
  EmbeddingCertificate c;
  c.source = h;
  OrbitDatum& o = c.target;
  o.dim = hm.dim;
  o.weight = w;
  o.pairing = Pairing{kron(bd.graded_pairings.at(w - 1).matrix, df.form), -w, sign_of_weight(w)};
  o.operators.push_back(kron(Matrix::identity(b), t.n));
  for (const Matrix& m : hm.operators) o.operators.push_back(m + o.operators[0] * Gauss(shear));
  o.hodge = hm.hodge;
  o.twist_tag = hm.twist_tag;

  Matrix coev(b * b * dh, dh);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < b; ++j) coev(j * b * dh + j * dh + i, i) = 1;
  c.injection = kron(Matrix::identity(b), t.extension.inclusion * p.from_x) * coev;
  c.weight = w;
  c.shears.push_back(shear);
  return c;
}

EmbeddingCertificate general(const HodgeDatum& h, int w, const Policy& policy) {
  if (h.dim == 0 || w - h.weights().front() <= 1) return two_weights(h, w, policy);
  Subspace wl = h.weight.at(w - 1);
  HodgeDatum sub = sub_datum(h, wl);
  EmbeddingCertificate inner;
  try {
    inner = general(sub, w - 1, policy);
  } catch (const ConstructionError& e) {
    throw ConstructionError("W_" + std::to_string(w - 1) + " > " + e.stage(), e.what());
  }
  HodgeDatum ap = subquotient_datum(sub, Subspace::full(sub.dim), Subspace::zero(sub.dim));
  ap.weight = pure_weight(sub.dim, w - 1);
  ap.operators = with_zero_first(sub.operators, sub.dim);
  HodgeDatum hp = h;
  hp.weight = Filtration(h.dim, Direction::increasing, {{w - 1, wl}, {w, Subspace::full(h.dim)}});
  hp.operators = with_zero_first(h.operators, h.dim);
  hp.graded_pairings.clear();
  if (h.graded_pairings.count(w)) hp.graded_pairings[w] = h.graded_pairings.at(w);
  HodgeDatum y = as_mixed(inner.target);
  ap.twist_tag = hp.twist_tag = y.twist_tag;
  Pushout j;
  try {
    j = pushout(ap, hp, y, wl.basis().transpose(), inner.injection);
  } catch (const ValidationError& e) {
    throw ConstructionError("pushout along W_" + std::to_string(w - 1), e.what());
  }
  EmbeddingCertificate outer;
  try {
    outer = two_weights(j.datum, w, policy);
  } catch (const ConstructionError& e) {
    throw ConstructionError("J > " + e.stage(), e.what());
  }
  EmbeddingCertificate c;
  c.source = h;
  c.target = outer.target;
  c.target.operators[0] = c.target.operators[0] + c.target.operators[1];
  c.target.operators.erase(c.target.operators.begin() + 1);
  c.injection = outer.injection * j.from_x;
  c.weight = w;
  c.shears = inner.shears;
  c.shears.insert(c.shears.end(), outer.shears.begin(), outer.shears.end());
  return c;
}

void require_positive(const HodgeDatum& h, const Policy& policy) {
  validate(h);
  VerdictReport r = check_mixed_orbit(h, policy);
  if (!is_positive(r.verdict)) throw ConstructionError("precondition", "mixed orbit refuted at " + r.first_failure());
}

}  // namespace

EmbeddingCertificate embed_two_weights(const HodgeDatum& h, int w, const Policy& policy) {
  validate(h);
  EmbeddingCertificate c = two_weights(h, w, policy);
  verify(c, policy);
  return c;
}

EmbeddingCertificate embed_two_weights(const HodgeDatum& h, const Policy& policy) {
  return embed_two_weights(h, h.dim == 0 ? 0 : h.weights().back(), policy);
}

EmbeddingCertificate embed_general(const HodgeDatum& h, const Policy& policy) {
  require_positive(h, policy);
  EmbeddingCertificate c = general(h, h.dim == 0 ? 0 : h.weights().back(), policy);
  verify(c, policy);
  return c;
}

OrbitDatum dual_orbit(const OrbitDatum& o) {
  HodgeDatum d = dual(as_mixed(o));
  OrbitDatum out;
  out.dim = o.dim;
  out.weight = -o.weight;
  auto it = d.graded_pairings.find(-o.weight);
  out.pairing = it != d.graded_pairings.end() ? it->second : Pairing{Matrix(0, 0), o.weight, sign_of_weight(o.weight)};
  out.operators = d.operators;
  out.hodge = d.hodge;
  out.twist_tag = d.twist_tag;
  return out;
}

SurjectionCertificate surject_from_pure(const HodgeDatum& h, const Policy& policy) {
  require_positive(h, policy);
  HodgeDatum hd = dual(h);
  EmbeddingCertificate e = general(hd, hd.dim == 0 ? 0 : hd.weights().back(), policy);
  SurjectionCertificate c;
  c.source = h;
  c.target = dual_orbit(e.target);
  c.surjection = e.injection.transpose();
  c.weight = -e.weight;
  c.shears = e.shears;
  verify(c, policy);
  return c;
}

namespace {

OrbitDatum packed_orbit(const PolarizedMixed& p) {
  OrbitDatum o;
  o.dim = p.mixed.dim;
  o.weight = p.weight;
  o.pairing = p.pairing;
  if (!(p.n.is_zero() && p.mixed.operators.empty())) o.operators.push_back(p.n);
  for (const Matrix& m : p.mixed.operators) o.operators.push_back(m);
  o.hodge = p.mixed.hodge;
  o.twist_tag = p.mixed.twist_tag;
  return o;
}

bool anti_invariant(const Matrix& n, const Matrix& s) { return (n.transpose() * s + s * n).is_zero(); }

bool pairing_vanishes(const Matrix& s, const Subspace& a, const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return true;
  return (a.basis() * s * b.basis().transpose()).is_zero();
}

}  // namespace

VerdictReport polarized_mixed_checks(const PolarizedMixed& p, const Policy& policy) {
  VerdictReport r;
  const HodgeDatum& h = p.mixed;
  std::size_t d = h.dim;
  int w = p.weight;
  bool shapes = p.n.rows() == d && p.n.cols() == d && p.pairing.matrix.rows() == d;
  r.add("structure: shapes", shapes);
  if (!shapes) return r;
  const Matrix& s = p.pairing.matrix;

  try {
    validate_pairing(p.pairing, d, w, "pairing");
    r.add("structure (i): pairing perfect and (-1)^w-symmetric", true);
  } catch (const ValidationError& e) {
    r.add("structure (i): pairing perfect and (-1)^w-symmetric", false, e.what());
    return r;
  }
  bool wcompat = true;
  for (int a : h.weights())
    for (int b : h.weights())
      if (a + b < 2 * w) wcompat = wcompat && pairing_vanishes(s, h.weight.at(a), h.weight.at(b));
  r.add("structure (i): pairing compatible with W", wcompat);
  bool fcompat = true;
  for (int q = h.hodge.lowest() - 1; q <= h.hodge.highest() + 1; ++q)
    fcompat = fcompat && pairing_vanishes(s, h.hodge.at(q), h.hodge.at(w + 1 - q));
  r.add("structure (i): pairing compatible with F", fcompat);
  bool ops = true;
  for (const Matrix& m : h.operators) ops = ops && anti_invariant(m, s);
  r.add("structure (i): pairing compatible with the operators", ops);

  bool nil = is_nilpotent(p.n);
  r.add("structure (ii): N nilpotent", nil);
  bool nw = true;
  for (int k : h.weights()) nw = nw && h.weight.at(k - 2).contains(apply(p.n, h.weight.at(k)));
  r.add("structure (ii): N W_k in W_{k-2}", nw);
  r.add("structure (ii): N F^p in F^{p-1}", is_transversal({p.n}, h.hodge));
  bool comm = true;
  for (const Matrix& m : h.operators) comm = comm && m * p.n == p.n * m;
  r.add("structure (ii): N commutes with the operators", comm);
  r.add("structure (ii): <Nu, v> + <u, Nv> = 0", anti_invariant(p.n, s));
  if (!nil) return r;

  Filtration expected = shift(weight_monodromy(p.n), w).filtration;
  bool c1 = expected == h.weight;
  r.add("condition (1): W = W(N)[-w]", c1);
  if (!c1) return r;
  OrbitDatum o = packed_orbit(p);
  if (o.operators.empty()) o.operators.push_back(p.n);
  PrimitiveDecomposition pd;
  try {
    pd = primitive_parts(o, h.weight);
  } catch (const ValidationError& e) {
    r.add("condition (2): primitive decomposition", false, e.what());
    return r;
  }
  for (const auto& part : pd.parts) {
    OrbitDatum po;
    po.dim = part.basis.rows();
    po.weight = part.k;
    po.pairing = part.pairing;
    po.operators = part.operators;
    po.hodge = part.hodge;
    VerdictReport pr = check_pure_orbit(po, policy);
    r.add("condition (2): P_" + std::to_string(part.k) + " polarized", is_positive(pr.verdict), pr.first_failure());
  }
  return r;
}

PolarizedMixed orbit_to_mixed(const OrbitDatum& o, const Policy& policy) {
  validate(o);
  PolarizedMixed p;
  Matrix n = o.operators.empty() ? Matrix(o.dim, o.dim) : o.operators[0];
  p.n = n;
  p.weight = o.weight;
  p.pairing = o.pairing;
  HodgeDatum& h = p.mixed;
  h.dim = o.dim;
  h.weight = shift(weight_monodromy(n), o.weight).filtration;
  h.hodge = o.hodge;
  if (!o.operators.empty()) h.operators.assign(o.operators.begin() + 1, o.operators.end());
  h.twist_tag = o.twist_tag;
  VerdictReport r = polarized_mixed_checks(p, policy);
  for (const auto& c : r.clauses)
    if (!c.passed) throw ConstructionError(c.name, c.detail.empty() ? "failed" : c.detail);
  h.graded_pairings = lefschetz_graded_pairings(o);
  VerdictReport pre = check_pure_orbit(o, policy);
  if (!is_positive(pre.verdict)) throw ConstructionError("precondition", "orbit refuted at " + pre.first_failure());
  return p;
}

OrbitFromMixed mixed_to_orbit(const PolarizedMixed& p, const Policy& policy) {
  VerdictReport r = polarized_mixed_checks(p, policy);
  for (const auto& c : r.clauses)
    if (!c.passed) throw ConstructionError(c.name, c.detail.empty() ? "failed" : c.detail);
  OrbitFromMixed out;
  out.orbit = packed_orbit(p);
  out.report = check_pure_orbit(out.orbit, policy);
  return out;
}

}  // namespace hodge
