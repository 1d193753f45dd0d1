#include "hodge/extension.hpp"

#include "hodge/error.hpp"
#include "hodge/functors.hpp"

namespace hodge {

bool ExtensionClass::is_zero() const {
  if (!hodge::is_zero(representative)) return false;
  for (const auto& n : operator_parts)
    if (!hodge::is_zero(n)) return false;
  return true;
}

namespace {

// Coordinates (Re z, Im z, n_1, ..., n_n).
Vector realify(const Vector& z, const std::vector<Vector>& parts) {
  Vector out;
  for (const auto& x : z) out.push_back(x.re());
  for (const auto& x : z) out.push_back(x.im());
  for (const auto& n : parts)
    for (const auto& x : n) out.push_back(x);
  return out;
}

Subspace relations(const HodgeDatum& sub) {
  std::size_t d = sub.dim, n = sub.operators.size();
  std::size_t len = 2 * d + n * d;
  std::vector<Vector> rows;
  Subspace f0 = sub.hodge.at(0);
  for (const auto& f : f0.vectors()) {
    Vector a(len), b(len);
    for (std::size_t k = 0; k < d; ++k) {
      a[k] = f[k].re();
      a[d + k] = f[k].im();
      b[k] = Rational(-f[k].im());
      b[d + k] = f[k].re();
    }
    rows.push_back(a);
    rows.push_back(b);
  }
  for (std::size_t k = 0; k < d; ++k) {
    Vector r(len);
    r[k] = -1;
    for (std::size_t j = 0; j < n; ++j) {
      Vector col = sub.operators[j].column(k);
      for (std::size_t t = 0; t < d; ++t) r[2 * d + j * d + t] = col[t];
    }
    rows.push_back(r);
  }
  return Subspace::span(rows, len);
}

std::pair<Matrix, Vector> split_coordinates(const Extension& e) {
  Matrix frame = hstack(e.inclusion, Matrix::column_vector(e.unit_lift));
  if (!frame.is_square() || rank(frame) != frame.rows())
    throw ConstructionError("extension", "inclusion and unit lift do not form a basis");
  Matrix inv = inverse(frame);
  return {inv.block(0, 0, e.sub.dim, e.total.dim), inv.row(e.sub.dim)};
}

}  // namespace

ExtensionClass normalize_class(const HodgeDatum& sub, const Vector& z, const std::vector<Vector>& parts) {
  std::size_t d = sub.dim;
  if (z.size() != d || parts.size() != sub.operators.size()) throw ValidationError("extension class: wrong shape");
  Vector red = relations(sub).reduce(realify(z, parts));
  ExtensionClass c;
  c.sub_dim = d;
  c.representative.resize(d);
  for (std::size_t k = 0; k < d; ++k) c.representative[k] = Gauss(red[k].re(), red[d + k].re());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    Vector n(d);
    for (std::size_t t = 0; t < d; ++t) n[t] = red[2 * d + j * d + t];
    c.operator_parts.push_back(n);
  }
  return c;
}

ExtensionClass carlson_class(const Extension& e) {
  for (int w : e.sub.weights())
    if (w > -1) throw ValidationError("carlson_class: sub has a weight >= 0");
  auto [to_sub, pi] = split_coordinates(e);
  Subspace f0 = e.total.hodge.at(0);
  std::optional<Vector> section;
  for (const auto& f : f0.vectors()) {
    Gauss t = 0;
    for (std::size_t k = 0; k < f.size(); ++k) t += pi[k] * f[k];
    if (!t.is_zero()) {
      section = scaled(f, Gauss(1) / t);
      break;
    }
  }
  if (!section) throw ConstructionError("carlson_class", "no F-preserving section");
  Vector z = to_sub * (*section - e.unit_lift);
  std::vector<Vector> parts;
  for (const auto& n : e.total.operators) parts.push_back(to_sub * (n * e.unit_lift));
  return normalize_class(e.sub, z, parts);
}

ExtensionClass lift_class(const ExtensionClass& c, const HodgeDatum& h, const HodgeDatum& q, const Matrix& surj) {
  if (surj.rows() != q.dim || surj.cols() != h.dim || rank(surj) != q.dim)
    throw ConstructionError("lift_class", "map is not surjective");
  auto z = solve(surj, c.representative);
  std::vector<Vector> parts;
  for (const auto& n : c.operator_parts) parts.push_back(*solve(surj, n));
  return normalize_class(h, *z, parts);
}

ExtensionClass push_class(const ExtensionClass& c, const HodgeDatum& q, const Matrix& map) {
  std::vector<Vector> parts;
  for (const auto& n : c.operator_parts) parts.push_back(map * n);
  return normalize_class(q, map * c.representative, parts);
}

Extension extension_from_class(const HodgeDatum& sub, const ExtensionClass& c) {
  std::size_t d = sub.dim;
  for (int w : sub.weights())
    if (w > -1) throw ValidationError("extension_from_class: sub has a weight >= 0");
  Extension e;
  e.sub = sub;
  HodgeDatum& t = e.total;
  t.dim = d + 1;
  Matrix incl(d + 1, d);
  incl.set_block(0, 0, Matrix::identity(d));
  e.inclusion = incl;
  e.unit_lift = unit_vector(d + 1, d);
  auto lifted = [&](const Subspace& s) { return apply(incl, s); };

  std::map<int, Subspace> w;
  for (int k : sub.weights()) w.emplace(k, lifted(sub.weight.at(k)));
  w.emplace(0, Subspace::full(d + 1));
  t.weight = Filtration(d + 1, Direction::increasing, std::move(w));

  Vector top = e.unit_lift;
  for (std::size_t k = 0; k < d; ++k) top[k] = c.representative[k];
  Subspace line = Subspace::span(std::vector<Vector>{top}, d + 1);
  std::map<int, Subspace> f;
  int low = std::min(0, sub.hodge.lowest());
  for (int p : sub.hodge.jumps()) f.emplace(p, lifted(sub.hodge.at(p)));
  f.emplace(0, lifted(sub.hodge.at(0)));
  f.emplace(low, lifted(sub.hodge.at(low)));
  for (auto& [p, s] : f)
    if (p <= 0) s = sum(s, line);
  t.hodge = Filtration(d + 1, Direction::decreasing, std::move(f));

  for (std::size_t j = 0; j < sub.operators.size(); ++j) {
    Matrix n(d + 1, d + 1);
    n.set_block(0, 0, sub.operators[j]);
    for (std::size_t k = 0; k < d; ++k) n(k, d) = c.operator_parts[j][k];
    t.operators.push_back(n);
  }
  t.twist_tag = sub.twist_tag;
  attach_extension_pairings(e);
  return e;
}

void attach_extension_pairings(Extension& e) {
  HodgeDatum& t = e.total;
  t.graded_pairings.clear();
  for (const auto& [k, p] : e.sub.graded_pairings) {
    auto g = transport_gram(e.sub.graded(k), p.matrix, e.inclusion, t.graded(k));
    if (g) t.graded_pairings[k] = Pairing{*g, -k, sign_of_weight(k)};
  }
  HodgeDatum one = unit_datum();
  auto g = transport_gram(one.graded(0), Matrix::identity(1), Matrix::column_vector(e.unit_lift), t.graded(0));
  if (g) t.graded_pairings[0] = Pairing{*g, 0, 1};
}

Extension baer_sum(const Extension& a, const Extension& b) {
  if (a.sub.dim != b.sub.dim) throw ValidationError("baer_sum: sub dimension mismatch");
  auto [sa, pa] = split_coordinates(a);
  auto [sb, pb] = split_coordinates(b);
  HodgeDatum a0 = a.total, b0 = b.total;
  a0.graded_pairings.clear();
  b0.graded_pairings.clear();
  HodgeDatum s = direct_sum(a0, b0);
  std::size_t n = s.dim;
  Matrix diff(1, n);
  for (std::size_t k = 0; k < a.total.dim; ++k) diff(0, k) = pa[k];
  for (std::size_t k = 0; k < b.total.dim; ++k) diff(0, a.total.dim + k) = -pb[k];
  Subspace upper = kernel(diff);
  Matrix anti = vstack(a.inclusion, b.inclusion * Gauss(-1));
  Subspace lower = image(anti);
  Subquotient sq(upper, lower);

  Extension out;
  out.sub = a.sub;
  out.total = subquotient_datum(s, upper, lower);
  Matrix incl(n, a.sub.dim);
  incl.set_block(0, 0, a.inclusion);
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < a.sub.dim; ++k) cols.push_back(sq.coords(incl.column(k)));
  out.inclusion = Matrix::from_columns(cols, sq.dim());
  Vector u(n);
  for (std::size_t k = 0; k < a.total.dim; ++k) u[k] = a.unit_lift[k];
  for (std::size_t k = 0; k < b.total.dim; ++k) u[a.total.dim + k] = b.unit_lift[k];
  out.unit_lift = sq.coords(u);
  attach_extension_pairings(out);
  return out;
}

Extension inverse_extension(const Extension& e) {
  Extension out = e;
  out.unit_lift = scaled(e.unit_lift, Gauss(-1));
  attach_extension_pairings(out);
  return out;
}

}  // namespace hodge
