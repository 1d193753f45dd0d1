#include "hodge/functors.hpp"

#include <set>

#include "hodge/error.hpp"

namespace hodge {

HodgeDatum tate(int r) {
  HodgeDatum h;
  h.dim = 1;
  h.weight = pure_weight(1, -2 * r);
  h.hodge = Filtration::concentrated(1, Direction::decreasing, -r);
  h.graded_pairings[-2 * r] = Pairing{Matrix::identity(1), 2 * r, 1};
  h.twist_tag = r;
  return h;
}

HodgeDatum zero_datum(std::size_t operator_count) {
  HodgeDatum h;
  h.weight = Filtration(0, Direction::increasing, {});
  h.hodge = Filtration(0, Direction::decreasing, {});
  h.operators.assign(operator_count, Matrix(0, 0));
  return h;
}

Subspace kron_span(const Subspace& a, const Subspace& b) {
  std::size_t n = a.ambient_dim() * b.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  return Subspace::span(kron(a.basis(), b.basis()));
}

Subspace direct_sum(const Subspace& a, const Subspace& b) {
  std::size_t n = a.ambient_dim() + b.ambient_dim();
  Matrix rows(a.dim() + b.dim(), n);
  rows.set_block(0, 0, a.basis());
  rows.set_block(a.dim(), a.ambient_dim(), b.basis());
  return Subspace::span(rows);
}

Matrix regram(const Subquotient& sq, const Matrix& basis, const Matrix& gram) {
  std::vector<Vector> cols;
  for (std::size_t s = 0; s < basis.rows(); ++s) cols.push_back(sq.coords(basis.row(s)));
  Matrix c = Matrix::from_columns(cols, sq.dim());
  Matrix ci = inverse(c);
  return ci.transpose() * gram * ci;
}

std::optional<Matrix> transport_gram(const Subquotient& src, const Matrix& gram, const Matrix& map,
                                     const Subquotient& dst) {
  if (src.dim() != dst.dim()) return std::nullopt;
  Matrix m = src.induced_map_to(map, dst);
  if (rank(m) != m.rows()) return std::nullopt;
  Matrix mi = inverse(m);
  return mi.transpose() * gram * mi;
}

namespace {

std::set<int> sums(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> out;
  for (int i : a)
    for (int j : b) out.insert(i + j);
  return out;
}

std::set<int> unite(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> out(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  return out;
}

Filtration tensor_filtration(const Filtration& a, const Filtration& b) {
  std::size_t n = a.ambient_dim() * b.ambient_dim();
  std::map<int, Subspace> steps;
  for (int k : sums(a.jumps(), b.jumps())) {
    Subspace s = Subspace::zero(n);
    for (int i : a.jumps()) s = sum(s, kron_span(a.at(i), b.at(k - i)));
    steps.emplace(k, s);
  }
  return Filtration(n, a.direction(), std::move(steps));
}

Filtration sum_filtration(const Filtration& a, const Filtration& b) {
  std::map<int, Subspace> steps;
  for (int k : unite(a.jumps(), b.jumps())) steps.emplace(k, direct_sum(a.at(k), b.at(k)));
  return Filtration(a.ambient_dim() + b.ambient_dim(), a.direction(), std::move(steps));
}

std::vector<Matrix> padded(const HodgeDatum& h, std::size_t count, const char* op) {
  if (h.operators.size() == count) return h.operators;
  if (h.operators.empty()) return std::vector<Matrix>(count, Matrix(h.dim, h.dim));
  throw ValidationError(std::string(op) + ": operator count mismatch");
}

Matrix embed_rows(const Matrix& rows, std::size_t offset, std::size_t n) {
  Matrix out(rows.rows(), n);
  out.set_block(0, offset, rows);
  return out;
}

}  // namespace

HodgeDatum dual(const HodgeDatum& h) {
  HodgeDatum d;
  d.dim = h.dim;
  std::map<int, Subspace> w;
  for (int k : h.weights()) w.emplace(-k, h.weight.at(k - 1).annihilator());
  if (h.dim > 0) w.emplace(-h.weight.lowest() + 1, Subspace::full(h.dim));
  d.weight = Filtration(h.dim, Direction::increasing, std::move(w));
  std::map<int, Subspace> f;
  for (int p : h.hodge.jumps()) f.emplace(-p, h.hodge.at(p + 1).annihilator());
  d.hodge = Filtration(h.dim, Direction::decreasing, std::move(f));
  for (const Matrix& n : h.operators) d.operators.push_back(-n.transpose());
  for (const auto& [k, p] : h.graded_pairings) {
    Subquotient src = h.graded(k);
    Subquotient dst = d.graded(-k);
    Matrix c = dst.lifts() * src.lifts().transpose();
    Matrix gi = inverse(p.matrix).transpose();
    d.graded_pairings[-k] = Pairing{c * gi * c.transpose(), -p.twist, p.symmetry};
  }
  d.twist_tag = -h.twist_tag;
  return d;
}

HodgeDatum tate_twist(const HodgeDatum& h, int r) {
  HodgeDatum t = h;
  t.weight = h.weight.reindexed(-2 * r);
  t.hodge = h.hodge.reindexed(-r);
  t.graded_pairings.clear();
  for (const auto& [k, p] : h.graded_pairings) t.graded_pairings[k - 2 * r] = Pairing{p.matrix, p.twist + 2 * r, p.symmetry};
  t.twist_tag = h.twist_tag + r;
  return t;
}

HodgeDatum tensor(const HodgeDatum& a, const HodgeDatum& b) {
  HodgeDatum t;
  t.dim = a.dim * b.dim;
  t.weight = tensor_filtration(a.weight, b.weight);
  t.hodge = tensor_filtration(a.hodge, b.hodge);
  std::size_t count = std::max(a.operators.size(), b.operators.size());
  auto na = padded(a, count, "tensor");
  auto nb = padded(b, count, "tensor");
  Matrix ia = Matrix::identity(a.dim), ib = Matrix::identity(b.dim);
  for (std::size_t j = 0; j < count; ++j) t.operators.push_back(kron(na[j], ib) + kron(ia, nb[j]));
  for (int k : t.weights()) {
    Matrix basis(0, t.dim), gram(0, 0);
    bool complete = true;
    for (int i : a.weights()) {
      int j = k - i;
      Subquotient ga = a.graded(i), gb = b.graded(j);
      if (ga.dim() == 0 || gb.dim() == 0) continue;
      auto pa = a.graded_pairings.find(i);
      auto pb = b.graded_pairings.find(j);
      if (pa == a.graded_pairings.end() || pb == b.graded_pairings.end()) {
        complete = false;
        break;
      }
      basis = vstack(basis, kron(ga.lifts(), gb.lifts()));
      gram = block_diag(gram, kron(pa->second.matrix, pb->second.matrix));
    }
    if (!complete) continue;
    Subquotient sq = t.graded(k);
    t.graded_pairings[k] = Pairing{regram(sq, basis, gram), -k, sign_of_weight(k)};
  }
  t.twist_tag = a.twist_tag + b.twist_tag;
  return t;
}

HodgeDatum direct_sum(const HodgeDatum& a, const HodgeDatum& b) {
  if (a.operators.size() != b.operators.size()) throw ValidationError("direct_sum: operator count mismatch");
  HodgeDatum s;
  s.dim = a.dim + b.dim;
  s.weight = sum_filtration(a.weight, b.weight);
  s.hodge = sum_filtration(a.hodge, b.hodge);
  for (std::size_t j = 0; j < a.operators.size(); ++j) s.operators.push_back(block_diag(a.operators[j], b.operators[j]));
  for (int k : s.weights()) {
    Subquotient ga = a.graded(k), gb = b.graded(k);
    auto pa = a.graded_pairings.find(k);
    auto pb = b.graded_pairings.find(k);
    if ((ga.dim() > 0 && pa == a.graded_pairings.end()) || (gb.dim() > 0 && pb == b.graded_pairings.end())) continue;
    Matrix basis = vstack(embed_rows(ga.lifts(), 0, s.dim), embed_rows(gb.lifts(), a.dim, s.dim));
    Matrix gram = block_diag(ga.dim() ? pa->second.matrix : Matrix(0, 0), gb.dim() ? pb->second.matrix : Matrix(0, 0));
    s.graded_pairings[k] = Pairing{regram(s.graded(k), basis, gram), -k, sign_of_weight(k)};
  }
  s.twist_tag = a.twist_tag;
  return s;
}

HodgeDatum graded_piece(const HodgeDatum& h, int w) {
  Subquotient sq = h.graded(w);
  HodgeDatum g;
  g.dim = sq.dim();
  g.weight = sq.dim() ? pure_weight(sq.dim(), w) : Filtration(0, Direction::increasing, {});
  g.hodge = h.hodge.induced(sq);
  for (const Matrix& n : h.operators) g.operators.push_back(sq.induced_map(n));
  auto it = h.graded_pairings.find(w);
  if (sq.dim() && it != h.graded_pairings.end()) g.graded_pairings[w] = it->second;
  g.twist_tag = h.twist_tag;
  return g;
}

HodgeDatum sum_operators(const HodgeDatum& h, std::size_t i, std::size_t j) {
  if (i == j || i >= h.operators.size() || j >= h.operators.size())
    throw ValidationError("sum_operators: bad operator indices");
  HodgeDatum s = h;
  s.operators[i] = h.operators[i] + h.operators[j];
  s.operators.erase(s.operators.begin() + static_cast<std::ptrdiff_t>(j));
  return s;
}

std::optional<std::string> morphism_defect(const HodgeDatum& a, const HodgeDatum& b, const Matrix& f) {
  if (f.rows() != b.dim || f.cols() != a.dim) return "map has wrong size";
  if (!f.is_rational()) return "map is not rational";
  Subspace img = image(f);
  for (int k : unite(a.weights(), b.weights())) {
    Subspace fw = apply(f, a.weight.at(k));
    if (!b.weight.at(k).contains(fw)) return "does not preserve W_" + std::to_string(k);
    if (fw != intersect(img, b.weight.at(k))) return "not strict for W_" + std::to_string(k);
  }
  for (int p : unite(a.hodge.jumps(), b.hodge.jumps()))
    if (!b.hodge.at(p).contains(apply(f, a.hodge.at(p)))) return "does not preserve F^" + std::to_string(p);
  if (a.operators.size() != b.operators.size()) return "operator count mismatch";
  for (std::size_t j = 0; j < a.operators.size(); ++j)
    if (!(f * a.operators[j] == b.operators[j] * f)) return "does not commute with operator " + std::to_string(j);
  return std::nullopt;
}

Pushout pushout(const HodgeDatum& a, const HodgeDatum& x, const HodgeDatum& y, const Matrix& f, const Matrix& g) {
  if (auto why = morphism_defect(a, x, f)) throw ValidationError("pushout: first map " + *why);
  if (auto why = morphism_defect(a, y, g)) throw ValidationError("pushout: second map " + *why);
  std::size_t n = x.dim + y.dim;
  Matrix rel = vstack(f, g * Gauss(-1));
  QuotientMap q = quotient_map(image(rel));
  std::size_t d = q.project.rows();
  Matrix ix(n, x.dim), iy(n, y.dim);
  ix.set_block(0, 0, Matrix::identity(x.dim));
  iy.set_block(x.dim, 0, Matrix::identity(y.dim));

  HodgeDatum s;
  s.dim = n;
  s.weight = sum_filtration(x.weight, y.weight);
  s.hodge = sum_filtration(x.hodge, y.hodge);

  Pushout out;
  HodgeDatum& p = out.datum;
  p.dim = d;
  p.weight = s.weight.transformed(q.project);
  p.hodge = s.hodge.transformed(q.project);
  for (std::size_t j = 0; j < x.operators.size(); ++j)
    p.operators.push_back(q.project * block_diag(x.operators[j], y.operators[j]) * q.section);
  p.twist_tag = y.twist_tag;
  out.from_x = q.project * ix;
  out.from_y = q.project * iy;

  for (int k : p.weights()) {
    Subquotient gp = p.graded(k);
    Subquotient ga = a.graded(k), gx = x.graded(k), gy = y.graded(k);
    auto px = x.graded_pairings.find(k);
    auto py = y.graded_pairings.find(k);
    std::optional<Matrix> gram;
    auto is_iso = [&](const Matrix& m, const Subquotient& tgt) {
      if (ga.dim() != tgt.dim()) return false;
      Matrix c = ga.induced_map_to(m, tgt);
      return rank(c) == c.rows();
    };
    if (is_iso(f, gx) && py != y.graded_pairings.end()) {
      gram = transport_gram(gy, py->second.matrix, out.from_y, gp);
    } else if (is_iso(g, gy) && px != x.graded_pairings.end()) {
      gram = transport_gram(gx, px->second.matrix, out.from_x, gp);
    } else if (ga.dim() == 0) {
      bool have_x = gx.dim() == 0 || px != x.graded_pairings.end();
      bool have_y = gy.dim() == 0 || py != y.graded_pairings.end();
      if (have_x && have_y) {
        Matrix basis = vstack(embed_rows(gx.lifts(), 0, n), embed_rows(gy.lifts(), x.dim, n));
        Matrix gr = block_diag(gx.dim() ? px->second.matrix : Matrix(0, 0), gy.dim() ? py->second.matrix : Matrix(0, 0));
        Matrix sg = regram(s.graded(k), basis, gr);
        gram = transport_gram(s.graded(k), sg, q.project, gp);
      }
    }
    if (gram) p.graded_pairings[k] = Pairing{*gram, -k, sign_of_weight(k)};
  }
  return out;
}

HodgeDatum subquotient_datum(const HodgeDatum& h, const Subspace& upper, const Subspace& lower) {
  Subquotient sq(upper, lower);
  HodgeDatum s;
  s.dim = sq.dim();
  s.weight = h.weight.induced(sq);
  s.hodge = h.hodge.induced(sq);
  for (const Matrix& n : h.operators) s.operators.push_back(sq.induced_map(n));
  s.twist_tag = h.twist_tag;
  return s;
}

}  // namespace hodge
