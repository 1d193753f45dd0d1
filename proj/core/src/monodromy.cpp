#include "hodge/monodromy.hpp"

#include <functional>
#include <numeric>

#include "hodge/error.hpp"

namespace hodge {

namespace {

using StepMap = std::map<int, Subspace>;

Subspace step_at(const StepMap& m, int k, std::size_t n) {
  auto it = m.upper_bound(k);
  if (it == m.begin()) return Subspace::zero(n);
  return std::prev(it)->second;
}

// Fills W(N) on U/L (N U in U, N L in L) centered at 0: W_{-d-1} = L, W_d = U.
void peel(const Matrix& n, const Subspace& u, const Subspace& l, StepMap& out) {
  if (u == l) return;
  std::size_t d = 0;
  Matrix p = n;
  while (!l.contains(apply(p, u))) {
    ++d;
    p = p * n;
  }
  int di = static_cast<int>(d);
  out[di] = u;
  out[-di - 1] = l;
  if (d == 0) return;
  Matrix nd = n.pow(static_cast<unsigned>(d));
  Subspace upper = intersect(u, preimage(nd, l));
  Subspace lower = sum(apply(nd, u), l);
  out[di - 1] = upper;
  out[-di] = lower;
  peel(n, upper, lower, out);
}

StepMap shifted(const StepMap& m, int w) {
  StepMap out;
  for (const auto& [k, s] : m) out.emplace(k + w, s);
  return out;
}

}  // namespace

bool satisfies_monodromy_axioms(const Matrix& n, const Filtration& m, int center) {
  if (m.ambient_dim() != n.rows()) return false;
  std::size_t dim = n.rows();
  if (dim == 0) return true;
  int lo = m.lowest() - 2, hi = m.highest() + 2;
  for (int k = lo; k <= hi; ++k)
    if (!m.at(k - 2).contains(apply(n, m.at(k)))) return false;
  int span = std::max(hi - center, center - lo);
  for (int j = 1; j <= span; ++j) {
    Subquotient top = m.graded(center + j), bottom = m.graded(center - j);
    if (top.dim() != bottom.dim()) return false;
    if (top.dim() == 0) continue;
    Matrix c = top.induced_map_to(n.pow(static_cast<unsigned>(j)), bottom);
    if (rank(c) != c.rows()) return false;
  }
  return true;
}

MonodromyFiltration weight_monodromy(const Matrix& n) {
  if (!is_nilpotent(n)) throw ValidationError("weight_monodromy: operator is not nilpotent");
  std::size_t dim = n.rows();
  StepMap steps;
  peel(n, Subspace::full(dim), Subspace::zero(dim), steps);
  Filtration f(dim, Direction::increasing, std::move(steps));
  if (!satisfies_monodromy_axioms(n, f, 0)) throw HodgeError("weight_monodromy: axiom verification failed");
  return {f, 0};
}

MonodromyFiltration shift(const MonodromyFiltration& m, int w) { return {m.filtration.reindexed(w), m.center + w}; }

bool satisfies_relative_axioms(const Matrix& n, const Filtration& w, const Filtration& m) {
  std::size_t dim = n.rows();
  if (m.ambient_dim() != dim || w.ambient_dim() != dim) return false;
  if (dim == 0) return true;
  int lo = std::min(m.lowest(), w.lowest()) - 2, hi = std::max(m.highest(), w.highest()) + 2;
  for (int k = lo; k <= hi; ++k)
    if (!m.at(k - 2).contains(apply(n, m.at(k)))) return false;
  for (int k : w.jumps()) {
    Subspace wk = w.at(k), wl = w.at(k - 1);
    auto cut = [&](int i) { return sum(intersect(m.at(i), wk), wl); };
    for (int j = 0; j <= hi - lo; ++j) {
      Subspace a = cut(k + j), a_ = cut(k + j - 1), b = cut(k - j), b_ = cut(k - j - 1);
      if (a.dim() - a_.dim() != b.dim() - b_.dim()) return false;
      if (j == 0) continue;
      Matrix nj = n.pow(static_cast<unsigned>(j));
      Subspace img = apply(nj, a);
      if (!b.contains(img)) return false;
      if (sum(img, b_) != b) return false;
    }
  }
  return true;
}

std::optional<Filtration> relative_monodromy(const Matrix& n, const Filtration& w) {
  std::size_t dim = n.rows();
  if (w.ambient_dim() != dim) throw ValidationError("relative_monodromy: dimension mismatch");
  if (!is_nilpotent(n)) throw ValidationError("relative_monodromy: operator is not nilpotent");
  for (const auto& [k, s] : w.steps())
    if (!s.contains(apply(n, s))) throw ValidationError("relative_monodromy: N does not preserve W");
  if (dim == 0) return w;

  auto weights = w.jumps();
  StepMap m;
  peel(n, w.at(weights[0]), Subspace::zero(dim), m);
  m = shifted(m, weights[0]);

  for (std::size_t layer = 1; layer < weights.size(); ++layer) {
    int b = weights[layer];
    Subspace vp = w.at(b - 1), v = w.at(b);
    StepMap bar;
    peel(n, v, vp, bar);
    bar = shifted(bar, b);

    // Graded splitting of the induced filtration on gr_b, as ambient lifts s(g).
    struct Gen {
      int j;
      Vector lift;
    };
    std::vector<Gen> gens;
    for (const auto& [j, s] : bar) {
      Subquotient sq(s, j == bar.begin()->first ? s : step_at(bar, j - 1, dim));
      for (std::size_t t = 0; t < sq.dim(); ++t) gens.push_back({j, sq.lift(t)});
    }
    Subquotient d(v, vp);
    std::vector<Vector> gen_coords;
    for (const auto& g : gens) gen_coords.push_back(d.coords(g.lift));
    Matrix gen_matrix = Matrix::from_columns(gen_coords, d.dim());

    std::size_t p = vp.dim();
    Matrix basis = vp.column_basis();
    std::size_t unknowns = gens.size() * p;
    Matrix system(0, unknowns);
    Vector rhs;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vector ns = n * gens[g].lift;
      auto a = solve(gen_matrix, d.coords(ns));
      if (!a) throw HodgeError("relative_monodromy: graded splitting failed");
      Vector defect = ns;
      for (std::size_t h = 0; h < gens.size(); ++h)
        if (!(*a)[h].is_zero()) defect = defect - scaled(gens[h].lift, (*a)[h]);
      Subspace target = step_at(m, gens[g].j - 2, dim);
      Subspace ann = target.annihilator();
      if (ann.dim() == 0) continue;
      Matrix phi = ann.basis();
      Matrix rows(phi.rows(), unknowns);
      if (p > 0) {
        rows.set_block(0, g * p, phi * n * basis);
        for (std::size_t h = 0; h < gens.size(); ++h) {
          if ((*a)[h].is_zero()) continue;
          Matrix blk = phi * basis * (-(*a)[h]);
          rows.set_block(0, h * p, rows.block(0, h * p, phi.rows(), p) + blk);
        }
      }
      system = vstack(system, rows);
      Vector r = phi * defect;
      for (auto& x : r) rhs.push_back(-x);
    }
    Vector x(unknowns);
    if (system.rows() > 0) {
      auto sol = solve(system, rhs);
      if (!sol) return std::nullopt;
      x = *sol;
    }

    StepMap next;
    std::vector<int> keys;
    for (const auto& [k, s] : m) keys.push_back(k);
    for (const auto& [k, s] : bar) keys.push_back(k);
    for (int k : keys) {
      Subspace s = step_at(m, k, dim);
      std::vector<Vector> extra;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].j > k) continue;
        Vector e = gens[g].lift;
        for (std::size_t t = 0; t < p; ++t)
          if (!x[g * p + t].is_zero()) e = e + scaled(basis.column(t), x[g * p + t]);
        extra.push_back(e);
      }
      if (!extra.empty()) s = sum(s, Subspace::span(extra, dim));
      next[k] = s;
    }
    m = std::move(next);
  }
  Filtration out(dim, Direction::increasing, std::move(m));
  if (!satisfies_relative_axioms(n, w, out)) return std::nullopt;
  return out;
}

VerdictReport admissibility_checks(const std::vector<Matrix>& ops, const Filtration& w,
                                   const std::vector<Rational>& grid) {
  VerdictReport r;
  if (ops.empty()) {
    r.add("admissibility: no operators", true);
    return r;
  }
  std::size_t dim = w.ambient_dim();
  Matrix partial(dim, dim);
  std::optional<Filtration> full;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    partial = partial + ops[j];
    auto m = relative_monodromy(partial, w);
    r.add("admissibility: M(N_1+...+N_" + std::to_string(j + 1) + ", W) exists", m.has_value());
    if (j + 1 == ops.size()) full = m;
  }
  if (!full || ops.size() < 2 || grid.empty()) return r;
  // Sampled interior points: each coordinate runs over the grid, cyclically offset per operator.
  std::size_t samples = ops.size() == 2 ? grid.size() * grid.size() : grid.size();
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix comb(dim, dim);
    std::string label;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      std::size_t idx = ops.size() == 2 ? (j == 0 ? s / grid.size() : s % grid.size()) : (s + j) % grid.size();
      comb = comb + ops[j] * Gauss(grid[idx]);
      label += (j ? "," : "") + to_string(grid[idx]);
    }
    auto m = relative_monodromy(comb, w);
    r.add("admissibility: cone sample (" + label + ")", m && *m == *full);
  }
  return r;
}

std::vector<Clause> check_merge_facts(const HodgeDatum& h) {
  std::vector<Clause> out;
  if (h.operators.size() < 2) {
    out.push_back({"fewer than two operators", false, ""});
    return out;
  }
  const Matrix& n1 = h.operators[0];
  const Matrix& n2 = h.operators[1];
  auto w1 = relative_monodromy(n1, h.weight);
  bool fact1 = w1.has_value();
  if (w1) {
    std::vector<Matrix> rest(h.operators.begin() + 1, h.operators.end());
    fact1 = admissibility_checks(rest, *w1, {}).all_passed();
  }
  out.push_back({"fact 1: M(N_1, W) exists and (W1, N_2, ...) admissible", fact1, ""});
  std::optional<Filtration> w2;
  if (w1) w2 = relative_monodromy(n2, *w1);
  auto m12 = relative_monodromy(n1 + n2, h.weight);
  out.push_back({"fact 2: M(N_2, W1) = M(N_1+N_2, W)", w2 && m12 && *w2 == *m12, ""});
  std::vector<Matrix> merged{n1 + n2};
  merged.insert(merged.end(), h.operators.begin() + 2, h.operators.end());
  out.push_back({"fact 3: (W, N_1+N_2, N_3, ...) admissible", admissibility_checks(merged, h.weight, {}).all_passed(), ""});
  return out;
}

}  // namespace hodge
