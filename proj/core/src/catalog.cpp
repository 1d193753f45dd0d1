#include "hodge/catalog.hpp"

#include <random>

#include "hodge/error.hpp"
#include "hodge/functors.hpp"

namespace hodge {

namespace {

Subspace rows(std::initializer_list<std::initializer_list<Gauss>> r) { return Subspace::span(Matrix(r)); }

Matrix elliptic_gram() { return Matrix{{0, 1}, {-1, 0}}; }

Filtration decreasing(std::size_t n, std::map<int, Subspace> s) { return Filtration(n, Direction::decreasing, std::move(s)); }
Filtration increasing(std::size_t n, std::map<int, Subspace> s) { return Filtration(n, Direction::increasing, std::move(s)); }

}  // namespace

HodgeDatum gen_tate(int r) { return tate(r); }

HodgeDatum gen_kummer(const Gauss& z, std::size_t operators) {
  HodgeDatum h;
  h.dim = 2;
  h.weight = increasing(2, {{-2, rows({{1, 0}})}, {0, Subspace::full(2)}});
  h.hodge = decreasing(2, {{-1, Subspace::full(2)}, {0, rows({{z, 1}})}});
  for (std::size_t j = 0; j < operators; ++j) h.operators.push_back(Matrix{{0, static_cast<long>(j + 1)}, {0, 0}});
  h.graded_pairings[-2] = Pairing{Matrix::identity(1), 2, 1};
  h.graded_pairings[0] = Pairing{Matrix::identity(1), 0, 1};
  return h;
}

OrbitDatum gen_elliptic_orbit(const Gauss& tau) {
  OrbitDatum o;
  o.dim = 2;
  o.weight = 1;
  o.pairing = Pairing{elliptic_gram(), -1, -1};
  o.operators.push_back(Matrix{{0, -1}, {0, 0}});
  o.hodge = decreasing(2, {{0, Subspace::full(2)}, {1, rows({{tau, 1}})}});
  return o;
}

HodgeDatum gen_elliptic_curve(const Gauss& tau) {
  OrbitDatum o = gen_elliptic_orbit(tau);
  o.operators.clear();
  return as_mixed(o);
}

OrbitDatum gen_jordan3_orbit(const Gauss& a) {
  OrbitDatum o;
  o.dim = 3;
  o.weight = 0;
  o.pairing = Pairing{Matrix{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}, 0, 1};
  o.operators.push_back(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  Gauss b = a * a / Gauss(2);
  o.hodge = decreasing(3, {{-1, Subspace::full(3)},
                           {0, rows({{b, a, 1}, {a, 1, 0}})},
                           {1, rows({{b, a, 1}})}});
  return o;
}

HodgeDatum gen_three_weight(const Gauss& a, const Gauss& b, const Gauss& c, bool with_operator) {
  HodgeDatum h;
  h.dim = 4;
  h.weight = increasing(4, {{-2, rows({{1, 0, 0, 0}})},
                            {-1, rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})},
                            {0, Subspace::full(4)}});
  Gauss mi = -Gauss::i();
  h.hodge = decreasing(4, {{-1, Subspace::full(4)}, {0, rows({{a, mi, 1, 0}, {b, 0, c, 1}})}});
  if (with_operator) {
    Matrix n(4, 4);
    n(0, 3) = 1;
    h.operators.push_back(n);
  }
  h.graded_pairings[-2] = Pairing{Matrix::identity(1), 2, 1};
  h.graded_pairings[-1] = Pairing{elliptic_gram(), 1, -1};
  h.graded_pairings[0] = Pairing{Matrix::identity(1), 0, 1};
  return h;
}

HodgeDatum gen_inadmissible() {
  HodgeDatum h;
  h.dim = 3;
  h.weight = increasing(3, {{-1, rows({{1, 0, 0}, {0, 1, 0}})}, {0, Subspace::full(3)}});
  h.hodge = decreasing(3, {{-1, Subspace::full(3)}, {0, rows({{0, 0, 1}, {-Gauss::i(), 1, 0}})}});
  Matrix n(3, 3);
  n(0, 2) = 1;
  h.operators.push_back(n);
  h.graded_pairings[-1] = Pairing{elliptic_gram(), 1, -1};
  h.graded_pairings[0] = Pairing{Matrix::identity(1), 0, 1};
  return h;
}

OrbitDatum gen_elliptic_pair(const Gauss& tau1, const Gauss& tau2) {
  OrbitDatum a = gen_elliptic_orbit(tau1), b = gen_elliptic_orbit(tau2);
  OrbitDatum o;
  o.dim = 4;
  o.weight = 1;
  o.pairing = Pairing{block_diag(a.pairing.matrix, b.pairing.matrix), -1, -1};
  Matrix z(2, 2);
  o.operators.push_back(block_diag(a.operators[0], z));
  o.operators.push_back(block_diag(z, b.operators[0]));
  o.hodge = decreasing(4, {{0, Subspace::full(4)}, {1, rows({{tau1, 1, 0, 0}, {0, 0, tau2, 1}})}});
  return o;
}

OrbitDatum gen_non_isotropic() {
  OrbitDatum o = gen_elliptic_pair(Gauss(0, 1), Gauss(0, -1));
  Matrix n = o.operators[0];
  n(0, 3) = 1;
  o.operators = {n};
  return o;
}

HodgeDatum gen_random_mhs(unsigned seed, const RandomProfile& profile) {
  std::size_t dim = 0;
  std::map<int, int> pieces;
  for (auto [w, m] : profile.pieces) {
    if (m <= 0 || pieces.count(w)) throw ValidationError("gen_random_mhs: infeasible profile (multiplicities)");
    pieces[w] = m;
    dim += static_cast<std::size_t>(m) * (w % 2 == 0 ? 1 : 2);
  }
  if (pieces.empty() || pieces.size() > 3 || dim > 6) throw ValidationError("gen_random_mhs: infeasible profile (size)");
  int bottom = pieces.begin()->first, top = pieces.rbegin()->first;
  if (profile.with_operator && (top - bottom != 2 || bottom % 2 != 0))
    throw ValidationError("gen_random_mhs: infeasible profile (operator needs even weights two apart)");

  std::mt19937 gen(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
  auto rat = [&]() { return frac(pick(-3, 3), pick(1, 3)); };

  HodgeDatum h = zero_datum();
  std::vector<std::pair<std::size_t, int>> blocks;  // (offset, weight)
  for (auto [w, m] : pieces)
    for (int t = 0; t < m; ++t) {
      HodgeDatum piece;
      if (w % 2 == 0) {
        piece = tate(-w / 2);
      } else {
        Gauss tau(rat(), -frac(pick(1, 4), pick(1, 2)));
        piece = tate_twist(gen_elliptic_curve(tau), (1 - w) / 2);
      }
      blocks.emplace_back(h.dim, w);
      h = direct_sum(h, piece);
    }
  Matrix g = Matrix::identity(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      int wr = 0, wc = 0;
      for (auto [off, w] : blocks) {
        if (off <= r) wr = w;
        if (off <= c) wc = w;
      }
      if (wr < wc) g(r, c) = Gauss(rat(), rat());
    }
  h.hodge = h.hodge.transformed(g);
  h.twist_tag = 0;
  if (profile.with_operator) {
    Matrix n(dim, dim);
    bool any = false;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        int wr = 0, wc = 0;
        for (auto [off, w] : blocks) {
          if (off <= r) wr = w;
          if (off <= c) wc = w;
        }
        if (wr == bottom && wc == top) {
          n(r, c) = pick(-2, 2);
          any = any || !n(r, c).is_zero();
        }
      }
    if (!any) {
      for (auto [off, w] : blocks)
        if (w == top) {
          n(0, off) = 1;
          break;
        }
    }
    h.operators.push_back(n);
  }
  validate(h);
  return h;
}

OrbitDatum negate_pairing(const OrbitDatum& o) {
  OrbitDatum r = o;
  r.pairing.matrix = o.pairing.matrix * Gauss(-1);
  return r;
}

HodgeDatum negate_pairing(const HodgeDatum& h, int w) {
  HodgeDatum r = h;
  auto it = r.graded_pairings.find(w);
  if (it == r.graded_pairings.end()) throw ValidationError("negate_pairing: no pairing at that weight");
  it->second.matrix = it->second.matrix * Gauss(-1);
  return r;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto mixed = [&](std::string name, HodgeDatum h, bool positive, std::string clause, std::string prov) {
    CatalogEntry e;
    e.name = std::move(name);
    e.mixed = std::move(h);
    e.positive = positive;
    e.expected_clause = std::move(clause);
    e.provenance = std::move(prov);
    out.push_back(std::move(e));
  };
  auto orbit = [&](std::string name, OrbitDatum o, bool positive, std::string clause, std::string prov) {
    CatalogEntry e;
    e.name = std::move(name);
    e.orbit = std::move(o);
    e.positive = positive;
    e.expected_clause = std::move(clause);
    e.provenance = std::move(prov);
    out.push_back(std::move(e));
  };
  Gauss i = Gauss::i();

  mixed("tate_0", gen_tate(0), true, "", "trivial: 1x1 positivity");
  mixed("tate_1", gen_tate(1), true, "", "trivial: 1x1 positivity");
  mixed("elliptic_curve", gen_elliptic_curve(), true, "", "derived: Hermitian form evaluated exactly");
  mixed("kummer_i", gen_kummer(i), true, "", "derived: graded pieces Q(0), Q(1)");
  mixed("kummer_general", gen_kummer(Gauss(frac(1, 2), 2)), true, "", "derived: graded pieces Q(0), Q(1)");
  mixed("kummer_two_operators", gen_kummer(i, 2), true, "", "derived: M(N, W) = W for both partial sums");
  mixed("three_weight", gen_three_weight(Gauss(1, 1), Gauss(frac(1, 2)), Gauss(0, 2)), true, "",
        "derived: graded pieces polarized");
  mixed("three_weight_operator", gen_three_weight(Gauss(1, 1), Gauss(frac(1, 2)), Gauss(0, 2), true), true, "",
        "derived: M(N, W) = W");
  mixed("random_kummer_type", gen_random_mhs(1, {{{-2, 2}, {0, 1}}, true}), true, "", "derived: seeded construction");
  mixed("random_three_weight", gen_random_mhs(2, {{{-2, 1}, {-1, 1}, {0, 1}}, false}), true, "",
        "derived: seeded construction");

  mixed("kummer_flipped", negate_pairing(gen_kummer(i), -2), false, "gr_-2", "derived: sign flip on gr_-2");
  mixed("three_weight_flipped", negate_pairing(gen_three_weight(Gauss(1, 1), 0, 0), -1), false, "gr_-1",
        "derived: sign flip on gr_-1");
  mixed("inadmissible", gen_inadmissible(), false, "admissibility", "derived: broken gr-isomorphism");

  orbit("elliptic_orbit", gen_elliptic_orbit(), true, "", "derived: exact Schmid clauses");
  orbit("elliptic_orbit_shifted_tau", gen_elliptic_orbit(Gauss(frac(1, 3), 3)), true, "",
        "derived: exact Schmid clauses, y > 3");
  orbit("elliptic_orbit_real_tau", gen_elliptic_orbit(Gauss(2)), true, "", "derived: exact Schmid clauses");
  orbit("jordan3_orbit", gen_jordan3_orbit(Gauss(0)), true, "", "derived: exact Schmid clauses");
  orbit("jordan3_orbit_general", gen_jordan3_orbit(Gauss(1, 1)), true, "", "derived: exact Schmid clauses");
  orbit("elliptic_pair", gen_elliptic_pair(i, Gauss(-1, 1)), true, "", "derived: sampled membership");

  orbit("elliptic_orbit_flipped", negate_pairing(gen_elliptic_orbit()), false, "primitive",
        "derived: primitive polarization sign");
  orbit("elliptic_orbit_shifted_tau_flipped", negate_pairing(gen_elliptic_orbit(Gauss(frac(1, 3), 3))), false,
        "primitive", "derived: primitive polarization sign");
  orbit("elliptic_orbit_real_tau_flipped", negate_pairing(gen_elliptic_orbit(Gauss(2))), false, "primitive",
        "derived: primitive polarization sign");
  orbit("jordan3_orbit_flipped", negate_pairing(gen_jordan3_orbit(Gauss(0))), false, "primitive",
        "derived: primitive polarization sign");
  orbit("jordan3_orbit_general_flipped", negate_pairing(gen_jordan3_orbit(Gauss(1, 1))), false, "primitive",
        "derived: primitive polarization sign");
  orbit("elliptic_pair_flipped", negate_pairing(gen_elliptic_pair(i, Gauss(-1, 1))), false, "sampled",
        "derived: sampled membership fails");
  orbit("non_isotropic", gen_non_isotropic(), false, "isotropy", "derived: bilinear identity evaluated");
  OrbitDatum shifted = gen_elliptic_orbit();
  shifted.hodge = shifted.hodge.reindexed(1);
  orbit("elliptic_orbit_filtration_shift", shifted, false, "annihilator", "derived: F shifted by one");
  return out;
}

namespace {

// Plain Gaussian elimination, kept separate from the library's echelon routines.
std::size_t raw_rank(std::vector<Vector> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Gauss f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Vector> raw_basis(const Filtration& f, int k) { return f.at(k).basis().row_list(); }

std::vector<Vector> mapped(const Matrix& m, const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) out.push_back(m * v);
  return out;
}

std::vector<Vector> join(std::vector<Vector> a, const std::vector<Vector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Null space of the columns of `cols` (each a vector): coefficient vectors x with sum x_i cols_i = 0.
std::vector<Vector> raw_null(const std::vector<Vector>& cols, std::size_t n) {
  std::size_t m = cols.size();
  if (m == 0) return {};
  std::vector<Vector> a(n, Vector(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = cols[j][i];
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    Gauss inv = Gauss(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Gauss f = a[i][c];
      for (std::size_t j = 0; j < m; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<Vector> out;
  for (std::size_t f = 0; f < m; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Vector x(m);
    x[f] = 1;
    for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = -a[t][f];
    out.push_back(x);
  }
  return out;
}

std::vector<Vector> raw_intersect(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  std::vector<Vector> cols = a;
  for (const auto& v : b) cols.push_back(scaled(v, Gauss(-1)));
  std::vector<Vector> out;
  for (const auto& x : raw_null(cols, n)) {
    Vector v(n);
    for (std::size_t i = 0; i < a.size(); ++i) v = v + scaled(a[i], x[i]);
    out.push_back(v);
  }
  return out;
}

// {x in U : m x in L} for spanning sets U, L.
std::vector<Vector> raw_preimage_in(const Matrix& m, const std::vector<Vector>& u, const std::vector<Vector>& l,
                                    std::size_t n) {
  std::vector<Vector> cols = mapped(m, u);
  for (const auto& v : l) cols.push_back(scaled(v, Gauss(-1)));
  std::vector<Vector> out;
  for (const auto& x : raw_null(cols, n)) {
    Vector v(n);
    for (std::size_t i = 0; i < u.size(); ++i) v = v + scaled(u[i], x[i]);
    out.push_back(v);
  }
  return out;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::size_t ra = raw_rank(a), rb = raw_rank(b);
  return ra == rb && raw_rank(join(a, b)) == ra;
}

bool shift_axiom(const Matrix& n, const Filtration& m, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) {
    auto low = raw_basis(m, k - 2);
    if (raw_rank(join(low, mapped(n, raw_basis(m, k)))) != raw_rank(low)) return false;
  }
  return true;
}

}  // namespace

bool oracle_monodromy_axioms(const Matrix& n, const Filtration& m, int center) {
  if (n.rows() == 0) return true;
  int lo = m.lowest() - 2, hi = m.highest() + 2;
  if (!shift_axiom(n, m, lo, hi)) return false;
  int span = std::max(hi - center, center - lo);
  for (int j = 0; j <= span; ++j) {
    auto wk = raw_basis(m, center + j), wk1 = raw_basis(m, center + j - 1);
    auto wl = raw_basis(m, center - j), wl1 = raw_basis(m, center - j - 1);
    std::size_t top = raw_rank(wk) - raw_rank(wk1);
    std::size_t bottom = raw_rank(wl) - raw_rank(wl1);
    if (top != bottom) return false;
    Matrix nj = n.pow(static_cast<unsigned>(j));
    std::size_t image = raw_rank(join(wl1, mapped(nj, wk))) - raw_rank(wl1);
    if (image != top) return false;
  }
  return true;
}

bool oracle_relative_axioms(const Matrix& n, const Filtration& w, const Filtration& m) {
  std::size_t dim = n.rows();
  if (dim == 0) return true;
  int lo = std::min(w.lowest(), m.lowest()) - 2, hi = std::max(w.highest(), m.highest()) + 2;
  if (!shift_axiom(n, m, lo, hi)) return false;
  for (int k : w.jumps()) {
    auto wk = raw_basis(w, k), wl = raw_basis(w, k - 1);
    // Induced filtration on gr_k, as subspaces of W_k containing W_{k-1}.
    auto induced = [&](int i) { return join(raw_intersect(raw_basis(m, i), wk, dim), wl); };
    // Monodromy filtration of N on W_k / W_{k-1} centered at k:
    // sum over b >= max(0, k - i) of ker N^{i-k+b+1} cap im N^b (relative to W_{k-1}).
    for (int i = lo; i <= hi; ++i) {
      std::vector<Vector> expected = wl;
      for (int b = std::max(0, k - i); b <= static_cast<int>(dim); ++b) {
        int e = i - k + b + 1;
        if (e <= 0) continue;
        auto ker = raw_preimage_in(n.pow(static_cast<unsigned>(e)), wk, wl, dim);
        auto img = join(mapped(n.pow(static_cast<unsigned>(b)), wk), wl);
        expected = join(expected, raw_intersect(ker, img, dim));
      }
      if (!same_span(induced(i), expected)) return false;
    }
  }
  return true;
}

}  // namespace hodge
