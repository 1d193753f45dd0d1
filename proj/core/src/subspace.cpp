#include "hodge/subspace.hpp"

#include <stdexcept>

namespace hodge {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Matrix echelonize(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    Gauss inv = Gauss(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Gauss f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = piv;
  return a.block(0, 0, row, a.cols());
}

std::size_t rank(const Matrix& m) { return echelonize(m).rows(); }

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  s.basis_ = echelonize(rows, &s.pivots_);
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& rows, std::size_t ambient) {
  return span(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::column_span(const Matrix& cols) { return span(cols.transpose()); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch in reduce");
  Vector out = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    Gauss f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!basis_(r, c).is_zero()) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return hodge::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch in contains");
  for (std::size_t r = 0; r < s.dim(); ++r)
    if (!contains(s.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::conj() const { return span(basis_.conj()); }

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  return kernel(basis_);
}

Subspace kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = echelonize(m, &piv);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Matrix& m) { return Subspace::column_span(m); }

namespace {
void require_same(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument(std::string("dimension mismatch in ") + op);
}
}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same(a, b, "intersect");
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same(a, b, "sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace preimage(const Matrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw std::invalid_argument("dimension mismatch in preimage");
  if (s.is_full()) return Subspace::full(m.cols());
  Subspace ann = s.annihilator();
  return kernel(ann.basis() * m);
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw std::invalid_argument("dimension mismatch in apply");
  if (s.is_zero()) return Subspace::zero(m.rows());
  return Subspace::column_span(m * s.column_basis());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("dimension mismatch in solve");
  std::vector<std::size_t> piv;
  Matrix r = echelonize(hstack(a, Matrix::column_vector(b)), &piv);
  Vector x(a.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == a.cols()) return std::nullopt;
    x[piv[k]] = r(k, a.cols());
  }
  return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  std::vector<std::size_t> piv;
  Matrix r = echelonize(hstack(a, b), &piv);
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(piv[k], c) = r(k, a.cols() + c);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(m) != m.rows()) throw std::domain_error("inverse of singular matrix");
  auto x = solve(m, Matrix::identity(m.rows()));
  return *x;
}

Gauss determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  Gauss det = 1;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).is_zero()) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Gauss f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

bool is_positive_definite_hermitian(const Matrix& m) {
  if (!m.is_hermitian()) throw std::invalid_argument("is_positive_definite_hermitian: matrix is not Hermitian");
  // Elimination without pivoting: the k-th pivot is the ratio of consecutive leading minors.
  Matrix a = m;
  std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Gauss& p = a(k, k);
    if (!p.is_real() || sgn(p.re()) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      Gauss f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return true;
}

Matrix realify_rows(const Matrix& m) {
  Matrix out(2 * m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(2 * r, c) = m(r, c).re();
      out(2 * r + 1, c) = m(r, c).im();
    }
  return out;
}

Subquotient::Subquotient(Subspace upper, Subspace lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.ambient_dim() != lower_.ambient_dim())
    throw std::invalid_argument("subquotient ambient mismatch");
  if (!upper_.contains(lower_)) throw std::invalid_argument("subquotient: lower is not contained in upper");
  std::vector<Vector> reduced;
  for (std::size_t r = 0; r < upper_.dim(); ++r) reduced.push_back(lower_.reduce(upper_.basis().row(r)));
  lifts_ = echelonize(Matrix::from_rows(reduced, upper_.ambient_dim()), &lift_pivots_);
}

Vector Subquotient::coords_unchecked(const Vector& x) const {
  Vector y = lower_.reduce(x);
  Vector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = y[lift_pivots_[k]];
  return c;
}

Vector Subquotient::coords(const Vector& x) const {
  Vector y = lower_.reduce(x);
  Vector c(dim());
  Vector rest = y;
  for (std::size_t k = 0; k < dim(); ++k) {
    c[k] = y[lift_pivots_[k]];
    if (c[k].is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (!lifts_(k, j).is_zero()) rest[j] -= c[k] * lifts_(k, j);
  }
  if (!hodge::is_zero(rest)) throw std::invalid_argument("subquotient coords: vector outside the upper space");
  return c;
}

Subspace Subquotient::induced(const Subspace& s) const {
  Subspace cut = intersect(s, upper_);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < cut.dim(); ++r) rows.push_back(coords_unchecked(cut.basis().row(r)));
  return Subspace::span(rows, dim());
}

Matrix Subquotient::induced_map(const Matrix& m) const { return induced_map_to(m, *this); }

Matrix Subquotient::induced_map_to(const Matrix& m, const Subquotient& target) const {
  for (std::size_t r = 0; r < lower_.dim(); ++r)
    if (!target.lower_.contains(m * lower_.basis().row(r)))
      throw std::invalid_argument("induced map: lower space not preserved");
  Matrix out(target.dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    Vector c = target.coords(m * lifts_.row(k));
    for (std::size_t r = 0; r < target.dim(); ++r) out(r, k) = c[r];
  }
  return out;
}

Matrix Subquotient::gram(const Matrix& ambient_gram) const {
  Matrix l = lifts_;
  return l * ambient_gram * l.transpose();
}

QuotientMap quotient_map(const Subspace& k) {
  std::size_t n = k.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : k.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  QuotientMap q{Matrix(comp.size(), n), Matrix(n, comp.size())};
  for (std::size_t j = 0; j < n; ++j) {
    Vector red = k.reduce(unit_vector(n, j));
    for (std::size_t t = 0; t < comp.size(); ++t) q.project(t, j) = red[comp[t]];
  }
  for (std::size_t t = 0; t < comp.size(); ++t) q.section(comp[t], t) = 1;
  return q;
}

}  // namespace hodge
