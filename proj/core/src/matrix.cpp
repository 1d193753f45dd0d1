#include "hodge/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Gauss>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::column_vector(const Vector& v) { return from_columns({v}, v.size()); }

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m(rows, cols);
  m(r, c) = 1;
  return m;
}

Vector Matrix::row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& z : t.data_) z = z.conj();
  return t;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

bool Matrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

bool Matrix::is_rational() const {
  for (const auto& z : data_)
    if (!z.is_real()) return false;
  return true;
}

bool Matrix::is_hermitian() const { return is_square() && *this == adjoint(); }

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Gauss& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix t = *this;
  for (auto& z : t.data_) z = -z;
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix shape mismatch in *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Gauss& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Gauss& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  require(is_square(), "pow of non-square matrix");
  Matrix out = identity(rows_);
  for (unsigned j = 0; j < k; ++j) out = out * *this;
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "set_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0, "hstack row mismatch");
  std::size_t rows = a.cols() == 0 ? b.rows() : a.rows();
  Matrix out(rows, a.cols() + b.cols());
  if (a.cols()) out.set_block(0, 0, a);
  if (b.cols()) out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0, "vstack column mismatch");
  std::size_t cols = a.rows() == 0 ? b.cols() : a.cols();
  Matrix out(a.rows() + b.rows(), cols);
  if (a.rows()) out.set_block(0, 0, a);
  if (b.rows()) out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& z : v)
    if (!z.is_zero()) return false;
  return true;
}

Vector conj(const Vector& v) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vector scaled(const Vector& v, const Gauss& s) {
  Vector out = v;
  for (auto& z : out) z *= s;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

Gauss bilinear(const Vector& u, const Matrix& gram, const Vector& v) {
  Vector gv = gram * v;
  require(u.size() == gv.size(), "bilinear size mismatch");
  Gauss s;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero() && !gv[k].is_zero()) s += u[k] * gv[k];
  return s;
}

unsigned nilpotency_index(const Matrix& m) {
  require(m.is_square(), "nilpotency of non-square matrix");
  if (m.rows() == 0) return 1;
  Matrix p = m;
  for (unsigned k = 1; k <= m.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * m;
  }
  return 0;
}

Matrix exp_nilpotent(const Matrix& m) {
  unsigned idx = nilpotency_index(m);
  if (idx == 0) throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  Matrix out = Matrix::identity(m.rows());
  Matrix term = Matrix::identity(m.rows());
  for (unsigned k = 1; k < idx; ++k) {
    term = term * m;
    term *= Gauss(Rational(1, k));
    out += term;
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hodge
