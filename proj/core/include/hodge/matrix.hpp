#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hodge/scalar.hpp"

namespace hodge {

using Vector = std::vector<Gauss>;

/// Dense row-major matrix over Q(i). Vectors act as columns: (M v)_r = sum_c M(r,c) v_c.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Gauss>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  /// Single column matrix.
  static Matrix column_vector(const Vector& v);
  /// Matrix unit E_{r,c} of the given shape.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Gauss& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gauss& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Gauss> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  Matrix conj() const;
  /// Conjugate transpose.
  Matrix adjoint() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_rational() const;
  bool is_hermitian() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Gauss& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Gauss& s) { return a *= s; }
  friend Matrix operator*(const Gauss& s, Matrix a) { return a *= s; }
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix pow(unsigned k) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gauss> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector conj(const Vector& v);
Vector scaled(const Vector& v, const Gauss& s);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector unit_vector(std::size_t n, std::size_t k);
/// Bilinear (not sesquilinear) evaluation u^T G v.
Gauss bilinear(const Vector& u, const Matrix& gram, const Vector& v);

/// Nilpotency index: smallest k with M^k = 0, or 0 if M is not nilpotent.
unsigned nilpotency_index(const Matrix& m);
inline bool is_nilpotent(const Matrix& m) { return m.is_square() && (m.rows() == 0 || nilpotency_index(m) > 0); }

/// Finite exponential of a nilpotent matrix. Throws if not nilpotent.
Matrix exp_nilpotent(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace hodge
