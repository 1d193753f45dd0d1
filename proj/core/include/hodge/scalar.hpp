#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace hodge {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Element re + i*im of Q(i).
class Gauss {
 public:
  Gauss() = default;
  Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Gauss(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gauss(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)

  static Gauss i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gauss conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gauss operator-() const { return {-re_, -im_}; }
  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

  /// Powers of i: i^k for any integer k.
  static Gauss i_pow(long k);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Gauss& z);
std::ostream& operator<<(std::ostream& os, const Gauss& z);

}  // namespace hodge
