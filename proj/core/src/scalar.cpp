#include "hodge/scalar.hpp"

#include <stdexcept>

namespace hodge {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (seen_slash || !digit_before) throw std::invalid_argument("malformed rational '" + text + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Rational q;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Gauss c = o.conj();
  *this *= c;
  re_ /= n;
  im_ /= n;
  return *this;
}

Gauss Gauss::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

std::string to_string(const Gauss& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + "i";
  std::string im = to_string(z.im());
  if (im[0] != '-') im = "+" + im;
  return to_string(z.re()) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) { return os << to_string(z); }

}  // namespace hodge
