#pragma once

#include <string>
#include <string_view>

#include "carnot/rational.hpp"

namespace carnot {

/// Gaussian rational a + b*i with exact components. Serializes as
/// "RE+IM*i" / "RE-IM*i", both parts always present.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long n) : re_(n) {}  // NOLINT: implicit by design
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// |z|^2 = re^2 + im^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm2();
    if (n.is_zero()) throw Error("Gaussian: division by zero");
    Gaussian c = a * b.conj();
    return Gaussian(c.re_ / n, c.im_ / n);
  }
  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  std::string str() const {
    std::string s = re_.str();
    s += (im_.sign() < 0) ? "-" : "+";
    s += im_.abs().str();
    s += "*i";
    return s;
  }

  static Gaussian parse(std::string_view s) {
    // grammar: RE SIGN IMABS "*i"  |  RE   (bare rational accepted on input)
    if (s.size() < 2 || s.substr(s.size() - 2) != "*i")
      return Gaussian(Rational::parse(s));
    std::string_view body = s.substr(0, s.size() - 2);
    // split at the last '+' or '-' that is not the leading sign of RE
    for (std::size_t p = body.size(); p-- > 1;) {
      char c = body[p];
      if ((c == '+' || c == '-') && body[p - 1] != '/' && body[p - 1] != '+' && body[p - 1] != '-') {
        Rational re = Rational::parse(body.substr(0, p));
        Rational im = Rational::parse(body.substr(p + 1));
        if (c == '-') im = -im;
        return Gaussian(re, im);
      }
    }
    throw Error("Gaussian: bad literal '" + std::string(s) + "'");
  }

 private:
  Rational re_, im_;
};

template <>
struct RingTraits<Gaussian> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "gaussian";
};

}  // namespace carnot
