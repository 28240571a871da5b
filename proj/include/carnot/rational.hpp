#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace carnot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a requested parameter lies off the rational locus
/// (irrational radical, off-family values, ...).
struct UnsupportedParameter : Error {
  using Error::Error;
};

/// Arbitrary-precision rational. Always kept in canonical form:
/// gcd(|num|, den) = 1 and den > 0. Serializes as "p/q" with the sign
/// on the numerator and "/q" omitted when q = 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw Error("Rational: empty string");
    mpq_class v;
    if (v.set_str(t, 10) != 0) throw Error("Rational: bad literal '" + t + "'");
    v.canonicalize();
    if (v.get_den() == 0) throw Error("Rational: zero denominator in '" + t + "'");
    return Rational(std::move(v));
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(::abs(v_)); }

  /// Exact square root if this is a perfect square of a rational, else nullopt-like flag.
  bool sqrt_exact(Rational& out) const {
    if (sign() < 0) return false;
    mpz_class num = v_.get_num(), den = v_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rational(mpq_class(rn, rd));
    return true;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr bool is_field = true;
  static constexpr const char* name = "rational";
};

}  // namespace carnot
