#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

/// Sparse multivariate polynomial over Rational with a fixed, ordered
/// variable list. Terms map exponent multi-indices to nonzero coefficients.
///
/// A Poly built from a bare number carries no variable list; it acts as a
/// constant in any context and is lifted when combined with a polynomial
/// that has one. Division is defined only by (nonzero) constants.
class Poly {
 public:
  using Vars = std::shared_ptr<const std::vector<std::string>>;
  using Expo = std::vector<unsigned>;

  Poly() = default;
  Poly(long n) {  // NOLINT: implicit by design
    if (n != 0) terms_.emplace(Expo{}, Rational(n));
  }
  explicit Poly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Expo{}, std::move(c));
  }

  static Vars make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  static Poly constant(const Vars& vars, Rational c) {
    Poly p;
    p.vars_ = vars;
    if (!c.is_zero()) p.terms_.emplace(Expo(vars->size(), 0), std::move(c));
    return p;
  }

  static Poly variable(const Vars& vars, const std::string& name) {
    Poly p;
    p.vars_ = vars;
    Expo e(vars->size(), 0);
    e.at(index_in(*vars, name)) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  const Vars& vars() const { return vars_; }
  const std::map<Expo, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("Poly: not a constant");
    return terms_.begin()->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned t = 0;
      for (unsigned x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  unsigned degree_in(const std::string& name) const {
    if (!vars_) return 0;
    std::size_t i = index_in(*vars_, name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    auto [x, y] = aligned(a, b);
    Poly r;
    r.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Expo e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  /// Division by a (nonzero) constant polynomial only.
  friend Poly operator/(const Poly& a, const Poly& b) {
    Rational c = b.constant_value();
    if (c.is_zero()) throw Error("Poly: division by zero");
    Poly r;
    r.vars_ = a.vars_;
    for (const auto& [e, t] : a.terms_) r.terms_.emplace(e, t / c);
    return r;
  }
  Poly operator-() const {
    Poly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rational& c, const Poly& p) {
    Poly r;
    r.vars_ = p.vars_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : p.terms_) r.terms_.emplace(e, c * t);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_ || (a.vars_ && b.vars_ && *a.vars_ == *b.vars_))
      return a.terms_ == b.terms_;
    // constant against contextual polynomial
    if (!a.is_constant() || !b.is_constant()) return false;
    return a.constant_value() == b.constant_value();
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Substitute one variable by a polynomial (or constant) over the same list.
  Poly substituted(const std::string& name, const Poly& value) const {
    if (!vars_) throw Error("Poly: substitution into a bare constant");
    std::size_t i = index_in(*vars_, name);
    Poly val = value.vars_ ? value : lifted(value, vars_);
    Poly out = constant(vars_, Rational(0));
    for (const auto& [e, c] : terms_) {
      Poly term;
      term.vars_ = vars_;
      Expo rest = e;
      unsigned k = rest[i];
      rest[i] = 0;
      term.terms_.emplace(rest, c);
      for (unsigned t = 0; t < k; ++t) term = term * val;
      out = out + term;
    }
    return out;
  }

  Poly substituted(const std::string& name, const Rational& value) const {
    return substituted(name, Poly(value));
  }

  /// Sequential substitution chain, applied in the order given.
  Poly substituted_chain(const std::vector<std::pair<std::string, Poly>>& chain) const {
    Poly p = *this;
    for (const auto& [n, v] : chain) p = p.substituted(n, v);
    return p;
  }

  /// Evaluate with every variable assigned a rational.
  Rational evaluated(const std::vector<Rational>& point) const {
    if (!vars_) return constant_value();
    if (point.size() != vars_->size()) throw Error("Poly: evaluation point size mismatch");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      out += t;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        s += c.str();
      else if (c == Rational(1))
        s += mono;
      else if (c == Rational(-1))
        s += "-" + mono;
      else
        s += c.str() + "*" + mono;
    }
    return s;
  }

 private:
  static std::size_t index_in(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error("Poly: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars.begin());
  }

  static Poly lifted(const Poly& p, const Vars& vars) {
    return constant(vars, p.constant_value());
  }

  /// Bring two operands onto a common variable list (lifting bare constants).
  static std::pair<Poly, Poly> aligned(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_ || (a.vars_ && b.vars_ && *a.vars_ == *b.vars_)) return {a, b};
    if (!a.vars_ && b.vars_) return {lifted(a, b.vars_), b};
    if (a.vars_ && !b.vars_) return {a, lifted(b, a.vars_)};
    throw Error("Poly: variable lists differ");
  }

  void add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Vars vars_;
  std::map<Expo, Rational> terms_;
};

template <>
struct RingTraits<Poly> {
  static constexpr bool is_field = false;
  static constexpr const char* name = "polynomial";
};

}  // namespace carnot
