#pragma once

#include <cstddef>
#include <vector>

#include "carnot/matrix.hpp"

namespace carnot {

/// Subspace of a coordinate space over a field, stored as the row-reduced
/// echelon basis matrix. The canonical form makes equality a plain compare.
template <class F>
  requires RingTraits<F>::is_field
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>::identity(ambient);
    return s;
  }

  /// Span of the given vectors (rows).
  static Subspace span(std::size_t ambient, const std::vector<std::vector<F>>& vecs) {
    Subspace s;
    s.ambient_ = ambient;
    if (vecs.empty()) {
      s.basis_ = Matrix<F>(0, ambient);
      return s;
    }
    Reduced<F> red = reduce(Matrix<F>::from_rows(vecs));
    Matrix<F> b(red.rank, ambient);
    for (std::size_t i = 0; i < red.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) b(i, j) = red.rref(i, j);
    s.basis_ = b;
    return s;
  }

  /// Coordinate subspace spanned by the listed standard basis vectors.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& idx) {
    std::vector<std::vector<F>> vecs;
    for (std::size_t i : idx) {
      std::vector<F> v(ambient, F(0));
      v.at(i) = F(1);
      vecs.push_back(std::move(v));
    }
    return span(ambient, vecs);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<std::vector<F>> basis_rows() const {
    std::vector<std::vector<F>> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const std::vector<F>& v) const {
    if (v.size() != ambient_) throw Error("Subspace: ambient mismatch");
    // reduce v against the rref rows
    std::vector<F> w = v;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient_ && row < basis_.rows(); ++c) {
      if (basis_(row, c) == F(0)) continue;
      if (!(w[c] == F(0))) {
        F f = w[c];
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(row, j);
      }
      ++row;
    }
    for (const F& x : w)
      if (!(x == F(0))) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (const auto& r : other.basis_rows())
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Matrix<F> basis_;
};

template <class F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw Error("subspace sum: ambient mismatch");
  auto rows = u.basis_rows();
  for (auto& r : v.basis_rows()) rows.push_back(r);
  return Subspace<F>::span(u.ambient(), rows);
}

/// Exact intersection: kernel vectors (alpha, beta) of [U^t | -V^t] give
/// intersection elements alpha^t U.
template <class F>
Subspace<F> intersection(const Subspace<F>& u, const Subspace<F>& v) {
  if (u.ambient() != v.ambient()) throw Error("subspace intersection: ambient mismatch");
  const std::size_t du = u.dim(), dv = v.dim(), n = u.ambient();
  if (du == 0 || dv == 0) return Subspace<F>::zero(n);
  Matrix<F> m(n, du + dv);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < du; ++a) m(i, a) = u.basis()(a, i);
    for (std::size_t b = 0; b < dv; ++b) m(i, du + b) = -v.basis()(b, i);
  }
  Reduced<F> red = reduce(m);
  std::vector<std::vector<F>> vecs;
  for (std::size_t k = 0; k < red.kernel.cols(); ++k) {
    std::vector<F> w(n, F(0));
    for (std::size_t a = 0; a < du; ++a) {
      const F& c = red.kernel(a, k);
      if (c == F(0)) continue;
      for (std::size_t i = 0; i < n; ++i) w[i] += c * u.basis()(a, i);
    }
    vecs.push_back(std::move(w));
  }
  return Subspace<F>::span(n, vecs);
}

}  // namespace carnot
