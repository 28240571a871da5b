#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

/// Dense matrix over an exact ring R. Arithmetic never rounds; elimination
/// (reduce/solve/inverse) is available only when R is a field.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, R fill = R(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<R>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("Matrix: ragged initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<R>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw Error("Matrix: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<R> row(std::size_t i) const {
    return std::vector<R>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<R> column(std::size_t j) const {
    std::vector<R> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik == R(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const R& c, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
    return r;
  }
  Matrix operator-() const { return R(-1) * *this; }

  std::vector<R> apply(const std::vector<R>& v) const {
    if (v.size() != cols_) throw Error("Matrix: vector length mismatch");
    std::vector<R> out(rows_, R(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == R(0))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == R(0))) return false;
    return true;
  }

  Matrix commutator(const Matrix& o) const { return *this * o - o * *this; }

  R trace() const {
    R t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

/// Result of exact Gauss-Jordan reduction over a field.
template <class F>
struct Reduced {
  Matrix<F> rref;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Matrix<F> kernel;  // columns form a kernel basis
  Matrix<F> image;   // columns form an image basis (pivot columns of the input)
};

template <class F>
  requires RingTraits<F>::is_field
Reduced<F> reduce(const Matrix<F>& m) {
  Reduced<F> out;
  Matrix<F> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!(a(i, c) == F(0))) { pr = i; break; }
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pr, j));
    F inv = F(1) / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) = inv * a(r, j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == F(0)) continue;
      F f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  out.rref = a;
  out.pivots = pivots;
  out.rank = pivots.size();

  std::vector<std::vector<F>> kern;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(cols, F(0));
    v[c] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, c);
    kern.push_back(std::move(v));
  }
  out.kernel = kern.empty() ? Matrix<F>(cols, 0) : Matrix<F>::from_columns(kern);

  std::vector<std::vector<F>> img;
  for (std::size_t c : pivots) img.push_back(m.column(c));
  out.image = img.empty() ? Matrix<F>(rows, 0) : Matrix<F>::from_columns(img);
  return out;
}

template <class F>
  requires RingTraits<F>::is_field
std::size_t rank(const Matrix<F>& m) {
  return reduce(m).rank;
}

/// Solve a x = b; nullopt when inconsistent.
template <class F>
  requires RingTraits<F>::is_field
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw Error("solve: rhs length mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Reduced<F> red = reduce(aug);
  for (std::size_t p : red.pivots)
    if (p == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    x[red.pivots[i]] = red.rref(i, a.cols());
  return x;
}

template <class F>
  requires RingTraits<F>::is_field
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw Error("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  Reduced<F> red = reduce(aug);
  if (red.rank < n || red.pivots[n - 1] >= n) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.rref(i, n + j);
  return inv;
}

/// Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix,
/// computed by symmetric congruence pivoting; no square roots taken.
struct Signature {
  std::size_t plus = 0, minus = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature sym_signature(const Matrix<Rational>& s) {
  const std::size_t n = s.rows();
  if (s.cols() != n) throw Error("sym_signature: matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (s(i, j) != s(j, i)) throw Error("sym_signature: matrix not symmetric");

  Matrix<Rational> m = s;
  Signature sig;
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t pv = n;
    for (std::size_t i = pos; i < n; ++i)
      if (!m(i, i).is_zero()) { pv = i; break; }
    if (pv == n) {
      // all remaining diagonal zero; congruence-add to expose a pivot
      bool found = false;
      for (std::size_t i = pos; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!m(i, j).is_zero()) {
            for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
            for (std::size_t r = 0; r < n; ++r) m(r, i) += m(r, j);
            found = true;
          }
      if (!found) break;  // remaining block is zero
      continue;
    }
    if (pv != pos) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pos, c), m(pv, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, pos), m(r, pv));
    }
    Rational p = m(pos, pos);
    if (p.sign() > 0) ++sig.plus; else ++sig.minus;
    for (std::size_t i = pos + 1; i < n; ++i) {
      Rational f = m(i, pos) / p;
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) m(i, c) -= f * m(pos, c);
      for (std::size_t r = 0; r < n; ++r) m(r, i) -= f * m(r, pos);
    }
    ++pos;
  }
  sig.zero = n - sig.plus - sig.minus;
  return sig;
}

}  // namespace carnot
