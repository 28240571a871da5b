#pragma once

#include <array>

#include "carnot/lie.hpp"
#include "carnot/matrix.hpp"

// Fixed conventions for the three-dimensional blocks used throughout the
// model algebras:
//   * star is pinned by  A x = (star A) x x,  so star(A_12) = e_3,
//     star(A_23) = e_1, star(A_31) = e_2, with A_ij = e_j e_i^t - e_i e_j^t.
//   * the traceless-symmetric block s uses the ordered basis
//     (S_12, S_23, S_13, D_1 - D_2, D_2 - D_3), S_ij = e_j e_i^t + e_i e_j^t.

namespace carnot {

template <class R>
using V3 = std::array<R, 3>;

template <class R>
using S5 = std::array<R, 5>;  // coordinates in the s basis

template <class R>
V3<R> v3_zero() {
  return {R(0), R(0), R(0)};
}

template <class R>
V3<R> v3_add(const V3<R>& a, const V3<R>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

template <class R>
V3<R> v3_scale(const R& c, const V3<R>& a) {
  return {c * a[0], c * a[1], c * a[2]};
}

template <class R>
V3<R> cross(const V3<R>& a, const V3<R>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class R>
R dot(const V3<R>& a, const V3<R>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// unstar(x) v = x cross v.
template <class R>
Matrix<R> unstar(const V3<R>& x) {
  Matrix<R> m(3, 3);
  m(0, 1) = -x[2]; m(0, 2) = x[1];
  m(1, 0) = x[2];  m(1, 2) = -x[0];
  m(2, 0) = -x[1]; m(2, 1) = x[0];
  return m;
}

template <class R>
V3<R> star(const Matrix<R>& a) {
  return {a(2, 1), a(0, 2), a(1, 0)};
}

template <class R>
Matrix<R> sym_from_coords(const S5<R>& c) {
  Matrix<R> m(3, 3);
  m(0, 1) = c[0]; m(1, 0) = c[0];           // S_12
  m(1, 2) = c[1]; m(2, 1) = c[1];           // S_23
  m(0, 2) = c[2]; m(2, 0) = c[2];           // S_13
  m(0, 0) = c[3] + R(0);                    // D_1 - D_2 and D_2 - D_3 diagonals
  m(1, 1) = c[4] - c[3];
  m(2, 2) = -c[4];
  return m;
}

template <class R>
S5<R> coords_from_sym(const Matrix<R>& m) {
  return {m(0, 1), m(1, 2), m(0, 2), m(0, 0), R(0) - m(2, 2)};
}

/// x odot y = (y x^t + x y^t)/2 - <x,y>/3 I, reported in s coordinates.
/// Requires 2 and 3 invertible in R (holds for all rings used here).
template <class R>
S5<R> odot(const V3<R>& x, const V3<R>& y) {
  Matrix<R> m(3, 3);
  R half = R(1) / R(2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = half * (y[i] * x[j] + x[i] * y[j]);
  R third = R(1) / R(3);
  R d = dot(x, y);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) -= third * d;
  return coords_from_sym(m);
}

template <class R>
S5<R> s5_add(const S5<R>& a, const S5<R>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], a[4] + b[4]};
}

template <class R>
S5<R> s5_sub(const S5<R>& a, const S5<R>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3], a[4] - b[4]};
}

template <class R>
S5<R> s5_scale(const R& c, const S5<R>& a) {
  return {c * a[0], c * a[1], c * a[2], c * a[3], c * a[4]};
}

// block access into flat coordinate vectors
template <class R>
V3<R> get3(const Vec<R>& v, std::size_t off) {
  return {v[off], v[off + 1], v[off + 2]};
}

template <class R>
S5<R> get5(const Vec<R>& v, std::size_t off) {
  return {v[off], v[off + 1], v[off + 2], v[off + 3], v[off + 4]};
}

template <class R>
void add3(Vec<R>& v, std::size_t off, const V3<R>& x) {
  for (std::size_t i = 0; i < 3; ++i) v[off + i] += x[i];
}

template <class R>
void add5(Vec<R>& v, std::size_t off, const S5<R>& x) {
  for (std::size_t i = 0; i < 5; ++i) v[off + i] += x[i];
}

template <class R>
V3<R> matvec3(const Matrix<R>& m, const V3<R>& x) {
  V3<R> out = v3_zero<R>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i] += m(i, j) * x[j];
  return out;
}

inline std::vector<std::string> s_labels(const std::string& prefix = "S") {
  return {prefix + "12", prefix + "23", prefix + "13", prefix + "d12", prefix + "d23"};
}

}  // namespace carnot
