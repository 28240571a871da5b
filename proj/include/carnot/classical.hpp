#pragma once

#include <string>
#include <vector>

#include "carnot/gaussian.hpp"
#include "carnot/lie.hpp"
#include "carnot/space3.hpp"

namespace carnot {

namespace detail {

/// Solve-back helper: expresses matrices in the span of a fixed basis,
/// erroring when a commutator escapes it.
template <class F>
struct MatrixSpan {
  std::vector<Matrix<F>> basis;
  std::size_t rows = 0, cols = 0;
  Matrix<F> system;  // (rows*cols) x basis.size()

  explicit MatrixSpan(std::vector<Matrix<F>> b) : basis(std::move(b)) {
    rows = basis.at(0).rows();
    cols = basis.at(0).cols();
    system = Matrix<F>(rows * cols, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) system(i * cols + j, k) = basis[k](i, j);
  }

  Matrix<F> assemble(const Vec<F>& coords) const {
    Matrix<F> m(rows, cols);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (!(coords[k] == F(0))) m = m + coords[k] * basis[k];
    return m;
  }

  Vec<F> coordinates(const Matrix<F>& m, const char* what) const {
    Vec<F> flat(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) flat[i * cols + j] = m(i, j);
    auto x = solve(system, flat);
    if (!x) throw Error(std::string(what) + ": matrix escapes the parameterized span");
    return *x;
  }
};

template <class F>
LieAlgebra<F> algebra_from_matrix_basis(std::string name, std::vector<std::string> labels,
                                        std::vector<Matrix<F>> basis) {
  MatrixSpan<F> span(std::move(basis));
  return make_algebra<F>(std::move(name), std::move(labels), [span](const Vec<F>& u, const Vec<F>& v) {
    Matrix<F> mu = span.assemble(u), mv = span.assemble(v);
    return span.coordinates(mu.commutator(mv), "matrix algebra bracket");
  });
}

}  // namespace detail

/// so(n) with the A_ij = e_j e_i^t - e_i e_j^t basis; for n = 3 the basis is
/// reordered to (star^{-1}e_1, star^{-1}e_2, star^{-1}e_3).
template <class F = Rational>
std::vector<std::pair<std::size_t, std::size_t>> so_rotation_pairs(std::size_t n) {
  if (n == 3) return {{1, 2}, {2, 0}, {0, 1}};  // A_23, A_31, A_12
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

/// Basis matrices for the (n+1) x (n+1) model of so(n+1) (boost_sign = -1,
/// lower-left block -x^t) or so(n,1) (boost_sign = +1): rotations first,
/// then the boosts B_k = E_{k,n+1} + boost_sign E_{n+1,k}.
template <class F = Rational>
std::vector<Matrix<F>> so_model_matrices(std::size_t n, int boost_sign) {
  std::vector<Matrix<F>> mats;
  for (auto [i, j] : so_rotation_pairs(n)) {
    Matrix<F> m(n + 1, n + 1);
    m(j, i) = F(1);
    m(i, j) = F(-1);
    mats.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<F> m(n + 1, n + 1);
    m(k, n) = F(1);
    m(n, k) = F(boost_sign);
    mats.push_back(std::move(m));
  }
  return mats;
}

template <class F = Rational>
std::vector<std::string> so_model_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (auto [i, j] : so_rotation_pairs(n))
    labels.push_back("R" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t k = 0; k < n; ++k) labels.push_back("B" + std::to_string(k + 1));
  return labels;
}

/// so(n+1) in its rotation/boost coordinates.
template <class F = Rational>
LieAlgebra<F> so_plus(std::size_t n) {
  return detail::algebra_from_matrix_basis<F>("so(" + std::to_string(n + 1) + ")",
                                              so_model_labels(n), so_model_matrices<F>(n, -1));
}

/// so(n,1) in its rotation/boost coordinates.
template <class F = Rational>
LieAlgebra<F> so_lorentz(std::size_t n) {
  return detail::algebra_from_matrix_basis<F>("so(" + std::to_string(n) + ",1)",
                                              so_model_labels(n), so_model_matrices<F>(n, +1));
}

/// General so(p,q) for the Killing-form suite.
inline LieAlgebra<Rational> so_pq(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (n < 2) throw Error("so_pq: need p+q >= 2");
  std::vector<Matrix<Rational>> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix<Rational> m(n, n);
      bool cross_block = (i < p) != (j < p);
      m(j, i) = Rational(1);
      m(i, j) = cross_block ? Rational(1) : Rational(-1);
      mats.push_back(std::move(m));
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return detail::algebra_from_matrix_basis<Rational>(
      "so(" + std::to_string(p) + "," + std::to_string(q) + ")", labels, std::move(mats));
}

inline LieAlgebra<Rational> so3() {
  return make_algebra<Rational>("so(3)", {"R1", "R2", "R3"},
                                [](const Vec<Rational>& u, const Vec<Rational>& v) {
                                  V3<Rational> a{u[0], u[1], u[2]}, b{v[0], v[1], v[2]};
                                  V3<Rational> c = cross(a, b);
                                  return Vec<Rational>{c[0], c[1], c[2]};
                                });
}

inline LieAlgebra<Rational> so31() { return so_lorentz(3); }
inline LieAlgebra<Rational> so4() { return so_plus(3); }

inline LieAlgebra<Rational> abelian(std::size_t n, const std::string& name = "") {
  return LieAlgebra<Rational>(name.empty() ? "R^" + std::to_string(n) : name,
                              indexed_labels("t", n));
}

/// so(n+1, C) over Gaussian scalars (same rotation/boost coordinates).
inline LieAlgebra<Gaussian> so_plus_complex(std::size_t n) {
  auto g = detail::algebra_from_matrix_basis<Gaussian>(
      "so(" + std::to_string(n + 1) + ",C)", so_model_labels(n), so_model_matrices<Gaussian>(n, -1));
  return g;
}

/// The six-dimensional family b_k on R^3 + R^3:
///   [(x1,y1),(x2,y2)] = (x1 x y2 + y1 x x2, k x1 x x2 + y1 x y2).
inline LieAlgebra<Rational> b_family(const Rational& k) {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  auto g = make_algebra<Rational>("b(" + k.str() + ")", labels,
                                  [k](const Vec<Rational>& u, const Vec<Rational>& v) {
                                    V3<Rational> x1 = get3(u, 0), y1 = get3(u, 3);
                                    V3<Rational> x2 = get3(v, 0), y2 = get3(v, 3);
                                    Vec<Rational> out(6, Rational(0));
                                    add3(out, 0, v3_add(cross(x1, y2), cross(y1, x2)));
                                    add3(out, 3, v3_add(v3_scale(k, cross(x1, x2)), cross(y1, y2)));
                                    return out;
                                  });
  g.set_param("k", k);
  return g;
}

// ---------------------------------------------------------------------------
// The exceptional algebra g2

/// Split form: the 7x7 parameterization
///   M(x,y,S,w) = [ 0      -2y^t        -2x^t
///                  x   S + star^{-1}w  star^{-1}y
///                  y   star^{-1}x   -S + star^{-1}w ].
/// Structure constants are solved back from matrix commutators; a commutator
/// leaving the 14-dimensional span is an error.
inline Matrix<Rational> g2_split_matrix(const V3<Rational>& x, const V3<Rational>& y,
                                        const S5<Rational>& s, const V3<Rational>& w) {
  Matrix<Rational> m(7, 7);
  Matrix<Rational> sm = sym_from_coords(s);
  Matrix<Rational> wu = unstar(w), xu = unstar(x), yu = unstar(y);
  for (std::size_t j = 0; j < 3; ++j) {
    m(0, 1 + j) = Rational(-2) * y[j];
    m(0, 4 + j) = Rational(-2) * x[j];
    m(1 + j, 0) = x[j];
    m(4 + j, 0) = y[j];
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(1 + i, 1 + j) = sm(i, j) + wu(i, j);
      m(1 + i, 4 + j) = yu(i, j);
      m(4 + i, 1 + j) = xu(i, j);
      m(4 + i, 4 + j) = -sm(i, j) + wu(i, j);
    }
  return m;
}

inline std::vector<std::string> g2_block_labels() {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  for (auto& l : s_labels()) labels.push_back(l);
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  return labels;
}

inline LieAlgebra<Rational> g2_split() {
  std::vector<Matrix<Rational>> basis;
  auto e3 = [](std::size_t k) {
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    return e;
  };
  V3<Rational> z3 = v3_zero<Rational>();
  S5<Rational> z5{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(g2_split_matrix(e3(k), z3, z5, z3));
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(g2_split_matrix(z3, e3(k), z5, z3));
  for (std::size_t k = 0; k < 5; ++k) {
    S5<Rational> s = z5;
    s[k] = Rational(1);
    basis.push_back(g2_split_matrix(z3, z3, s, z3));
  }
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(g2_split_matrix(z3, z3, z5, e3(k)));
  return detail::algebra_from_matrix_basis<Rational>("g2_split", g2_block_labels(), std::move(basis));
}

/// Compact form on su(3) + C^3 in real coordinates (S, w, x, y):
/// an element is (iS + star^{-1}w, y + ix). The C^3 x C^3 bracket uses the
/// unsimplified expression
///   ( 3 (y2+ix2)(y1-ix1)^t - 3 (y1+ix1)(y2-ix2)^t + 2i(<x1,y2> - <y1,x2>) I,
///     2 (y1-ix1) x (y2-ix2) ).
inline LieAlgebra<Rational> g2_compact() {
  std::vector<std::string> labels = s_labels();
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  for (auto& l : indexed_labels("x", 3)) labels.push_back(l);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);

  auto to_su = [](const S5<Rational>& s, const V3<Rational>& w) {
    Matrix<Gaussian> u(3, 3);
    Matrix<Rational> sm = sym_from_coords(s), wu = unstar(w);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) u(i, j) = Gaussian(wu(i, j), sm(i, j));
    return u;
  };
  auto from_su = [](const Matrix<Gaussian>& u, S5<Rational>& s, V3<Rational>& w) {
    Matrix<Rational> re(3, 3), im(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        re(i, j) = u(i, j).re();
        im(i, j) = u(i, j).im();
      }
    if (!(re + re.transposed()).is_zero() || im != im.transposed() || !im.trace().is_zero())
      throw Error("g2_compact: bracket left su(3)");
    s = coords_from_sym(im);
    w = star(re);
  };

  return make_algebra<Rational>("g2_compact", labels, [&](const Vec<Rational>& u, const Vec<Rational>& v) {
    S5<Rational> s1 = get5(u, 0), s2 = get5(v, 0);
    V3<Rational> w1 = get3(u, 5), w2 = get3(v, 5);
    V3<Rational> x1 = get3(u, 8), x2 = get3(v, 8);
    V3<Rational> y1 = get3(u, 11), y2 = get3(v, 11);
    Matrix<Gaussian> u1 = to_su(s1, w1), u2 = to_su(s2, w2);
    V3<Gaussian> c1, c2, cb1, cb2;
    for (std::size_t i = 0; i < 3; ++i) {
      c1[i] = Gaussian(y1[i], x1[i]);
      c2[i] = Gaussian(y2[i], x2[i]);
      cb1[i] = c1[i].conj();
      cb2[i] = c2[i].conj();
    }
    // su part: [U1,U2] + 3(c2 cb1^t - c1 cb2^t) + 2i(<x1,y2> - <y1,x2>) I
    Matrix<Gaussian> su = u1.commutator(u2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        su(i, j) += Gaussian(3) * (c2[i] * cb1[j] - c1[i] * cb2[j]);
    Gaussian tr = Gaussian(Rational(0), Rational(2)) * Gaussian(dot(x1, y2) - dot(y1, x2));
    for (std::size_t i = 0; i < 3; ++i) su(i, i) += tr;
    // C^3 part: U1 c2 - U2 c1 + 2 (cb1 x cb2)
    V3<Gaussian> cc = cross(cb1, cb2);
    for (std::size_t i = 0; i < 3; ++i) {
      Gaussian acc = Gaussian(2) * cc[i];
      for (std::size_t j = 0; j < 3; ++j) acc += u1(i, j) * c2[j] - u2(i, j) * c1[j];
      cc[i] = acc;
    }
    S5<Rational> so;
    V3<Rational> wo;
    from_su(su, so, wo);
    Vec<Rational> out(14, Rational(0));
    add5(out, 0, so);
    add3(out, 5, wo);
    for (std::size_t i = 0; i < 3; ++i) {
      out[8 + i] = cc[i].im();   // x part
      out[11 + i] = cc[i].re();  // y part
    }
    return out;
  });
}

/// su(3) as the (S, w) block of the compact model: traceless anti-Hermitian
/// iS + star^{-1}w with real structure constants.
inline LieAlgebra<Rational> su3() {
  std::vector<std::string> labels = s_labels();
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  return make_algebra<Rational>("su(3)", labels, [](const Vec<Rational>& u, const Vec<Rational>& v) {
    Matrix<Gaussian> a(3, 3), b(3, 3);
    Matrix<Rational> s1 = sym_from_coords(get5(u, 0)), w1 = unstar(get3(u, 5));
    Matrix<Rational> s2 = sym_from_coords(get5(v, 0)), w2 = unstar(get3(v, 5));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = Gaussian(w1(i, j), s1(i, j));
        b(i, j) = Gaussian(w2(i, j), s2(i, j));
      }
    Matrix<Gaussian> c = a.commutator(b);
    Matrix<Rational> re(3, 3), im(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        re(i, j) = c(i, j).re();
        im(i, j) = c(i, j).im();
      }
    Vec<Rational> out(8, Rational(0));
    add5(out, 0, coords_from_sym(im));
    add3(out, 5, star(re));
    return out;
  });
}

}  // namespace carnot
