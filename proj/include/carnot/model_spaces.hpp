#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carnot/classical.hpp"
#include "carnot/lie.hpp"
#include "carnot/nilpotent_models.hpp"
#include "carnot/space3.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

/// A Lie algebra bundled with the distinguished horizontal subspace p and
/// isotropy subalgebra k (the inner product on p is the standard one of the
/// block basis).
struct ModelAlgebra {
  LieAlgebra<Rational> algebra;
  Subspace<Rational> p;
  Subspace<Rational> k;
  std::string family;
};

// ---------------------------------------------------------------------------
// The three isometry-algebra families

/// C33(a1,a2): 12-dimensional on blocks (x, y, z, w), w the isotropy copy.
template <class R = Rational>
LieAlgebra<R> c33_iso_algebra(const R& a1, const R& a2) {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  for (auto& l : indexed_labels("z", 3)) labels.push_back(l);
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  auto g = make_algebra<R>("c33", labels, [a1, a2](const Vec<R>& u, const Vec<R>& v) {
    V3<R> x1 = get3(u, 0), y1 = get3(u, 3), z1 = get3(u, 6), w1 = get3(u, 9);
    V3<R> x2 = get3(v, 0), y2 = get3(v, 3), z2 = get3(v, 6), w2 = get3(v, 9);
    Vec<R> out(12, R(0));
    // isotropy action and [w,w]
    add3(out, 0, v3_add(cross(w1, x2), cross(x1, w2)));
    add3(out, 3, v3_add(cross(w1, y2), cross(y1, w2)));
    add3(out, 6, v3_add(cross(w1, z2), cross(z1, w2)));
    add3(out, 9, cross(w1, w2));
    // nilpotent skeleton
    add3(out, 3, cross(x1, x2));
    add3(out, 6, v3_add(cross(y1, x2), cross(x1, y2)));
    // a1 and a2 tails; t is shared between them
    V3<R> t = v3_add(v3_add(cross(x1, z2), cross(z1, x2)),
                     v3_add(cross(y1, y2), v3_scale(a1, cross(z1, z2))));
    add3(out, 3, v3_scale(a1, t));
    add3(out, 6, v3_scale(a1, v3_add(cross(y1, z2), cross(z1, y2))));
    add3(out, 0, v3_scale(a2, v3_add(cross(y1, z2), cross(z1, y2))));
    add3(out, 3, v3_scale(a2, cross(z1, z2)));
    add3(out, 9, v3_scale(a2, t));
    return out;
  });
  g.set_param("a1", a1);
  g.set_param("a2", a2);
  return g;
}

/// A33(kappa): 14-dimensional on blocks (x, y, S, w) with the Jacobi-solved
/// coefficients c1 = 2k, c2 = 15k^2, c3 = 0, c4 = -144k^3, c5 = 7k,
/// c6 = 24k^2, c7 = 3k, c8 = -6k, c9 = 18k^2.
template <class R = Rational>
LieAlgebra<R> a33_iso_algebra(const R& kappa) {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  for (auto& l : s_labels()) labels.push_back(l);
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  const R c1 = R(2) * kappa, c2 = R(15) * kappa * kappa, c4 = R(-144) * kappa * kappa * kappa;
  const R c5 = R(7) * kappa, c6 = R(24) * kappa * kappa, c7 = R(3) * kappa;
  const R c8 = R(-6) * kappa, c9 = R(18) * kappa * kappa;
  auto g = make_algebra<R>("a33", labels, [=](const Vec<R>& u, const Vec<R>& v) {
    V3<R> x1 = get3(u, 0), y1 = get3(u, 3), w1 = get3(u, 11);
    V3<R> x2 = get3(v, 0), y2 = get3(v, 3), w2 = get3(v, 11);
    Matrix<R> s1 = sym_from_coords(get5(u, 6)), s2 = sym_from_coords(get5(v, 6));
    auto sdiff = [&](const Matrix<R>& sa, const Matrix<R>& sb, const V3<R>& p1, const V3<R>& p2) {
      // sa p1 - sb p2
      return v3_add(matvec3(sa, p1), v3_scale(R(-1), matvec3(sb, p2)));
    };
    Vec<R> out(14, R(0));
    // x row
    add3(out, 0, v3_scale(c5, v3_add(cross(x1, y2), cross(y1, x2))));
    add3(out, 0, v3_scale(c6, sdiff(s2, s1, y1, y2)));
    add3(out, 0, v3_add(cross(x1, w2), cross(w1, x2)));
    // y row
    add3(out, 3, cross(x1, x2));
    add3(out, 3, v3_scale(c1, cross(y1, y2)));
    add3(out, 3, v3_scale(c8, sdiff(s2, s1, x1, x2)));
    add3(out, 3, v3_add(cross(y1, w2), cross(w1, y2)));
    // S row
    Matrix<R> sm = c7 * (unstar(y1).commutator(s2) - unstar(y2).commutator(s1)) +
                   s1.commutator(unstar(w2)) - s2.commutator(unstar(w1));
    add5(out, 6, s5_add(s5_sub(odot(x1, y2), odot(y1, x2)), coords_from_sym(sm)));
    // w row
    add3(out, 11, v3_scale(c2, cross(y1, y2)));
    add3(out, 11, v3_scale(c4, star(s1.commutator(s2))));
    add3(out, 11, v3_scale(c9, sdiff(s2, s1, x1, x2)));
    add3(out, 11, cross(w1, w2));
    return out;
  });
  g.set_param("kappa", kappa);
  return g;
}

/// The 17-dimensional isometry algebra of the free model: the nilpotent
/// skeleton extended by the so(3) isotropy action (every ansatz constant 0).
template <class R = Rational>
LieAlgebra<R> f33_iso_algebra() {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  for (auto& l : s_labels()) labels.push_back(l);
  for (auto& l : indexed_labels("z", 3)) labels.push_back(l);
  for (auto& l : indexed_labels("w", 3)) labels.push_back(l);
  return make_algebra<R>("f33_iso", labels, [](const Vec<R>& u, const Vec<R>& v) {
    V3<R> x1 = get3(u, 0), y1 = get3(u, 3), z1 = get3(u, 11), w1 = get3(u, 14);
    V3<R> x2 = get3(v, 0), y2 = get3(v, 3), z2 = get3(v, 11), w2 = get3(v, 14);
    Matrix<R> s1 = sym_from_coords(get5(u, 6)), s2 = sym_from_coords(get5(v, 6));
    Vec<R> out(17, R(0));
    add3(out, 0, v3_add(cross(x1, w2), cross(w1, x2)));
    add3(out, 3, cross(x1, x2));
    add3(out, 3, v3_add(cross(y1, w2), cross(w1, y2)));
    Matrix<R> sm = s1.commutator(unstar(w2)) - s2.commutator(unstar(w1));
    add5(out, 6, s5_add(s5_sub(odot(x1, y2), odot(y1, x2)), coords_from_sym(sm)));
    add3(out, 11, v3_add(cross(x1, y2), cross(y1, x2)));
    add3(out, 11, v3_add(cross(z1, w2), cross(w1, z2)));
    add3(out, 14, cross(w1, w2));
    return out;
  });
}

enum class IsoFamily { C33, A33, F33 };

inline ModelAlgebra build_iso_algebra(IsoFamily family, const Rational& a1 = Rational(0),
                                      const Rational& a2 = Rational(0)) {
  ModelAlgebra m;
  switch (family) {
    case IsoFamily::C33:
      m.algebra = c33_iso_algebra<Rational>(a1, a2);
      m.p = Subspace<Rational>::coordinate(12, {0, 1, 2});
      m.k = Subspace<Rational>::coordinate(12, {9, 10, 11});
      m.family = "c33";
      break;
    case IsoFamily::A33:
      m.algebra = a33_iso_algebra<Rational>(a1);  // a1 slot carries kappa
      m.p = Subspace<Rational>::coordinate(14, {0, 1, 2});
      m.k = Subspace<Rational>::coordinate(14, {11, 12, 13});
      m.family = "a33";
      break;
    case IsoFamily::F33:
      m.algebra = f33_iso_algebra<Rational>();
      m.p = Subspace<Rational>::coordinate(17, {0, 1, 2});
      m.k = Subspace<Rational>::coordinate(17, {14, 15, 16});
      m.family = "f33";
      break;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Holonomy analysis

/// Closure certificate for p_c = {(x,0,0,cx)} inside C33(a1,a2).
struct HolonomyCertificate {
  Rational c;
  std::size_t closure_dim = 0;
  std::size_t closure_meets_k = 0;  // dim of closure ∩ k
  bool trivial = false;             // closure ∩ k = 0
};

struct HolonomyReport {
  Rational a1, a2;
  Rational discriminant;            // a1^2 + 4 a2
  bool discriminant_nonnegative = false;
  // roots of t^2 - a1 t - a2 = 0 (candidates for c^2), when rational
  std::vector<Rational> roots;      // rational roots only
  bool roots_rational = false;
  std::vector<Rational> real_c;     // rational c with c^2 a nonnegative root
  std::vector<HolonomyCertificate> certificates;
};

inline HolonomyCertificate holonomy_certificate(const LieAlgebra<Rational>& g, const Rational& c,
                                                const Subspace<Rational>& k) {
  std::vector<Vec<Rational>> vecs;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec<Rational> v(12, Rational(0));
    v[i] = Rational(1);
    v[9 + i] = c;
    vecs.push_back(std::move(v));
  }
  Subspace<Rational> closure = generated_subalgebra(g, Subspace<Rational>::span(12, vecs));
  HolonomyCertificate cert;
  cert.c = c;
  cert.closure_dim = closure.dim();
  cert.closure_meets_k = intersection(closure, k).dim();
  cert.trivial = cert.closure_meets_k == 0;
  return cert;
}

/// Roots of t^2 - a1 t - a2 (the c^2 candidates) plus closure certificates
/// for every requested rational c.
inline HolonomyReport holonomy_analysis(const Rational& a1, const Rational& a2,
                                        std::vector<Rational> candidates = {}) {
  HolonomyReport rep;
  rep.a1 = a1;
  rep.a2 = a2;
  rep.discriminant = a1 * a1 + Rational(4) * a2;
  rep.discriminant_nonnegative = rep.discriminant.sign() >= 0;
  Rational sq;
  if (rep.discriminant_nonnegative && rep.discriminant.sqrt_exact(sq)) {
    rep.roots_rational = true;
    rep.roots = {(a1 + sq) / Rational(2), (a1 - sq) / Rational(2)};
    if (rep.roots[0] == rep.roots[1]) rep.roots.pop_back();
    for (const Rational& t : rep.roots) {
      Rational c;
      if (t.sign() >= 0 && t.sqrt_exact(c)) {
        rep.real_c.push_back(c);
        if (!c.is_zero()) rep.real_c.push_back(-c);
      }
    }
  }
  LieAlgebra<Rational> g = c33_iso_algebra<Rational>(a1, a2);
  Subspace<Rational> k = Subspace<Rational>::coordinate(12, {9, 10, 11});
  for (const Rational& c : rep.real_c) candidates.push_back(c);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& c : candidates) rep.certificates.push_back(holonomy_certificate(g, c, k));
  return rep;
}

// ---------------------------------------------------------------------------
// Tables 1-3

/// Exact square root or UnsupportedParameter naming the radical.
inline Rational rational_sqrt(const Rational& q, const std::string& what) {
  if (q.sign() < 0) throw UnsupportedParameter(what + ": negative radicand " + q.str());
  Rational r;
  if (!q.sqrt_exact(r)) throw UnsupportedParameter(what + ": sqrt(" + q.str() + ") is irrational");
  return r;
}

/// The parameter radicals kappa = sqrt(|k|), kappa_hat = sqrt(|k_hat|)
/// with k, k_hat = (a1 +- sqrt(a1^2+4a2))/2.
struct TableRadicals {
  Rational disc, sqrt_disc, k, k_hat, kappa, kappa_hat;
};

inline TableRadicals table_radicals(const Rational& a1, const Rational& a2) {
  TableRadicals t;
  t.disc = a1 * a1 + Rational(4) * a2;
  t.sqrt_disc = rational_sqrt(t.disc, "sqrt(a1^2+4a2)");
  t.k = (a1 + t.sqrt_disc) / Rational(2);
  t.k_hat = (a1 - t.sqrt_disc) / Rational(2);
  t.kappa = rational_sqrt(t.k.abs(), "kappa");
  t.kappa_hat = rational_sqrt(t.k_hat.abs(), "kappa_hat");
  return t;
}

namespace detail {

inline std::vector<Matrix<Rational>> theta_table1_exceptional() {
  // theta(star^{-1} x)(z, y) = 1/2 (x cross (z - y), x cross (y - z))
  std::vector<Matrix<Rational>> thetas;
  for (std::size_t k = 0; k < 3; ++k) {
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    Matrix<Rational> u = unstar(e);
    Matrix<Rational> t(6, 6);
    Rational h(1, 2);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        t(r, c) = h * u(r, c);
        t(r, 3 + c) = -h * u(r, c);
        t(3 + r, c) = -h * u(r, c);
        t(3 + r, 3 + c) = h * u(r, c);
      }
    thetas.push_back(std::move(t));
  }
  return thetas;
}

/// theta for the full isometry algebra so(4)/so(3,1) |x (R^3 x R^3):
///   theta([[star^{-1}w, x],[-s x^t, 0]])(z,y) = (w x z - s (x x y), w x y - x x z)
/// with s = +1 for so(4) and s = -1 for so(3,1).
inline std::vector<Matrix<Rational>> theta_lemma_exceptional(int so4_form) {
  std::vector<Matrix<Rational>> thetas;
  for (std::size_t k = 0; k < 3; ++k) {  // rotation generators R_k
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    Matrix<Rational> u = unstar(e);
    Matrix<Rational> t(6, 6);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        t(r, c) = u(r, c);
        t(3 + r, 3 + c) = u(r, c);
      }
    thetas.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < 3; ++k) {  // boost generators B_k
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    Matrix<Rational> u = unstar(e);
    Matrix<Rational> t(6, 6);
    Rational s = so4_form > 0 ? Rational(-1) : Rational(1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        t(r, 3 + c) = s * u(r, c);   // z row: -+ x cross y
        t(3 + r, c) = -u(r, c);      // y row: - x cross z
      }
    thetas.push_back(std::move(t));
  }
  return thetas;
}

}  // namespace detail

/// Table 1: C33(a1,a2) as a Lie group; returns the 9-dimensional algebra m
/// and the horizontal basis span A_x (k is trivial).
struct TableModel {
  ModelAlgebra model;
  std::string row;  // which table row was instantiated
};

inline TableModel build_table1(const Rational& a1, const Rational& a2) {
  TableModel out;
  ModelAlgebra& m = out.model;
  m.family = "table1";
  m.k = Subspace<Rational>::zero(9);
  std::vector<Vec<Rational>> pv(3, Vec<Rational>(9, Rational(0)));
  if (a2.sign() > 0) {
    TableRadicals t = table_radicals(a1, a2);
    out.row = "so(3)+so(3,1)";
    m.algebra = direct_sum(so3(), so31());
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][i] = Rational(2) * t.kappa;
      pv[i][3 + i] = t.kappa;
      pv[i][6 + i] = t.kappa_hat;
    }
  } else if (a2.is_zero() && a1.sign() < 0) {
    TableRadicals t = table_radicals(a1, a2);
    out.row = "R3+so(3,1)";
    m.algebra = direct_sum(abelian(3), so31());
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][i] = Rational(1);
      pv[i][6 + i] = t.kappa_hat;
    }
  } else if (a2.is_zero() && a1.sign() > 0) {
    TableRadicals t = table_radicals(a1, a2);
    out.row = "R3+so(4)";
    m.algebra = direct_sum(abelian(3), so4());
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][i] = Rational(1);
      pv[i][6 + i] = t.kappa;
    }
  } else if (a2.sign() < 0) {
    Rational disc = a1 * a1 + Rational(4) * a2;
    if (disc.sign() > 0 && a1.sign() > 0) {
      TableRadicals t = table_radicals(a1, a2);
      out.row = "so(3)+so(4)";
      m.algebra = direct_sum(so3(), so4());
      for (std::size_t i = 0; i < 3; ++i) {
        pv[i][i] = Rational(2) * t.kappa;
        pv[i][3 + i] = t.kappa;
        pv[i][6 + i] = t.kappa_hat;
      }
    } else if (disc.is_zero() && a1.sign() > 0) {
      Rational kappa = rational_sqrt(a1 / Rational(2), "kappa = sqrt(a1/2)");
      out.row = "so(3)|x(R3xR3)";
      m.algebra = semidirect(so3(), 6, detail::theta_table1_exceptional(),
                             {"z1", "z2", "z3", "u1", "u2", "u3"});
      for (std::size_t i = 0; i < 3; ++i) {
        pv[i][i] = Rational(2) * kappa;
        pv[i][3 + i] = -kappa / Rational(2);
      }
    } else {
      throw UnsupportedParameter("table1: parameters (" + a1.str() + "," + a2.str() +
                                 ") lie outside the invariant-structure region");
    }
  } else {
    throw UnsupportedParameter("table1: a1 = a2 = 0 is the Carnot case");
  }
  m.p = Subspace<Rational>::span(9, pv);
  return out;
}

inline TableModel build_table2(const Rational& a1, const Rational& a2) {
  if (a2.sign() >= 0)
    throw UnsupportedParameter("table2: requires a2 < 0");
  TableModel out;
  ModelAlgebra& m = out.model;
  m.family = "table2";
  Rational disc = a1 * a1 + Rational(4) * a2;
  std::vector<Vec<Rational>> pv(3, Vec<Rational>(12, Rational(0)));
  std::vector<Vec<Rational>> kv(3, Vec<Rational>(12, Rational(0)));
  if (disc.sign() > 0 && a1.sign() < 0) {
    TableRadicals t = table_radicals(a1, a2);
    out.row = "so(3,1)+so(3,1)";
    m.algebra = direct_sum(so31(), so31());
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][3 + i] = t.kappa;
      pv[i][9 + i] = t.kappa_hat;
      kv[i][i] = Rational(1);
      kv[i][6 + i] = Rational(1);
    }
  } else if (disc.is_zero() && a1.sign() < 0) {
    Rational kappa = rational_sqrt(a1.abs() / Rational(2), "kappa = sqrt(|a1|/2)");
    out.row = "so(3,1)|x(R3xR3)";
    m.algebra = semidirect(so31(), 6, detail::theta_lemma_exceptional(-1),
                           {"z1", "z2", "z3", "u1", "u2", "u3"});
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][3 + i] = kappa;
      pv[i][6 + i] = -kappa / Rational(2);
      kv[i][i] = Rational(1);
    }
  } else if (disc.sign() < 0) {
    // zeta = (1/sqrt 2) sqrt(a1 + sqrt(a1^2+4a2)), principal root: demands
    // a2 = -|zeta|^4 and a1 = 2 Re(zeta^2) with zeta Gaussian rational
    Gaussian zeta = [&]() {
      // zeta^2 = (a1 + i sqrt(-disc))/2; need sqrt of that Gaussian rational
      Rational imag = rational_sqrt(-disc, "sqrt(-(a1^2+4a2))");
      Gaussian z2(a1 / Rational(2), imag / Rational(2));
      // principal square root of z2 = r e^{i t}: try (p + q i)^2 = z2 over rationals
      Rational n2 = rational_sqrt(z2.norm2(), "|zeta|^2");
      Rational p2 = (z2.re() + n2) / Rational(2);
      Rational p = rational_sqrt(p2, "Re(zeta)");
      if (p.is_zero()) throw UnsupportedParameter("table2: zeta not Gaussian rational");
      Rational q = z2.im() / (Rational(2) * p);
      return Gaussian(p, q);
    }();
    out.row = "so(3,1)+so(3,1) [complex]";
    m.algebra = direct_sum(so31(), so31());
    Gaussian z2 = zeta * zeta;
    (void)z2;
    for (std::size_t i = 0; i < 3; ++i) {
      pv[i][i] = zeta.re();
      pv[i][3 + i] = zeta.im();
      pv[i][6 + i] = -zeta.re();
      pv[i][9 + i] = -zeta.im();
      kv[i][i] = Rational(1);
      kv[i][6 + i] = Rational(1);
    }
    m.algebra.set_param("Re(zeta)", zeta.re());
    m.algebra.set_param("Im(zeta)", zeta.im());
  } else {
    throw UnsupportedParameter("table2: parameters (" + a1.str() + "," + a2.str() +
                               ") lie outside the quotient region");
  }
  m.p = Subspace<Rational>::span(12, pv);
  m.k = Subspace<Rational>::span(12, kv);
  return out;
}

/// Table 3 (general n): the direct-sum rows, the complex row (realified
/// so(n+1,C)), and the exceptional semidirect row.
inline TableModel build_table3(std::size_t n, const Rational& a1, const Rational& a2) {
  if (n < 2 || n > 5) throw UnsupportedParameter("table3: supported range is 2 <= n <= 5");
  TableModel out;
  ModelAlgebra& m = out.model;
  m.family = "table3";
  const std::size_t nr = n * (n - 1) / 2;
  const std::size_t half = nr + n;
  Rational disc = a1 * a1 + Rational(4) * a2;

  auto sum_row = [&](const LieAlgebra<Rational>& ga, const LieAlgebra<Rational>& gb,
                     const Rational& kap, const Rational& kap_hat) {
    m.algebra = direct_sum(ga, gb);
    std::vector<Vec<Rational>> pv(n, Vec<Rational>(2 * half, Rational(0)));
    std::vector<Vec<Rational>> kv(nr, Vec<Rational>(2 * half, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      pv[i][nr + i] = kap;
      pv[i][half + nr + i] = kap_hat;
    }
    for (std::size_t j = 0; j < nr; ++j) {
      kv[j][j] = Rational(1);
      kv[j][half + j] = Rational(1);
    }
    m.p = Subspace<Rational>::span(2 * half, pv);
    m.k = Subspace<Rational>::span(2 * half, kv);
  };

  if (!a2.is_zero() && disc.sign() > 0) {
    TableRadicals t = table_radicals(a1, a2);
    if (a2.sign() > 0) {
      out.row = "so(n+1)+so(n,1)";
      sum_row(so_plus(n), so_lorentz(n), t.kappa, t.kappa_hat);
    } else if (a1.sign() > 0) {
      out.row = "so(n+1)+so(n+1)";
      sum_row(so_plus(n), so_plus(n), t.kappa, t.kappa_hat);
    } else if (a1.sign() < 0) {
      out.row = "so(n,1)+so(n,1)";
      sum_row(so_lorentz(n), so_lorentz(n), t.kappa, t.kappa_hat);
    } else {
      throw UnsupportedParameter("table3: a1 = 0 with positive discriminant needs a2 > 0");
    }
  } else if (disc.sign() < 0) {
    // complex row: realified so(n+1,C); B_x = [[0, zeta x],[-zeta x^t,0]]
    Rational imag = rational_sqrt(-disc, "sqrt(-(a1^2+4a2))");
    Gaussian z2(a1 / Rational(2), imag / Rational(2));
    Rational n2 = rational_sqrt(z2.norm2(), "|zeta|^2");
    Rational p = rational_sqrt((z2.re() + n2) / Rational(2), "Re(zeta)");
    if (p.is_zero()) throw UnsupportedParameter("table3: zeta not Gaussian rational");
    Gaussian zeta(p, z2.im() / (Rational(2) * p));
    out.row = "so(n+1,C)";
    m.algebra = realify(so_plus_complex(n));
    std::vector<Vec<Rational>> pv(n, Vec<Rational>(2 * half, Rational(0)));
    std::vector<Vec<Rational>> kv(nr, Vec<Rational>(2 * half, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      pv[i][nr + i] = zeta.re();
      pv[i][half + nr + i] = zeta.im();
    }
    for (std::size_t j = 0; j < nr; ++j) kv[j][j] = Rational(1);
    m.p = Subspace<Rational>::span(2 * half, pv);
    m.k = Subspace<Rational>::span(2 * half, kv);
    m.algebra.set_param("Re(zeta)", zeta.re());
    m.algebra.set_param("Im(zeta)", zeta.im());
  } else if (disc.is_zero() && !a1.is_zero()) {
    // exceptional row: so(n+1)/so(n,1) |x (R^n x so(n)-module)
    Rational kappa = rational_sqrt(a1.abs() / Rational(2), "kappa = sqrt(|a1|/2)");
    const bool plus_form = a1.sign() > 0;
    out.row = plus_form ? "so(n+1)|x" : "so(n,1)|x";
    LieAlgebra<Rational> base = plus_form ? so_plus(n) : so_lorentz(n);
    auto pairs = so_rotation_pairs(n);
    const std::size_t mdim = n + nr;
    // theta([[A, x],[-s x^t, 0]])(z, Y) = (A z + s Y x, [A, Y] - (z x^t - x z^t))
    std::vector<Matrix<Rational>> thetas;
    auto pair_matrix = [&](std::size_t a) {
      Matrix<Rational> mm(n, n);
      mm(pairs[a].second, pairs[a].first) = Rational(1);
      mm(pairs[a].first, pairs[a].second) = Rational(-1);
      return mm;
    };
    auto coords_of = [&](const Matrix<Rational>& mm) {
      Vec<Rational> c(nr, Rational(0));
      for (std::size_t a = 0; a < nr; ++a) c[a] = mm(pairs[a].second, pairs[a].first);
      return c;
    };
    for (std::size_t g = 0; g < nr + n; ++g) {
      Matrix<Rational> t(mdim, mdim);
      if (g < nr) {  // rotation A
        Matrix<Rational> am = pair_matrix(g);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r) t(r, c) = am(r, c);  // z -> A z
        for (std::size_t b = 0; b < nr; ++b) {
          Vec<Rational> img = coords_of(am.commutator(pair_matrix(b)));
          for (std::size_t a = 0; a < nr; ++a) t(n + a, n + b) = img[a];  // Y -> [A, Y]
        }
      } else {  // boost x = e_k
        std::size_t k = g - nr;
        Rational s = plus_form ? Rational(1) : Rational(-1);
        for (std::size_t b = 0; b < nr; ++b) {
          // z component: s * Y e_k
          Matrix<Rational> ym = pair_matrix(b);
          for (std::size_t r = 0; r < n; ++r) t(r, n + b) = s * ym(r, k);
        }
        for (std::size_t c = 0; c < n; ++c) {
          // Y component: -(z x^t - x z^t) with z = e_c, x = e_k
          Matrix<Rational> wedge(n, n);
          wedge(c, k) += Rational(1);
          wedge(k, c) -= Rational(1);
          Vec<Rational> img = coords_of(Rational(-1) * wedge);
          for (std::size_t a = 0; a < nr; ++a) t(n + a, c) = img[a];
        }
      }
      thetas.push_back(std::move(t));
    }
    std::vector<std::string> mlabels = indexed_labels("z", n);
    for (std::size_t a = 0; a < nr; ++a)
      mlabels.push_back("Y" + std::to_string(pairs[a].first + 1) + std::to_string(pairs[a].second + 1));
    m.algebra = semidirect(base, mdim, thetas, mlabels);
    std::vector<Vec<Rational>> pv(n, Vec<Rational>(half + mdim, Rational(0)));
    std::vector<Vec<Rational>> kv(nr, Vec<Rational>(half + mdim, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      pv[i][nr + i] = kappa;                    // boost part
      pv[i][half + i] = -kappa / Rational(2);   // module z part
    }
    for (std::size_t j = 0; j < nr; ++j) kv[j][j] = Rational(1);
    m.p = Subspace<Rational>::span(half + mdim, pv);
    m.k = Subspace<Rational>::span(half + mdim, kv);
  } else {
    throw UnsupportedParameter("table3: parameters (" + a1.str() + "," + a2.str() +
                               ") not in a supported row");
  }
  out.model.algebra.set_param("a1", a1);
  out.model.algebra.set_param("a2", a2);
  return out;
}

}  // namespace carnot
