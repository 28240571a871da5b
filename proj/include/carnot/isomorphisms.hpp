#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "carnot/classical.hpp"
#include "carnot/model_spaces.hpp"

namespace carnot {

/// A built isomorphism owning both algebras, ready for check_map.
struct BuiltIsomorphism {
  std::string kind;
  std::shared_ptr<LieAlgebra<Rational>> source;
  std::shared_ptr<LieAlgebra<Rational>> target;
  Matrix<Rational> matrix;

  LinearMap<Rational> map() const { return {source.get(), target.get(), matrix}; }
};

namespace detail {

inline void put3(Matrix<Rational>& m, std::size_t row, std::size_t col, const Rational& c) {
  for (std::size_t i = 0; i < 3; ++i) m(row + i, col + i) += c;
}

}  // namespace detail

/// psi: C33(a1,a2) -> b_k + b_khat,  (x,y,z,w) -> (x+kz, w+ky) ++ (x+khz, w+khy),
/// where k, khat solve k + khat = a1, -k khat = a2 (needs a1^2+4a2 a rational
/// square).
inline BuiltIsomorphism iso_lemma_bk(const Rational& a1, const Rational& a2) {
  Rational disc = a1 * a1 + Rational(4) * a2;
  if (disc.sign() <= 0)
    throw UnsupportedParameter("lemma_bk: needs a1^2 + 4 a2 > 0");
  Rational sq = rational_sqrt(disc, "sqrt(a1^2+4a2)");
  Rational k = (a1 + sq) / Rational(2), kh = (a1 - sq) / Rational(2);
  BuiltIsomorphism out;
  out.kind = "lemma_bk";
  out.source = std::make_shared<LieAlgebra<Rational>>(c33_iso_algebra<Rational>(a1, a2));
  out.target = std::make_shared<LieAlgebra<Rational>>(direct_sum(b_family(k), b_family(kh)));
  out.target->set_param("k", k);
  out.target->set_param("k_hat", kh);
  Matrix<Rational> m(12, 12);
  detail::put3(m, 0, 0, Rational(1));   // x
  detail::put3(m, 0, 6, k);             // + k z
  detail::put3(m, 3, 9, Rational(1));   // w
  detail::put3(m, 3, 3, k);             // + k y
  detail::put3(m, 6, 0, Rational(1));
  detail::put3(m, 6, 6, kh);
  detail::put3(m, 9, 9, Rational(1));
  detail::put3(m, 9, 3, kh);
  out.matrix = std::move(m);
  return out;
}

/// psi: C33(a1,a2) -> so(3,1) + so(3,1) in the complex case a1^2+4a2 < 0,
/// composed from psi_2(x,y,z,w) = (zeta x + zeta^3 z, w + zeta^2 y) into the
/// complexified b_1, the splitting of b_1 into so(3)+so(3), and the
/// realification so(3)^C = so(3,1). Block j of the image has rotation part
/// Re(v +- u) and boost part Im(v +- u) for u,v as above.
inline BuiltIsomorphism iso_lemma_complex(const Rational& a1, const Rational& a2) {
  Rational disc = a1 * a1 + Rational(4) * a2;
  if (disc.sign() >= 0) throw UnsupportedParameter("lemma_complex: needs a1^2 + 4 a2 < 0");
  Rational imag = rational_sqrt(-disc, "sqrt(-(a1^2+4a2))");
  Gaussian z2(a1 / Rational(2), imag / Rational(2));  // zeta^2
  Rational n2 = rational_sqrt(z2.norm2(), "|zeta|^2");
  Rational p = rational_sqrt((z2.re() + n2) / Rational(2), "Re(zeta)");
  if (p.is_zero()) throw UnsupportedParameter("lemma_complex: zeta not Gaussian rational");
  Gaussian zeta(p, z2.im() / (Rational(2) * p));
  Gaussian z3 = z2 * zeta;

  BuiltIsomorphism out;
  out.kind = "lemma_complex";
  out.source = std::make_shared<LieAlgebra<Rational>>(c33_iso_algebra<Rational>(a1, a2));
  out.target = std::make_shared<LieAlgebra<Rational>>(direct_sum(so31(), so31()));
  Matrix<Rational> m(12, 12);
  // block 1 rotations: w + Re(z)x + Re(z^2)y + Re(z^3)z
  detail::put3(m, 0, 9, Rational(1));
  detail::put3(m, 0, 0, zeta.re());
  detail::put3(m, 0, 3, z2.re());
  detail::put3(m, 0, 6, z3.re());
  // block 1 boosts: Im(z)x + Im(z^2)y + Im(z^3)z
  detail::put3(m, 3, 0, zeta.im());
  detail::put3(m, 3, 3, z2.im());
  detail::put3(m, 3, 6, z3.im());
  // block 2: conjugate signs on the odd powers
  detail::put3(m, 6, 9, Rational(1));
  detail::put3(m, 6, 0, -zeta.re());
  detail::put3(m, 6, 3, z2.re());
  detail::put3(m, 6, 6, -z3.re());
  detail::put3(m, 9, 0, -zeta.im());
  detail::put3(m, 9, 3, z2.im());
  detail::put3(m, 9, 6, -z3.im());
  out.matrix = std::move(m);
  return out;
}

/// phi: C33(a1,a2) -> so(4)/so(3,1) |x (R^3 x R^3) on the parabolic locus
/// a1^2 + 4 a2 = 0, kappa = sqrt(|a1|/2).
inline BuiltIsomorphism iso_lemma_exceptional(const Rational& a1, const Rational& a2) {
  Rational disc = a1 * a1 + Rational(4) * a2;
  if (!disc.is_zero() || a1.is_zero())
    throw UnsupportedParameter("lemma_exceptional: needs a1^2 + 4 a2 = 0, a1 != 0");
  Rational kap = rational_sqrt(a1.abs() / Rational(2), "kappa = sqrt(|a1|/2)");
  Rational k2 = kap * kap, k3 = k2 * kap;
  const bool positive = a1.sign() > 0;

  BuiltIsomorphism out;
  out.kind = "lemma_exceptional";
  out.source = std::make_shared<LieAlgebra<Rational>>(c33_iso_algebra<Rational>(a1, a2));
  LieAlgebra<Rational> base = positive ? so4() : so31();
  out.target = std::make_shared<LieAlgebra<Rational>>(
      semidirect(base, 6, detail::theta_lemma_exceptional(positive ? +1 : -1),
                 {"z1", "z2", "z3", "u1", "u2", "u3"}));
  Matrix<Rational> m(12, 12);
  if (positive) {
    // [[star^{-1}(w + k^2 y), -(k x + k^3 z)], ...] |x (3/2 k^3 z + k/2 x, k^2 y)
    detail::put3(m, 0, 9, Rational(1));
    detail::put3(m, 0, 3, k2);
    detail::put3(m, 3, 0, -kap);
    detail::put3(m, 3, 6, -k3);
    detail::put3(m, 6, 6, Rational(3) * k3 / Rational(2));
    detail::put3(m, 6, 0, kap / Rational(2));
    detail::put3(m, 9, 3, k2);
  } else {
    // [[star^{-1}(w - k^2 y), k x - k^3 z], ...] |x (3/2 k^3 z - k/2 x, k^2 y)
    detail::put3(m, 0, 9, Rational(1));
    detail::put3(m, 0, 3, -k2);
    detail::put3(m, 3, 0, kap);
    detail::put3(m, 3, 6, -k3);
    detail::put3(m, 6, 6, Rational(3) * k3 / Rational(2));
    detail::put3(m, 6, 0, -kap / Rational(2));
    detail::put3(m, 9, 3, k2);
  }
  out.matrix = std::move(m);
  return out;
}

/// b_1 -> so(3) + so(3), (x, y) -> (star^{-1}(y+x), star^{-1}(y-x)).
inline BuiltIsomorphism iso_b1_so3_so3() {
  BuiltIsomorphism out;
  out.kind = "b1_so3_so3";
  out.source = std::make_shared<LieAlgebra<Rational>>(b_family(Rational(1)));
  out.target = std::make_shared<LieAlgebra<Rational>>(direct_sum(so3(), so3()));
  Matrix<Rational> m(6, 6);
  detail::put3(m, 0, 3, Rational(1));
  detail::put3(m, 0, 0, Rational(1));
  detail::put3(m, 3, 3, Rational(1));
  detail::put3(m, 3, 0, Rational(-1));
  out.matrix = std::move(m);
  return out;
}

/// realification of so(3) over the Gaussians -> so(3,1):
/// star^{-1}x |-> [[star^{-1}Re x, Im x], [Im x^t, 0]].
inline BuiltIsomorphism iso_so3_complex_so31() {
  BuiltIsomorphism out;
  out.kind = "so3c_so31";
  LieAlgebra<Gaussian> s3c = make_algebra<Gaussian>(
      "so(3,C)", {"R1", "R2", "R3"}, [](const Vec<Gaussian>& u, const Vec<Gaussian>& v) {
        V3<Gaussian> a{u[0], u[1], u[2]}, b{v[0], v[1], v[2]};
        V3<Gaussian> c = cross(a, b);
        return Vec<Gaussian>{c[0], c[1], c[2]};
      });
  out.source = std::make_shared<LieAlgebra<Rational>>(realify(s3c));
  out.target = std::make_shared<LieAlgebra<Rational>>(so31());
  Matrix<Rational> m(6, 6);
  detail::put3(m, 0, 0, Rational(1));  // Re part -> rotations
  detail::put3(m, 3, 3, Rational(1));  // Im part -> boosts
  out.matrix = std::move(m);
  return out;
}

/// phi: A33(kappa) -> g2_compact for kappa = a^2 > 0:
/// (x,y,S,w) -> (12 a^3 i S + star^{-1}(w + 3 a^2 y), -2 a^2 y + i a x).
inline BuiltIsomorphism iso_a33_to_g2c(const Rational& kappa) {
  Rational a = rational_sqrt(kappa, "a = sqrt(kappa)");
  if (a.is_zero()) throw UnsupportedParameter("a33_to_g2c: kappa must be positive");
  Rational a2 = a * a, a3 = a2 * a;
  BuiltIsomorphism out;
  out.kind = "a33_to_g2c";
  out.source = std::make_shared<LieAlgebra<Rational>>(a33_iso_algebra<Rational>(kappa));
  out.target = std::make_shared<LieAlgebra<Rational>>(g2_compact());
  // g2c coordinates (S 0:5, w 5:8, x 8:11, y 11:14); a33 (x 0:3, y 3:6, S 6:11, w 11:14)
  Matrix<Rational> m(14, 14);
  for (std::size_t i = 0; i < 5; ++i) m(i, 6 + i) = Rational(12) * a3;
  detail::put3(m, 5, 11, Rational(1));
  detail::put3(m, 5, 3, Rational(3) * a2);
  detail::put3(m, 8, 0, a);
  detail::put3(m, 11, 3, Rational(-2) * a2);
  out.matrix = std::move(m);
  return out;
}

/// phi: A33(kappa) -> g2_split for kappa = -a^2 < 0:
/// (x,y,S,w) -> (a x + 2 a^2 y, -a x + 2 a^2 y, -12 a^3 S, w - 3 a^2 y)'.
inline BuiltIsomorphism iso_a33_to_g2s(const Rational& kappa) {
  if (kappa.sign() >= 0) throw UnsupportedParameter("a33_to_g2s: kappa must be negative");
  Rational a = rational_sqrt(-kappa, "a = sqrt(-kappa)");
  Rational a2 = a * a, a3 = a2 * a;
  BuiltIsomorphism out;
  out.kind = "a33_to_g2s";
  out.source = std::make_shared<LieAlgebra<Rational>>(a33_iso_algebra<Rational>(kappa));
  out.target = std::make_shared<LieAlgebra<Rational>>(g2_split());
  Matrix<Rational> m(14, 14);
  detail::put3(m, 0, 0, a);
  detail::put3(m, 0, 3, Rational(2) * a2);
  detail::put3(m, 3, 0, -a);
  detail::put3(m, 3, 3, Rational(2) * a2);
  for (std::size_t i = 0; i < 5; ++i) m(6 + i, 6 + i) = Rational(-12) * a3;
  detail::put3(m, 11, 11, Rational(1));
  detail::put3(m, 11, 3, Rational(-3) * a2);
  out.matrix = std::move(m);
  return out;
}

/// The metric-scaling dilation C33(a1,a2) -> C33(a1/l^2, a2/l^4):
/// (x,y,z,w) -> (l x, l^2 y, l^3 z, w).
inline BuiltIsomorphism iso_scaling_c33(const Rational& a1, const Rational& a2, const Rational& l) {
  if (l.is_zero()) throw UnsupportedParameter("scaling_c33: lambda must be nonzero");
  BuiltIsomorphism out;
  out.kind = "scaling_c33";
  out.source = std::make_shared<LieAlgebra<Rational>>(c33_iso_algebra<Rational>(a1, a2));
  Rational l2 = l * l, l4 = l2 * l2;
  out.target = std::make_shared<LieAlgebra<Rational>>(c33_iso_algebra<Rational>(a1 / l2, a2 / l4));
  Matrix<Rational> m(12, 12);
  detail::put3(m, 0, 0, l);
  detail::put3(m, 3, 3, l2);
  detail::put3(m, 6, 6, l2 * l);
  detail::put3(m, 9, 9, Rational(1));
  out.matrix = std::move(m);
  return out;
}

/// The dilation A33(kappa) -> A33(kappa/l^2): (x,y,S,w) -> (l x, l^2 y, l^3 S, w).
inline BuiltIsomorphism iso_scaling_a33(const Rational& kappa, const Rational& l) {
  if (l.is_zero()) throw UnsupportedParameter("scaling_a33: lambda must be nonzero");
  BuiltIsomorphism out;
  out.kind = "scaling_a33";
  out.source = std::make_shared<LieAlgebra<Rational>>(a33_iso_algebra<Rational>(kappa));
  Rational l2 = l * l;
  out.target = std::make_shared<LieAlgebra<Rational>>(a33_iso_algebra<Rational>(kappa / l2));
  Matrix<Rational> m(14, 14);
  detail::put3(m, 0, 0, l);
  detail::put3(m, 3, 3, l2);
  for (std::size_t i = 0; i < 5; ++i) m(6 + i, 6 + i) = l2 * l;
  detail::put3(m, 11, 11, Rational(1));
  out.matrix = std::move(m);
  return out;
}

/// Dispatch by kind name (CLI surface).
inline BuiltIsomorphism build_isomorphism(const std::string& kind, const Rational& a1,
                                          const Rational& a2, const Rational& lambda) {
  if (kind == "lemma_bk") return iso_lemma_bk(a1, a2);
  if (kind == "lemma_complex") return iso_lemma_complex(a1, a2);
  if (kind == "lemma_exceptional") return iso_lemma_exceptional(a1, a2);
  if (kind == "b1_so3_so3") return iso_b1_so3_so3();
  if (kind == "so3c_so31") return iso_so3_complex_so31();
  if (kind == "a33_to_g2c") return iso_a33_to_g2c(a1);
  if (kind == "a33_to_g2s") return iso_a33_to_g2s(a1);
  if (kind == "scaling_c33") return iso_scaling_c33(a1, a2, lambda);
  if (kind == "scaling_a33") return iso_scaling_a33(a1, lambda);
  throw Error("build_isomorphism: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// g2 horizontal structures

struct G2Horizontal {
  LieAlgebra<Rational> algebra;
  Subspace<Rational> p;
  std::vector<std::size_t> growth;  // filtration dims with k = 0
};

inline G2Horizontal g2_horizontal(bool split_form) {
  G2Horizontal out;
  if (split_form) {
    out.algebra = g2_split();
    out.p = Subspace<Rational>::coordinate(14, {0, 1, 2});  // A_x = M(x,0,0,0)
  } else {
    out.algebra = g2_compact();
    // A_x = (0, x + i x): coordinates x = e_j and y = e_j together
    std::vector<Vec<Rational>> pv;
    for (std::size_t j = 0; j < 3; ++j) {
      Vec<Rational> v(14, Rational(0));
      v[8 + j] = Rational(1);
      v[11 + j] = Rational(1);
      pv.push_back(std::move(v));
    }
    out.p = Subspace<Rational>::span(14, pv);
  }
  out.growth = growth_vector(out.algebra, out.p, Subspace<Rational>::zero(14));
  return out;
}

}  // namespace carnot
