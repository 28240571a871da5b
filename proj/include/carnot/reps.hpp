#pragma once

#include <array>
#include <string>
#include <vector>

#include "carnot/lie.hpp"
#include "carnot/nilpotent_models.hpp"
#include "carnot/poly.hpp"
#include "carnot/space3.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

enum class RepKind { R3, R3bar, S, Sbar };

inline RepKind rep_kind_from_name(const std::string& name) {
  if (name == "R3") return RepKind::R3;
  if (name == "R3bar") return RepKind::R3bar;
  if (name == "s") return RepKind::S;
  if (name == "sbar") return RepKind::Sbar;
  throw Error("unknown representation '" + name + "'");
}

inline const char* rep_name(RepKind k) {
  switch (k) {
    case RepKind::R3: return "R3";
    case RepKind::R3bar: return "R3bar";
    case RepKind::S: return "s";
    case RepKind::Sbar: return "sbar";
  }
  return "?";
}

/// Representation of O(3) given by the infinitesimal generators of
/// star^{-1}e_1, star^{-1}e_2, star^{-1}e_3, one reflection matrix for
/// r = diag(1,1,-1) (including any determinant twist), and the parity of the
/// central element -I.
struct Rep {
  RepKind kind;
  std::size_t dim;
  std::array<Matrix<Rational>, 3> gens;
  Matrix<Rational> reflection;
  int parity;  // action of -I: +1 or -1
};

inline Matrix<Rational> reflection3() {
  Matrix<Rational> r(3, 3);
  r(0, 0) = Rational(1);
  r(1, 1) = Rational(1);
  r(2, 2) = Rational(-1);
  return r;
}

inline Rep standard_rep(RepKind kind) {
  Rep rep;
  rep.kind = kind;
  std::array<Matrix<Rational>, 3> cross_gens;
  for (std::size_t k = 0; k < 3; ++k) {
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    cross_gens[k] = unstar(e);
  }
  switch (kind) {
    case RepKind::R3:
    case RepKind::R3bar: {
      rep.dim = 3;
      rep.gens = cross_gens;
      rep.reflection = reflection3();
      rep.parity = -1;
      if (kind == RepKind::R3bar) {
        rep.reflection = Rational(-1) * rep.reflection;  // det twist
        rep.parity = +1;
      }
      break;
    }
    case RepKind::S:
    case RepKind::Sbar: {
      rep.dim = 5;
      for (std::size_t k = 0; k < 3; ++k) {
        Matrix<Rational> g(5, 5);
        for (std::size_t b = 0; b < 5; ++b) {
          S5<Rational> c{};
          for (auto& x : c) x = Rational(0);
          c[b] = Rational(1);
          Matrix<Rational> s = sym_from_coords(c);
          S5<Rational> img = coords_from_sym(cross_gens[k].commutator(s));
          for (std::size_t a = 0; a < 5; ++a) g(a, b) = img[a];
        }
        rep.gens[k] = g;
      }
      Matrix<Rational> r3 = reflection3();
      Matrix<Rational> refl(5, 5);
      for (std::size_t b = 0; b < 5; ++b) {
        S5<Rational> c{};
        for (auto& x : c) x = Rational(0);
        c[b] = Rational(1);
        S5<Rational> img = coords_from_sym(r3 * sym_from_coords(c) * r3);
        for (std::size_t a = 0; a < 5; ++a) refl(a, b) = img[a];
      }
      rep.reflection = refl;
      rep.parity = +1;
      if (kind == RepKind::Sbar) {
        rep.reflection = Rational(-1) * rep.reflection;
        rep.parity = -1;
      }
      break;
    }
  }
  return rep;
}

inline Rep standard_rep(const std::string& name) { return standard_rep(rep_kind_from_name(name)); }

/// Finite group action on the standard representations, for spot checks with
/// concrete rational rotations/reflections q (det q = detq in {+1,-1}).
inline Vec<Rational> rep_group_apply(const Rep& rep, const Matrix<Rational>& q, int detq,
                                     const Vec<Rational>& v) {
  switch (rep.kind) {
    case RepKind::R3: return q.apply(v);
    case RepKind::R3bar: {
      Vec<Rational> w = q.apply(v);
      if (detq < 0)
        for (auto& x : w) x = -x;
      return w;
    }
    case RepKind::S:
    case RepKind::Sbar: {
      S5<Rational> c{v[0], v[1], v[2], v[3], v[4]};
      auto qinv = inverse(q);
      if (!qinv) throw Error("rep_group_apply: singular q");
      S5<Rational> img = coords_from_sym(q * sym_from_coords(c) * *qinv);
      Vec<Rational> w(img.begin(), img.end());
      if (rep.kind == RepKind::Sbar && detq < 0)
        for (auto& x : w) x = -x;
      return w;
    }
  }
  throw Error("rep_group_apply: unreachable");
}

/// Rational rotation from an antisymmetric seed: q = (I-A)^{-1}(I+A).
inline Matrix<Rational> cayley_rotation(const V3<Rational>& a) {
  Matrix<Rational> m = unstar(a);
  Matrix<Rational> id = Matrix<Rational>::identity(3);
  auto inv = inverse(id - m);
  if (!inv) throw Error("cayley_rotation: singular seed");
  return *inv * (id + m);
}

// ---------------------------------------------------------------------------
// Equivariant bilinear maps

/// Bilinear map V1 x V2 -> W stored as a dW x (d1*d2) matrix; column index
/// is a*d2 + b over basis pairs.
struct BilinearMap {
  std::size_t d1 = 0, d2 = 0, dw = 0;
  Matrix<Rational> m;

  Vec<Rational> apply(const Vec<Rational>& u, const Vec<Rational>& v) const {
    Vec<Rational> out(dw, Rational(0));
    for (std::size_t a = 0; a < d1; ++a) {
      if (u[a].is_zero()) continue;
      for (std::size_t b = 0; b < d2; ++b) {
        if (v[b].is_zero()) continue;
        Rational c = u[a] * v[b];
        for (std::size_t o = 0; o < dw; ++o) out[o] += c * m(o, a * d2 + b);
      }
    }
    return out;
  }
};

enum class Group { O3, SO3 };

/// Kernel basis of the exact equivariance system: for each infinitesimal
/// generator E,  rho_W(E) L(u,v) = L(rho_1(E)u, v) + L(u, rho_2(E)v), and for
/// O(3) additionally rho_W(r) L(u,v) = L(rho_1(r)u, rho_2(r)v).
inline std::vector<BilinearMap> equivariant_bilinear_basis(const Rep& v1, const Rep& v2,
                                                           const Rep& w, Group group) {
  const std::size_t d1 = v1.dim, d2 = v2.dim, dw = w.dim;
  const std::size_t nunk = dw * d1 * d2;
  auto idx = [&](std::size_t o, std::size_t a, std::size_t b) { return o * d1 * d2 + a * d2 + b; };
  std::vector<Vec<Rational>> rows;
  for (std::size_t e = 0; e < 3; ++e)
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b)
        for (std::size_t o = 0; o < dw; ++o) {
          Vec<Rational> row(nunk, Rational(0));
          for (std::size_t o2 = 0; o2 < dw; ++o2) row[idx(o2, a, b)] += w.gens[e](o, o2);
          for (std::size_t a2 = 0; a2 < d1; ++a2) row[idx(o, a2, b)] -= v1.gens[e](a2, a);
          for (std::size_t b2 = 0; b2 < d2; ++b2) row[idx(o, a, b2)] -= v2.gens[e](b2, b);
          rows.push_back(std::move(row));
        }
  if (group == Group::O3)
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b)
        for (std::size_t o = 0; o < dw; ++o) {
          Vec<Rational> row(nunk, Rational(0));
          for (std::size_t o2 = 0; o2 < dw; ++o2) row[idx(o2, a, b)] += w.reflection(o, o2);
          for (std::size_t a2 = 0; a2 < d1; ++a2)
            for (std::size_t b2 = 0; b2 < d2; ++b2)
              row[idx(o, a2, b2)] -= v1.reflection(a2, a) * v2.reflection(b2, b);
          rows.push_back(std::move(row));
        }
  Reduced<Rational> red = reduce(Matrix<Rational>::from_rows(rows));
  std::vector<BilinearMap> out;
  for (std::size_t k = 0; k < red.kernel.cols(); ++k) {
    BilinearMap bm;
    bm.d1 = d1;
    bm.d2 = d2;
    bm.dw = dw;
    bm.m = Matrix<Rational>(dw, d1 * d2);
    for (std::size_t o = 0; o < dw; ++o)
      for (std::size_t c = 0; c < d1 * d2; ++c) bm.m(o, c) = red.kernel(idx(o, 0, 0) + c, k);
    out.push_back(std::move(bm));
  }
  return out;
}

/// The five named equivariant maps, in the fixed normalizations
///   M1: (v,w) -> v x w            M2: (v,w) -> v . w
///   M3: (v,A) -> A v              M4: (v,A) -> [star^{-1} v, A]
///   M5: (A,B) -> star [A,B]
inline BilinearMap named_map(const std::string& id) {
  auto fill = [&](std::size_t d1, std::size_t d2, std::size_t dw, auto&& fn) {
    BilinearMap bm;
    bm.d1 = d1;
    bm.d2 = d2;
    bm.dw = dw;
    bm.m = Matrix<Rational>(dw, d1 * d2);
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) {
        Vec<Rational> out = fn(a, b);
        for (std::size_t o = 0; o < dw; ++o) bm.m(o, a * d2 + b) = out[o];
      }
    return bm;
  };
  auto e3 = [](std::size_t k) {
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    return e;
  };
  auto s5 = [](std::size_t b) {
    S5<Rational> c{};
    for (auto& x : c) x = Rational(0);
    c[b] = Rational(1);
    return c;
  };
  if (id == "M1")
    return fill(3, 3, 3, [&](std::size_t a, std::size_t b) {
      V3<Rational> r = cross(e3(a), e3(b));
      return Vec<Rational>(r.begin(), r.end());
    });
  if (id == "M2")
    return fill(3, 3, 5, [&](std::size_t a, std::size_t b) {
      S5<Rational> r = odot(e3(a), e3(b));
      return Vec<Rational>(r.begin(), r.end());
    });
  if (id == "M3")
    return fill(3, 5, 3, [&](std::size_t a, std::size_t b) {
      V3<Rational> r = matvec3(sym_from_coords(s5(b)), e3(a));
      return Vec<Rational>(r.begin(), r.end());
    });
  if (id == "M4")
    return fill(3, 5, 5, [&](std::size_t a, std::size_t b) {
      S5<Rational> r = coords_from_sym(unstar(e3(a)).commutator(sym_from_coords(s5(b))));
      return Vec<Rational>(r.begin(), r.end());
    });
  if (id == "M5")
    return fill(5, 5, 3, [&](std::size_t a, std::size_t b) {
      V3<Rational> r = star(sym_from_coords(s5(a)).commutator(sym_from_coords(s5(b))));
      return Vec<Rational>(r.begin(), r.end());
    });
  throw Error("named_map: unknown id '" + id + "'");
}

/// Solver signature (V1, V2, W, group) for each named map.
inline std::array<Rep, 3> named_map_reps(const std::string& id) {
  if (id == "M1") return {standard_rep(RepKind::R3), standard_rep(RepKind::R3), standard_rep(RepKind::R3bar)};
  if (id == "M2") return {standard_rep(RepKind::R3), standard_rep(RepKind::R3), standard_rep(RepKind::S)};
  if (id == "M3") return {standard_rep(RepKind::R3), standard_rep(RepKind::S), standard_rep(RepKind::R3)};
  if (id == "M4") return {standard_rep(RepKind::R3), standard_rep(RepKind::S), standard_rep(RepKind::Sbar)};
  if (id == "M5") return {standard_rep(RepKind::S), standard_rep(RepKind::S), standard_rep(RepKind::R3bar)};
  throw Error("named_map_reps: unknown id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Invariant-ideal enumeration for the free model

struct InvariantIdealReport {
  std::vector<Subspace<Rational>> ideals;  // exactly {0, a, b}
  // diagnostics for the rejected candidates
  std::size_t y_block_closure_dim = 0;
  std::vector<std::pair<Rational, std::size_t>> graph_closure_dims;  // (lambda, dim)
  bool graph_family_projection_lambda_free = false;
};

/// Enumerates the sub-representations of f[3,3] that are ideals not
/// containing the center. The isotypic structure leaves: the y block, the
/// S block, the z block, and the one-parameter graph family
/// P_lambda = {(x,0,0,lambda x)}; the graph family is eliminated symbolically
/// because the y-projection of [P_lambda, f_1] is lambda-independent.
inline InvariantIdealReport invariant_ideals_f33() {
  InvariantIdealReport out;
  LieAlgebra<Rational> f = f33_model();
  Subspace<Rational> centre = Subspace<Rational>::coordinate(14, {6, 7, 8, 9, 10, 11, 12, 13});

  auto keeps = [&](const Subspace<Rational>& w) {
    Subspace<Rational> cl = ideal_closure(f, w);
    return !cl.contains(centre);
  };

  // irreducible invariant candidates
  Subspace<Rational> y_block = Subspace<Rational>::coordinate(14, {3, 4, 5});
  Subspace<Rational> s_block = Subspace<Rational>::coordinate(14, {6, 7, 8, 9, 10});
  Subspace<Rational> z_block = Subspace<Rational>::coordinate(14, {11, 12, 13});

  out.y_block_closure_dim = ideal_closure(f, y_block).dim();

  // graph family P_lambda, sampled...
  for (long num : {0L, 1L, -1L, 2L, -2L}) {
    for (long den : {1L, 2L}) {
      if (den == 2 && num != 1) continue;
      Rational lam(num, den);
      std::vector<Vec<Rational>> vecs;
      for (std::size_t i = 0; i < 3; ++i) {
        Vec<Rational> v(14, Rational(0));
        v[i] = Rational(1);
        v[11 + i] = lam;
        vecs.push_back(std::move(v));
      }
      out.graph_closure_dims.emplace_back(
          lam, ideal_closure(f, Subspace<Rational>::span(14, vecs)).dim());
    }
  }

  // ...and certified symbolically: over Q[lambda], the y-projection of
  // [P_lambda, f_1] equals x x x' with no lambda dependence.
  {
    auto vars = Poly::make_vars({"lambda"});
    Poly lam = Poly::variable(vars, "lambda");
    LieAlgebra<Poly> fp = f33_model<Poly>();
    out.graph_family_projection_lambda_free = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Vec<Poly> p(14, Poly(0));
        p[i] = Poly(1);
        p[11 + i] = lam;
        Vec<Poly> br = fp.bracket(p, basis_vector<Poly>(14, j));
        V3<Poly> ei{Poly(0), Poly(0), Poly(0)}, ej = ei;
        ei[i] = Poly(1);
        ej[j] = Poly(1);
        V3<Poly> expect = cross(ei, ej);
        for (std::size_t t = 0; t < 3; ++t)
          if (br[3 + t] != expect[t] || br[3 + t].degree_in("lambda") != 0)
            out.graph_family_projection_lambda_free = false;
      }
  }

  out.ideals.push_back(Subspace<Rational>::zero(14));
  if (keeps(z_block)) out.ideals.push_back(z_block);
  if (keeps(s_block)) out.ideals.push_back(s_block);
  return out;
}

}  // namespace carnot
