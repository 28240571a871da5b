#pragma once

#include <string>
#include <vector>

#include "carnot/hall.hpp"
#include "carnot/lie.hpp"
#include "carnot/space3.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

/// The step-and-rank-three free model on blocks (x, y, S, z):
///   [ (x1,y1,S1,z1), (x2,y2,S2,z2) ]
///     = ( 0, x1 x x2, x1 . y2 - y1 . x2, x1 x y2 + y1 x x2 )
/// with . the traceless symmetrization product.
template <class R = Rational>
LieAlgebra<R> f33_model() {
  std::vector<std::string> labels = indexed_labels("x", 3);
  for (auto& l : indexed_labels("y", 3)) labels.push_back(l);
  for (auto& l : s_labels()) labels.push_back(l);
  for (auto& l : indexed_labels("z", 3)) labels.push_back(l);
  return make_algebra<R>("f33", labels, [](const Vec<R>& u, const Vec<R>& v) {
    V3<R> x1 = get3(u, 0), y1 = get3(u, 3), z1 = get3(u, 11);
    V3<R> x2 = get3(v, 0), y2 = get3(v, 3), z2 = get3(v, 11);
    (void)z1; (void)z2;  // z block is central
    Vec<R> out(14, R(0));
    add3(out, 3, cross(x1, x2));
    add5(out, 6, s5_sub(odot(x1, y2), odot(y1, x2)));
    add3(out, 11, v3_add(cross(x1, y2), cross(y1, x2)));
    return out;
  });
}

/// Isomorphism from the Hall-basis free nilpotent f[3,3] onto the block
/// model: each Hall word is evaluated as an iterated model bracket of the
/// generators x_1, x_2, x_3.
struct F33HallIso {
  FreeNilpotent hall;
  LieAlgebra<Rational> model;
  Matrix<Rational> matrix;  // 14 x 14, Hall coordinates -> model coordinates
};

inline F33HallIso f33_hall_iso() {
  F33HallIso out;
  out.hall = free_nilpotent(3, 3);
  out.model = f33_model();
  std::vector<Vec<Rational>> cols;
  std::function<Vec<Rational>(const HallWord&)> eval = [&](const HallWord& w) -> Vec<Rational> {
    if (w.is_generator()) return basis_vector<Rational>(14, static_cast<std::size_t>(w.gen));
    return out.model.bracket(eval(*w.left), eval(*w.right));
  };
  for (const auto& w : out.hall.words) cols.push_back(eval(*w));
  out.matrix = Matrix<Rational>::from_columns(cols);
  return out;
}

/// The two invariant ideals of the free model and its Carnot quotients.
struct CarnotQuotients {
  LieAlgebra<Rational> f33;         // dim 14
  LieAlgebra<Rational> a33_carnot;  // f33 / a, dim 11 (z killed)
  LieAlgebra<Rational> c33_carnot;  // f33 / b, dim 9  (S killed)
  Subspace<Rational> ideal_a;       // z block
  Subspace<Rational> ideal_b;       // S block
  Matrix<Rational> projection_a;    // 11 x 14
  Matrix<Rational> projection_b;    // 9 x 14
};

inline CarnotQuotients carnot_quotients() {
  CarnotQuotients out;
  out.f33 = f33_model();
  out.ideal_a = Subspace<Rational>::coordinate(14, {11, 12, 13});
  out.ideal_b = Subspace<Rational>::coordinate(14, {6, 7, 8, 9, 10});
  auto qa = quotient(out.f33, out.ideal_a);
  auto qb = quotient(out.f33, out.ideal_b);
  out.a33_carnot = std::move(qa.algebra);
  out.a33_carnot.name() = "a33_carnot";
  out.c33_carnot = std::move(qb.algebra);
  out.c33_carnot.name() = "c33_carnot";
  out.projection_a = std::move(qa.projection_matrix);
  out.projection_b = std::move(qb.projection_matrix);
  return out;
}

/// The general rank-n step-three Carnot algebra on R^n + so(n) + R^n:
///   [(x,A,u), (y,B,v)] = (0, y x^t - x y^t, A y - B x).
/// so(n) coordinates follow the A_ij = e_j e_i^t - e_i e_j^t basis in
/// lexicographic (i,j) order.
struct Cn3 {
  LieAlgebra<Rational> algebra;
  Subspace<Rational> p;            // first block
  std::vector<std::size_t> layer_dims;
};

inline Cn3 cn3_carnot(std::size_t n) {
  if (n < 2) throw Error("cn3_carnot: n >= 2 required");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t nr = pairs.size();
  const std::size_t dim = n + nr + n;

  auto to_matrix = [&](const Vec<Rational>& v, std::size_t off) {
    Matrix<Rational> m(n, n);
    for (std::size_t p2 = 0; p2 < nr; ++p2) {
      auto [i, j] = pairs[p2];
      m(j, i) += v[off + p2];
      m(i, j) -= v[off + p2];
    }
    return m;
  };

  std::vector<std::string> labels = indexed_labels("x", n);
  for (const auto& [i, j] : pairs)
    labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
  for (auto& l : indexed_labels("u", n)) labels.push_back(l);

  Cn3 out;
  out.algebra = make_algebra<Rational>(
      "c" + std::to_string(n) + "3_carnot", labels, [&](const Vec<Rational>& u, const Vec<Rational>& v) {
        Vec<Rational> out_v(dim, Rational(0));
        Matrix<Rational> ma = to_matrix(u, n), mb = to_matrix(v, n);
        // y x^t - x y^t
        for (std::size_t p2 = 0; p2 < nr; ++p2) {
          auto [i, j] = pairs[p2];
          out_v[n + p2] = v[j] * u[i] - u[j] * v[i];  // entry (j,i) of y x^t - x y^t
        }
        for (std::size_t i = 0; i < n; ++i) {
          Rational acc(0);
          for (std::size_t j = 0; j < n; ++j) acc += ma(i, j) * v[j] - mb(i, j) * u[j];
          out_v[n + nr + i] = acc;
        }
        return out_v;
      });
  std::vector<std::size_t> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = i;
  out.p = Subspace<Rational>::coordinate(dim, first);
  out.layer_dims = {n, nr, n};
  return out;
}

/// Step-two, rank-four algebra with three-dimensional center and the
/// quaternionic pairing of generators.
struct QuaternionicStep2 {
  LieAlgebra<Rational> algebra;
  Subspace<Rational> p;
};

inline QuaternionicStep2 quaternionic_step2() {
  std::vector<std::string> labels = indexed_labels("X", 4);
  for (auto& l : indexed_labels("Y", 3)) labels.push_back(l);
  LieAlgebra<Rational> g("quaternionic_step2", labels);
  auto single = [&](std::size_t k) {
    LieAlgebra<Rational>::Terms t;
    t.emplace_back(4 + k, Rational(1));
    return t;
  };
  auto single_neg = [&](std::size_t k) {
    LieAlgebra<Rational>::Terms t;
    t.emplace_back(4 + k, Rational(-1));
    return t;
  };
  g.set_bracket(0, 1, single(0));      // [X1,X2] = Y1
  g.set_bracket(2, 3, single(0));      // [X3,X4] = Y1
  g.set_bracket(0, 2, single(1));      // [X1,X3] = Y2
  g.set_bracket(1, 3, single_neg(1));  // [X4,X2] = Y2
  g.set_bracket(0, 3, single(2));      // [X1,X4] = Y3
  g.set_bracket(1, 2, single(2));      // [X2,X3] = Y3
  QuaternionicStep2 out;
  out.algebra = std::move(g);
  out.p = Subspace<Rational>::coordinate(7, {0, 1, 2, 3});
  return out;
}

}  // namespace carnot
