#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace carnot;
using carnot_test::Rng;

TEST_CASE("a33 ansatz: the (x e1, x e2, y e1) triple yields (E1) and (E2)") {
  AnsatzAlgebra a = a33_ansatz();
  // triple ((e1,0,0,0),(e2,0,0,0),(0,e1,0,0))
  Vec<Poly> res = jacobi_residual(a.algebra, 0, 1, 3);
  PolySpan span;
  for (const auto& p : res)
    if (!p.is_zero()) span.add(p);
  Poly e1 = Rational(5, 6) * a.var("c9") - a.var("c2");
  Poly e2 = a.var("c5") + Rational(5, 6) * a.var("c8") - a.var("c1");
  CHECK(span.contains(e1));
  CHECK(span.contains(e2));
  // and nothing beyond those two directions shows up at this triple
  CHECK(span.dim() == 2);
}

TEST_CASE("a33 ansatz recovers every named equation from its triple") {
  auto recs = recover_a33_equations(a33_ansatz());
  REQUIRE(recs.size() == 8);
  for (const auto& r : recs) {
    INFO(r.name << " from " << r.triple);
    CHECK(r.in_span);
  }
}

TEST_CASE("the solved a33 coefficients satisfy jacobi identically") {
  auto rep = verify_a33_solution();
  CHECK(rep.equations_hold);
  CHECK(rep.jacobi_zero_on_grid);
  CHECK(rep.matches_direct_construction);
  CHECK(rep.samples.size() == 7);
}

TEST_CASE("c7 = 7 kappa violates the jacobi identity") {
  // the [y,S] coefficient in the S row must be 3 kappa: with 7 kappa (and the
  // other coefficients solved at kappa = 1) equation (E7) fails and some
  // residual is nonzero
  AnsatzAlgebra a = a33_ansatz();
  std::vector<Rational> seven{Rational(2),  Rational(15), Rational(0),
                              Rational(-144), Rational(7), Rational(24),
                              Rational(7),  Rational(-6), Rational(18)};
  bool violated = false;
  for (std::size_t i = 0; i < 14 && !violated; ++i)
    for (std::size_t j = i + 1; j < 14 && !violated; ++j)
      for (std::size_t k = j + 1; k < 14 && !violated; ++k)
        for (const auto& p : jacobi_residual(a.algebra, i, j, k))
          if (!p.evaluated(seven).is_zero()) {
            violated = true;
            break;
          }
  CHECK(violated);
}

TEST_CASE("a33 ansatz at a generic coefficient assignment is equivariant") {
  AnsatzAlgebra a = a33_ansatz();
  Rng rng(61);
  std::vector<Rational> point;
  for (std::size_t i = 0; i < 9; ++i) point.push_back(rng.rational(5, 2));
  // evaluate the ansatz at the point
  auto eval = make_algebra<Rational>("a33_pt", a.algebra.labels(),
                                     [&](const Vec<Rational>& u, const Vec<Rational>& v) {
                                       Vec<Poly> up(14, Poly(0)), vp(14, Poly(0));
                                       for (std::size_t i = 0; i < 14; ++i) {
                                         up[i] = Poly(u[i]);
                                         vp[i] = Poly(v[i]);
                                       }
                                       Vec<Poly> b = a.algebra.bracket(up, vp);
                                       Vec<Rational> out(14);
                                       for (std::size_t i = 0; i < 14; ++i)
                                         out[i] = b[i].evaluated(point);
                                       return out;
                                     });
  // blockwise O(3) action: x R3, y R3bar, S sbar, w R3bar
  Rep r3 = standard_rep(RepKind::R3), r3b = standard_rep(RepKind::R3bar);
  Rep sb = standard_rep(RepKind::Sbar);
  auto act = [&](const Matrix<Rational>& q, int detq, const Vec<Rational>& v) {
    Vec<Rational> out(14, Rational(0));
    auto x = rep_group_apply(r3, q, detq, {v[0], v[1], v[2]});
    auto y = rep_group_apply(r3b, q, detq, {v[3], v[4], v[5]});
    auto s = rep_group_apply(sb, q, detq, {v[6], v[7], v[8], v[9], v[10]});
    auto w = rep_group_apply(r3b, q, detq, {v[11], v[12], v[13]});
    for (std::size_t i = 0; i < 3; ++i) {
      out[i] = x[i];
      out[3 + i] = y[i];
      out[11 + i] = w[i];
    }
    for (std::size_t i = 0; i < 5; ++i) out[6 + i] = s[i];
    return out;
  };
  Matrix<Rational> q = cayley_rotation({Rational(1, 2), Rational(-1, 3), Rational(1)});
  Matrix<Rational> refl = reflection3();
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = i + 1; j < 14; ++j) {
      auto ei = basis_vector<Rational>(14, i), ej = basis_vector<Rational>(14, j);
      CHECK(act(q, 1, eval.bracket(ei, ej)) == eval.bracket(act(q, 1, ei), act(q, 1, ej)));
      CHECK(act(refl, -1, eval.bracket(ei, ej)) ==
            eval.bracket(act(refl, -1, ei), act(refl, -1, ej)));
    }
}

TEST_CASE("f33 ansatz at a generic coefficient assignment is equivariant") {
  AnsatzAlgebra a = f33_ansatz();
  Rng rng(62);
  std::vector<Rational> point;
  for (std::size_t i = 0; i < 18; ++i) point.push_back(rng.rational(5, 2));
  auto eval = make_algebra<Rational>("f33_pt", a.algebra.labels(),
                                     [&](const Vec<Rational>& u, const Vec<Rational>& v) {
                                       Vec<Poly> up(17, Poly(0)), vp(17, Poly(0));
                                       for (std::size_t i = 0; i < 17; ++i) {
                                         up[i] = Poly(u[i]);
                                         vp[i] = Poly(v[i]);
                                       }
                                       Vec<Poly> b = a.algebra.bracket(up, vp);
                                       Vec<Rational> out(17);
                                       for (std::size_t i = 0; i < 17; ++i)
                                         out[i] = b[i].evaluated(point);
                                       return out;
                                     });
  // blocks x:R3, y:R3bar, S:sbar, z:R3, w:R3bar
  Rep r3 = standard_rep(RepKind::R3), r3b = standard_rep(RepKind::R3bar);
  Rep sb = standard_rep(RepKind::Sbar);
  auto act = [&](const Matrix<Rational>& q, int detq, const Vec<Rational>& v) {
    Vec<Rational> out(17, Rational(0));
    auto x = rep_group_apply(r3, q, detq, {v[0], v[1], v[2]});
    auto y = rep_group_apply(r3b, q, detq, {v[3], v[4], v[5]});
    auto s = rep_group_apply(sb, q, detq, {v[6], v[7], v[8], v[9], v[10]});
    auto z = rep_group_apply(r3, q, detq, {v[11], v[12], v[13]});
    auto w = rep_group_apply(r3b, q, detq, {v[14], v[15], v[16]});
    for (std::size_t i = 0; i < 3; ++i) {
      out[i] = x[i];
      out[3 + i] = y[i];
      out[11 + i] = z[i];
      out[14 + i] = w[i];
    }
    for (std::size_t i = 0; i < 5; ++i) out[6 + i] = s[i];
    return out;
  };
  Matrix<Rational> q = cayley_rotation({Rational(1, 3), Rational(1, 2), Rational(-1)});
  Matrix<Rational> refl = reflection3();
  for (std::size_t i = 0; i < 17; ++i)
    for (std::size_t j = i + 1; j < 17; ++j) {
      auto ei = basis_vector<Rational>(17, i), ej = basis_vector<Rational>(17, j);
      CHECK(act(q, 1, eval.bracket(ei, ej)) == eval.bracket(act(q, 1, ei), act(q, 1, ej)));
      CHECK(act(refl, -1, eval.bracket(ei, ej)) ==
            eval.bracket(act(refl, -1, ei), act(refl, -1, ej)));
    }
}

TEST_CASE("f33 rigidity: equations, chain, and the zero assignment") {
  RigidityReport rep = verify_rigidity();
  CHECK(rep.ok);
  CHECK(rep.span_dim > 0);
  REQUIRE(rep.equations_in_span.size() == 18);
  for (const auto& [name, in] : rep.equations_in_span) {
    INFO(name);
    CHECK(in);
  }
  // the chain reproduced f4 = 72/49 c2^3
  bool saw_f4 = false;
  for (const auto& s : rep.chain) {
    CHECK(s.ok);
    if (s.result.find("72/49") != std::string::npos) saw_f4 = true;
  }
  CHECK(saw_f4);
  CHECK(rep.zero_assignment_is_lie);
  CHECK(rep.zero_algebra_matches_f33_iso);
  CHECK(rep.growth == std::vector<std::size_t>{3, 6, 14});
}

TEST_CASE("f33 ansatz: a nonzero assignment violates jacobi") {
  AnsatzAlgebra a = f33_ansatz();
  // any single nonzero coefficient must break the identity somewhere:
  // collect residuals once and evaluate at b5 = 1, rest 0
  std::vector<Rational> pt(18, Rational(0));
  pt[6] = Rational(1);  // b5
  bool violated = false;
  for (std::size_t i = 0; i < 17 && !violated; ++i)
    for (std::size_t j = i + 1; j < 17 && !violated; ++j)
      for (std::size_t k = j + 1; k < 17 && !violated; ++k)
        for (const auto& p : jacobi_residual(a.algebra, i, j, k))
          if (!p.evaluated(pt).is_zero()) {
            violated = true;
            break;
          }
  CHECK(violated);
}

TEST_CASE("poly span arithmetic") {
  auto vars = Poly::make_vars({"u", "v"});
  Poly u = Poly::variable(vars, "u"), v = Poly::variable(vars, "v");
  PolySpan span;
  span.add(u + v);
  span.add(u - v);
  CHECK(span.dim() == 2);
  CHECK(span.contains(u));
  CHECK(span.contains(Poly(3) * v));
  CHECK_FALSE(span.contains(u * v));
  span.add(u);  // dependent, no growth
  CHECK(span.dim() == 2);
}
