#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace carnot;
using carnot_test::Rng;

TEST_CASE("c33 bracket instance at (5,-4)") {
  auto g = c33_iso_algebra<Rational>(Rational(5), Rational(-4));
  // [x e1, z e2] = (0, 5 e3, 0, -4 e3)
  auto b = g.bracket(basis_vector<Rational>(12, 0), basis_vector<Rational>(12, 7));
  Vec<Rational> expect(12, Rational(0));
  expect[5] = Rational(5);
  expect[11] = Rational(-4);
  CHECK(b == expect);
}

TEST_CASE("c33 family: jacobi on the parameter grid") {
  for (long a1 : {-2, -1, 0, 1, 2})
    for (long a2 : {-2, -1, 0, 1, 2})
      CHECK(jacobi_defect(c33_iso_algebra<Rational>(Rational(a1), Rational(a2))).ok);
  CHECK(jacobi_defect(c33_iso_algebra<Rational>(Rational(5), Rational(-4))).ok);
  CHECK(jacobi_defect(c33_iso_algebra<Rational>(Rational(3), Rational(4))).ok);
}

TEST_CASE("a33 family: jacobi at seven kappa samples") {
  for (long k : {0, 1, -1, 2, -2, 3, 4})
    CHECK(jacobi_defect(a33_iso_algebra<Rational>(Rational(k))).ok);
  CHECK(jacobi_defect(a33_iso_algebra<Rational>(Rational(1, 2))).ok);
}

TEST_CASE("f33 iso algebra is a Lie algebra with the right structure") {
  auto m = build_iso_algebra(IsoFamily::F33);
  CHECK(m.algebra.dim() == 17);
  CHECK(jacobi_defect(m.algebra).ok);
  CHECK(is_subalgebra(m.algebra, m.k));
  CHECK(intersection(m.p, m.k).dim() == 0);
  // the isotropy acts on the x block by the cross product: [w e1, x e2] = e3
  auto b = m.algebra.bracket(basis_vector<Rational>(17, 14), basis_vector<Rational>(17, 1));
  Vec<Rational> expect(17, Rational(0));
  expect[2] = Rational(1);
  CHECK(b == expect);
}

TEST_CASE("model algebra invariants: [k, p] lands in p") {
  for (auto fam : {IsoFamily::C33, IsoFamily::A33, IsoFamily::F33}) {
    ModelAlgebra m = fam == IsoFamily::C33
                         ? build_iso_algebra(fam, Rational(5), Rational(-4))
                         : fam == IsoFamily::A33 ? build_iso_algebra(fam, Rational(2))
                                                 : build_iso_algebra(fam);
    CHECK(m.p.contains(bracket_span(m.algebra, m.k, m.p)));
    CHECK(is_subalgebra(m.algebra, m.k));
  }
}

TEST_CASE("scaling dilations") {
  auto iso = iso_scaling_c33(Rational(5), Rational(-4), Rational(2));
  CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
  // target parameters are a1/l^2, a2/l^4
  CHECK(iso.target->params()[0].second == Rational(5, 4));
  CHECK(iso.target->params()[1].second == Rational(-1, 4));
  for (long l : {3, -2}) {
    auto i2 = iso_scaling_c33(Rational(7), Rational(2), Rational(l));
    CHECK(check_map(i2.map(), MapMode::Isomorphism).ok);
  }
  for (long k : {1, -1, 3}) {
    auto i3 = iso_scaling_a33(Rational(k), Rational(2));
    CHECK(check_map(i3.map(), MapMode::Isomorphism).ok);
    CHECK(i3.target->params()[0].second == Rational(k, 4));
  }
}

TEST_CASE("b family and its classical identifications") {
  CHECK(killing_signature(b_family(Rational(1))) == Signature{0, 6, 0});
  CHECK(killing_signature(b_family(Rational(-1))) == Signature{3, 3, 0});
  auto iso = iso_b1_so3_so3();
  CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
}

TEST_CASE("lemma psi into b_k + b_khat at three instances") {
  struct Case {
    long a1, a2, k, kh;
  } cases[] = {{5, -4, 4, 1}, {3, 4, 4, -1}, {0, 1, 1, -1}};
  for (const auto& c : cases) {
    auto iso = iso_lemma_bk(Rational(c.a1), Rational(c.a2));
    CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
    CHECK(killing_signature(*iso.source) == killing_signature(*iso.target));
    // the built target is b_k + b_khat for the advertised roots
    CHECK(iso.target->params()[0].second == Rational(c.k));
    CHECK(iso.target->params()[1].second == Rational(c.kh));
  }
  CHECK_THROWS_AS(iso_lemma_bk(Rational(0), Rational(-1)), UnsupportedParameter);
  CHECK_THROWS_AS(iso_lemma_bk(Rational(1), Rational(1)), UnsupportedParameter);  // disc 5
}

TEST_CASE("lemma psi into so(3,1) + so(3,1) on the complex locus") {
  for (auto [a1, a2] : {std::pair<long, long>{0, -4}, {-6, -25}, {6, -25}}) {
    auto iso = iso_lemma_complex(Rational(a1), Rational(a2));
    CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
    CHECK(killing_signature(*iso.source) == Signature{6, 6, 0});
  }
  // zeta = 1 + i at (0, -4)
  auto iso = iso_lemma_complex(Rational(0), Rational(-4));
  CHECK(iso.source->params()[0].second == Rational(0));
  CHECK_THROWS_AS(iso_lemma_complex(Rational(5), Rational(-4)), UnsupportedParameter);
}

TEST_CASE("lemma phi into the semidirect products on the parabolic locus") {
  for (auto [a1, a2] : {std::pair<long, long>{2, -1}, {-2, -1}, {8, -16}, {-8, -16}}) {
    auto iso = iso_lemma_exceptional(Rational(a1), Rational(a2));
    CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
    CHECK(killing_signature(*iso.source) == killing_signature(*iso.target));
  }
  CHECK_THROWS_AS(iso_lemma_exceptional(Rational(5), Rational(-4)), UnsupportedParameter);
}

TEST_CASE("g2 split form closes in the 7x7 span and has split signature") {
  auto g = g2_split();
  CHECK(g.dim() == 14);
  CHECK(jacobi_defect(g).ok);
  CHECK(killing_signature(g) == Signature{8, 6, 0});
  // an escape is detected: so(3) matrices extended by a non-closing element
  std::vector<Matrix<Rational>> bad;
  for (std::size_t k = 0; k < 3; ++k) {
    V3<Rational> e = v3_zero<Rational>();
    e[k] = Rational(1);
    bad.push_back(unstar(e));
  }
  Matrix<Rational> d(3, 3);
  d(0, 0) = Rational(1);
  bad.push_back(d);  // [unstar(e1), D1] is not in the span
  CHECK_THROWS_AS(
      detail::algebra_from_matrix_basis<Rational>("bad", {"a", "b", "c", "d"}, bad), Error);
}

TEST_CASE("g2 compact form has definite killing form") {
  auto g = g2_compact();
  CHECK(g.dim() == 14);
  CHECK(jacobi_defect(g).ok);
  CHECK(killing_signature(g) == Signature{0, 14, 0});
}

TEST_CASE("su(3) block") {
  auto g = su3();
  CHECK(g.dim() == 8);
  CHECK(jacobi_defect(g).ok);
  CHECK(killing_signature(g) == Signature{0, 8, 0});
}

TEST_CASE("a33(1) and a33(-1) are the two g2 forms") {
  auto pos = iso_a33_to_g2c(Rational(1));
  CHECK(check_map(pos.map(), MapMode::Isomorphism).ok);
  auto neg = iso_a33_to_g2s(Rational(-1));
  CHECK(check_map(neg.map(), MapMode::Isomorphism).ok);
  CHECK(killing_signature(a33_iso_algebra<Rational>(Rational(1))) == Signature{0, 14, 0});
  CHECK(killing_signature(a33_iso_algebra<Rational>(Rational(-1))) == Signature{8, 6, 0});
  // more on-locus instances (kappa a rational square)
  for (long k : {4, 9}) {
    CHECK(check_map(iso_a33_to_g2c(Rational(k)).map(), MapMode::Isomorphism).ok);
    CHECK(check_map(iso_a33_to_g2s(Rational(-k)).map(), MapMode::Isomorphism).ok);
  }
  CHECK_THROWS_AS(iso_a33_to_g2c(Rational(2)), UnsupportedParameter);
  CHECK_THROWS_AS(iso_a33_to_g2s(Rational(1)), UnsupportedParameter);
}

TEST_CASE("associated graded of each family matches its carnot quotient") {
  auto cq = carnot_quotients();
  for (auto [a1, a2] : {std::pair<long, long>{5, -4}, {3, 4}, {0, 0}, {1, 1}}) {
    auto m = build_iso_algebra(IsoFamily::C33, Rational(a1), Rational(a2));
    CHECK(graded_matches(associated_graded(m.algebra, m.p, m.k), cq.c33_carnot));
  }
  for (long k : {0, 1, -1, 2}) {
    auto m = build_iso_algebra(IsoFamily::A33, Rational(k));
    CHECK(graded_matches(associated_graded(m.algebra, m.p, m.k), cq.a33_carnot));
  }
  auto mf = build_iso_algebra(IsoFamily::F33);
  CHECK(graded_matches(associated_graded(mf.algebra, mf.p, mf.k), cq.f33));
}

TEST_CASE("holonomy analysis at the three lemma cases") {
  // (5,-4): c^2 in {4, 1}; trivial exactly at c = +-1, +-2
  std::vector<Rational> sweep;
  for (long den = 1; den <= 3; ++den)
    for (long num = -3 * den; num <= 3 * den; ++num) sweep.emplace_back(num, den);
  auto rep = holonomy_analysis(Rational(5), Rational(-4), sweep);
  REQUIRE(rep.roots_rational);
  CHECK(rep.roots == std::vector<Rational>{Rational(4), Rational(1)});
  for (const auto& cert : rep.certificates) {
    bool expect = cert.c == Rational(1) || cert.c == Rational(-1) || cert.c == Rational(2) ||
                  cert.c == Rational(-2);
    INFO("c = " << cert.c.str());
    CHECK(cert.trivial == expect);
    CHECK(cert.closure_dim == (expect ? 9u : 12u));
  }
  // (0,1): roots 1 and -1; only c = +-1 real
  auto rep2 = holonomy_analysis(Rational(0), Rational(1), sweep);
  REQUIRE(rep2.roots_rational);
  CHECK(rep2.roots == std::vector<Rational>{Rational(1), Rational(-1)});
  CHECK(rep2.real_c == std::vector<Rational>{Rational(1), Rational(-1)});
  for (const auto& cert : rep2.certificates) {
    bool expect = cert.c == Rational(1) || cert.c == Rational(-1);
    CHECK(cert.trivial == expect);
  }
  // (0,-1): no real c at all
  auto rep3 = holonomy_analysis(Rational(0), Rational(-1), sweep);
  CHECK_FALSE(rep3.discriminant_nonnegative);
  CHECK(rep3.real_c.empty());
  for (const auto& cert : rep3.certificates) CHECK_FALSE(cert.trivial);
}

TEST_CASE("holonomy verdicts agree with the root condition on a sweep") {
  // c is trivial iff c^4 - a1 c^2 - a2 = 0
  std::vector<Rational> sweep;
  for (long den = 1; den <= 2; ++den)
    for (long num = -2 * den; num <= 2 * den; ++num) sweep.emplace_back(num, den);
  for (auto [a1v, a2v] : {std::pair<long, long>{5, -4}, {0, 1}, {0, 0}, {1, 0}}) {
    Rational a1(a1v), a2(a2v);
    auto rep = holonomy_analysis(a1, a2, sweep);
    for (const auto& cert : rep.certificates) {
      Rational c2 = cert.c * cert.c;
      bool root = (c2 * c2 - a1 * c2 - a2).is_zero();
      INFO("(a1,a2,c) = (" << a1.str() << "," << a2.str() << "," << cert.c.str() << ")");
      CHECK(cert.trivial == root);
    }
  }
}

TEST_CASE("table 1 rows at rational loci") {
  struct Case {
    long a1, a2;
    const char* row;
  } cases[] = {{3, 4, "so(3)+so(3,1)"},
               {-4, 0, "R3+so(3,1)"},
               {4, 0, "R3+so(4)"},
               {5, -4, "so(3)+so(4)"},
               {2, -1, "so(3)|x(R3xR3)"}};
  for (const auto& c : cases) {
    auto t = build_table1(Rational(c.a1), Rational(c.a2));
    INFO("(a1,a2) = (" << c.a1 << "," << c.a2 << ")");
    CHECK(t.row == c.row);
    CHECK(jacobi_defect(t.model.algebra).ok);
    CHECK(t.model.algebra.dim() == 9);
    CHECK(growth_vector(t.model.algebra, t.model.p, t.model.k) ==
          std::vector<std::size_t>{3, 6, 9});
  }
  CHECK_THROWS_AS(build_table1(Rational(1), Rational(1)), UnsupportedParameter);   // sqrt(5)
  CHECK_THROWS_AS(build_table1(Rational(-5), Rational(-4)), UnsupportedParameter); // wrong region
}

TEST_CASE("table 2 rows at rational loci") {
  struct Case {
    long a1, a2;
    const char* row;
  } cases[] = {{-5, -4, "so(3,1)+so(3,1)"},
               {-2, -1, "so(3,1)|x(R3xR3)"},
               {0, -4, "so(3,1)+so(3,1) [complex]"}};
  for (const auto& c : cases) {
    auto t = build_table2(Rational(c.a1), Rational(c.a2));
    INFO("(a1,a2) = (" << c.a1 << "," << c.a2 << ")");
    CHECK(t.row == c.row);
    CHECK(jacobi_defect(t.model.algebra).ok);
    CHECK(t.model.algebra.dim() == 12);
    CHECK(growth_vector(t.model.algebra, t.model.p, t.model.k) ==
          std::vector<std::size_t>{3, 6, 9});
    CHECK(is_subalgebra(t.model.algebra, t.model.k));
  }
  CHECK_THROWS_AS(build_table2(Rational(5), Rational(-4)), UnsupportedParameter);
  CHECK_THROWS_AS(build_table2(Rational(0), Rational(-2)), UnsupportedParameter);  // zeta irrational
}

TEST_CASE("table 3 rows for n in {2,3,4}") {
  for (std::size_t n : {2u, 3u, 4u}) {
    std::vector<std::size_t> expect{n, n * (n + 1) / 2, n * (n + 3) / 2};
    struct Case {
      long a1, a2;
      const char* row;
    } cases[] = {{3, 4, "so(n+1)+so(n,1)"},
                 {5, -4, "so(n+1)+so(n+1)"},
                 {-5, -4, "so(n,1)+so(n,1)"},
                 {0, -4, "so(n+1,C)"},
                 {2, -1, "so(n+1)|x"},
                 {-2, -1, "so(n,1)|x"}};
    for (const auto& c : cases) {
      auto t = build_table3(n, Rational(c.a1), Rational(c.a2));
      INFO("n = " << n << ", (a1,a2) = (" << c.a1 << "," << c.a2 << ") row " << t.row);
      CHECK(t.row == c.row);
      CHECK(jacobi_defect(t.model.algebra).ok);
      CHECK(growth_vector(t.model.algebra, t.model.p, t.model.k) == expect);
    }
  }
  CHECK_THROWS_AS(build_table3(3, Rational(1), Rational(1)), UnsupportedParameter);
  CHECK_THROWS_AS(build_table3(7, Rational(3), Rational(4)), UnsupportedParameter);
  // the supported range tops out at n = 5
  auto t5 = build_table3(5, Rational(3), Rational(4));
  CHECK(jacobi_defect(t5.model.algebra).ok);
  CHECK(growth_vector(t5.model.algebra, t5.model.p, t5.model.k) ==
        std::vector<std::size_t>{5, 15, 20});
}

TEST_CASE("g2 horizontal structures bracket-generate") {
  auto split = g2_horizontal(true);
  CHECK(split.p.dim() == 3);
  CHECK(split.growth == std::vector<std::size_t>{3, 6, 14});
  auto compact = g2_horizontal(false);
  CHECK(compact.p.dim() == 3);
  CHECK(compact.growth == std::vector<std::size_t>{3, 6, 14});
}

TEST_CASE("build_isomorphism dispatch and killing invariance across kinds") {
  struct Case {
    const char* kind;
    long a1, a2, lambda;
  } cases[] = {{"lemma_bk", 5, -4, 1},      {"lemma_complex", 0, -4, 1},
               {"lemma_exceptional", 2, -1, 1}, {"b1_so3_so3", 0, 0, 1},
               {"so3c_so31", 0, 0, 1},      {"a33_to_g2c", 1, 0, 1},
               {"a33_to_g2s", -1, 0, 1},    {"scaling_c33", 5, -4, 2},
               {"scaling_a33", 1, 0, 2}};
  for (const auto& c : cases) {
    auto iso = build_isomorphism(c.kind, Rational(c.a1), Rational(c.a2), Rational(c.lambda));
    INFO(c.kind);
    CHECK(check_map(iso.map(), MapMode::Isomorphism).ok);
    CHECK(killing_signature(*iso.source) == killing_signature(*iso.target));
  }
  CHECK_THROWS_AS(build_isomorphism("nope", Rational(0), Rational(0), Rational(1)), Error);
}
