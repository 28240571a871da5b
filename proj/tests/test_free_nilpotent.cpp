#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "test_support.hpp"

using namespace carnot;
using carnot_test::hall_evaluation_matrix;

namespace {

// Independent oracle for layer dimensions: count Lyndon words of length k
// over an n-letter alphabet by brute force (strictly smaller than every
// proper rotation). The count agrees with the Hall-basis layer size.
std::size_t lyndon_count(std::size_t n, std::size_t k) {
  std::vector<std::size_t> word(k, 0);
  std::size_t count = 0;
  while (true) {
    bool lyndon = true;
    for (std::size_t r = 1; r < k && lyndon; ++r) {
      std::vector<std::size_t> rot;
      for (std::size_t i = 0; i < k; ++i) rot.push_back(word[(i + r) % k]);
      if (!(word < rot)) lyndon = false;
    }
    if (lyndon) ++count;
    std::size_t pos = k;
    while (pos > 0 && word[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    ++word[pos - 1];
    for (std::size_t i = pos; i < k; ++i) word[i] = 0;
  }
  return count;
}

}  // namespace

TEST_CASE("witt dimensions") {
  CHECK(witt_dim(3, 1) == 3);
  CHECK(witt_dim(3, 2) == 3);
  CHECK(witt_dim(3, 3) == 8);
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(2, 3) == 2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= 4; ++k) CHECK(witt_dim(n, k) == lyndon_count(n, k));
  CHECK_THROWS_AS(witt_dim(0, 1), Error);
}

TEST_CASE("hall basis sizes and ordering") {
  CHECK(hall_basis(3, 3).size() == 14);
  CHECK(hall_basis(2, 3).size() == 5);
  CHECK(hall_basis(1, 4).size() == 1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t r = 1; r <= 4; ++r) {
      auto words = hall_basis(n, r);
      std::size_t total = 0;
      for (std::size_t k = 1; k <= r; ++k) {
        std::size_t cnt = static_cast<std::size_t>(
            std::count_if(words.begin(), words.end(),
                          [k](const auto& w) { return w->weight == k; }));
        CHECK(cnt == witt_dim(n, k));
        total += cnt;
      }
      CHECK(total == words.size());
      // weights are nondecreasing along the list
      for (std::size_t i = 1; i < words.size(); ++i)
        CHECK(words[i - 1]->weight <= words[i]->weight);
    }
}

TEST_CASE("hall words serialize and parse") {
  auto words = hall_basis(3, 3);
  std::set<std::string> seen;
  for (const auto& w : words) {
    std::string s = w->str();
    CHECK(seen.insert(s).second);
    auto back = parse_hall_word(s);
    CHECK(back->str() == s);
  }
  CHECK_THROWS_AS(parse_hall_word("[1,2"), Error);
  CHECK_THROWS_AS(parse_hall_word("0"), Error);
}

TEST_CASE("free nilpotent algebras satisfy jacobi and have witt layers") {
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    auto fn = free_nilpotent(n, r);
    CHECK(jacobi_defect(fn.algebra).ok);
    for (std::size_t k = 1; k <= r; ++k) CHECK(fn.layer_dims[k - 1] == witt_dim(n, k));
  }
  // larger instances: construction only
  CHECK(free_nilpotent(4, 3).algebra.dim() == 30);
  CHECK(free_nilpotent(4, 4).algebra.dim() == 90);
  CHECK(free_nilpotent(3, 4).algebra.dim() == 32);
}

TEST_CASE("free nilpotent structure") {
  auto f33 = free_nilpotent(3, 3);
  CHECK(f33.algebra.dim() == 14);
  CHECK(series_dims(f33.algebra, SeriesKind::LowerCentral) ==
        std::vector<std::size_t>{14, 11, 8, 0});
  // the growth vector of a free algebra is the cumulative Witt sum
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 3}}) {
    auto fn = free_nilpotent(n, r);
    std::vector<std::size_t> gens(n);
    for (std::size_t i = 0; i < n; ++i) gens[i] = i;
    std::vector<std::size_t> expect;
    std::size_t acc = 0;
    for (std::size_t k = 1; k <= r; ++k) expect.push_back(acc += witt_dim(n, k));
    CHECK(growth_vector(fn.algebra, Subspace<Rational>::coordinate(fn.algebra.dim(), gens),
                        Subspace<Rational>::zero(fn.algebra.dim())) == expect);
  }
  auto heis = free_nilpotent(2, 2);
  CHECK(heis.algebra.dim() == 3);
  CHECK(center(heis.algebra).dim() == 1);
  auto ab = free_nilpotent(3, 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(ab.algebra.bracket_terms(i, j).empty());
}

TEST_CASE("hall normalization is confluent") {
  // normalizing [u, v] and -[v, u] through the table agree for all pairs,
  // and the table satisfies the Jacobi identity (checked above); spot check
  // the bilinear extension on random vectors in both orders
  auto fn = free_nilpotent(3, 3);
  carnot_test::Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    auto u = rng.vector(14), v = rng.vector(14);
    auto uv = fn.algebra.bracket(u, v);
    auto vu = fn.algebra.bracket(v, u);
    for (std::size_t i = 0; i < 14; ++i) CHECK(uv[i] == -vu[i]);
  }
}

TEST_CASE("the hall model and the block model of f[3,3] are isomorphic") {
  auto iso = f33_hall_iso();
  LinearMap<Rational> phi{&iso.hall.algebra, &iso.model, iso.matrix};
  CHECK(check_map(phi, MapMode::Isomorphism).ok);
  // generators map to the x block
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(iso.matrix.column(g) == basis_vector<Rational>(14, g));
}

TEST_CASE("f33 model center is the eight-dimensional top part") {
  auto f = f33_model();
  auto c = center(f);
  CHECK(c.dim() == 8);
  CHECK(c == Subspace<Rational>::coordinate(14, {6, 7, 8, 9, 10, 11, 12, 13}));
}

TEST_CASE("carnot quotients of the free model") {
  auto cq = carnot_quotients();
  CHECK(cq.f33.dim() == 14);
  CHECK(cq.a33_carnot.dim() == 11);
  CHECK(cq.c33_carnot.dim() == 9);
  CHECK(jacobi_defect(cq.a33_carnot).ok);
  CHECK(jacobi_defect(cq.c33_carnot).ok);
  // a33_carnot keeps x . y, kills the z part: [x e1, y e2] = 1/2 S12
  auto b = cq.a33_carnot.bracket(basis_vector<Rational>(11, 0), basis_vector<Rational>(11, 4));
  Vec<Rational> expect(11, Rational(0));
  expect[6] = Rational(1, 2);
  CHECK(b == expect);
  // c33_carnot keeps x x y, kills the S part
  auto b2 = cq.c33_carnot.bracket(basis_vector<Rational>(9, 0), basis_vector<Rational>(9, 4));
  Vec<Rational> expect2(9, Rational(0));
  expect2[8] = Rational(1);
  CHECK(b2 == expect2);
  // growth vectors of the quotients
  auto gv = [](const LieAlgebra<Rational>& g) {
    return growth_vector(g, Subspace<Rational>::coordinate(g.dim(), {0, 1, 2}),
                         Subspace<Rational>::zero(g.dim()));
  };
  CHECK(gv(cq.f33) == std::vector<std::size_t>{3, 6, 14});
  CHECK(gv(cq.a33_carnot) == std::vector<std::size_t>{3, 6, 11});
  CHECK(gv(cq.c33_carnot) == std::vector<std::size_t>{3, 6, 9});
}

TEST_CASE("general rank-n step-three carnot algebras") {
  auto c3 = cn3_carnot(3);
  CHECK(c3.algebra.dim() == 9);
  CHECK(jacobi_defect(c3.algebra).ok);
  CHECK(growth_vector(c3.algebra, c3.p, Subspace<Rational>::zero(9)) ==
        std::vector<std::size_t>{3, 6, 9});
  auto c4 = cn3_carnot(4);
  CHECK(c4.algebra.dim() == 14);
  CHECK(jacobi_defect(c4.algebra).ok);
  CHECK(growth_vector(c4.algebra, c4.p, Subspace<Rational>::zero(14)) ==
        std::vector<std::size_t>{4, 10, 14});
  auto c5 = cn3_carnot(5);
  CHECK(c5.algebra.dim() == 20);
  CHECK(growth_vector(c5.algebra, c5.p, Subspace<Rational>::zero(20)) ==
        std::vector<std::size_t>{5, 15, 20});
}

TEST_CASE("cn3(2) is the free algebra f[2,3]") {
  auto c2 = cn3_carnot(2);
  CHECK(c2.algebra.dim() == 5);
  auto fn = free_nilpotent(2, 3);
  // evaluate the Hall words on the generators of the first block
  auto m = hall_evaluation_matrix(fn, c2.algebra,
                                  {basis_vector<Rational>(5, 0), basis_vector<Rational>(5, 1)});
  LinearMap<Rational> phi{&fn.algebra, &c2.algebra, m};
  CHECK(check_map(phi, MapMode::Isomorphism).ok);
}

TEST_CASE("quaternionic step-two example") {
  auto q = quaternionic_step2();
  CHECK(q.algebra.dim() == 7);
  CHECK(jacobi_defect(q.algebra).ok);
  CHECK(growth_vector(q.algebra, q.p, Subspace<Rational>::zero(7)) ==
        std::vector<std::size_t>{4, 7});
  CHECK(center(q.algebra) == Subspace<Rational>::coordinate(7, {4, 5, 6}));
  // [X1, X3] = Y2 and [X4, X2] = Y2
  auto b = q.algebra.bracket(basis_vector<Rational>(7, 0), basis_vector<Rational>(7, 2));
  CHECK(b == Vec<Rational>{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                           Rational(1), Rational(0)});
  auto b2 = q.algebra.bracket(basis_vector<Rational>(7, 3), basis_vector<Rational>(7, 1));
  CHECK(b2 == b);
  // the center kills everything
  for (std::size_t i = 4; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      if (i == j) continue;
      auto br = q.algebra.bracket(basis_vector<Rational>(7, i), basis_vector<Rational>(7, j));
      for (const auto& x : br) CHECK(x.is_zero());
    }
}
