#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace carnot;

namespace {

template <class R>
std::string round_trip_text(const Document<R>& doc) {
  std::string text = render_document_json(document_to_json(doc));
  AnyDocument back = document_from_json(parse_document_text(text));
  const auto& typed = std::get<Document<R>>(back);
  return render_document_json(document_to_json(typed));
}

}  // namespace

TEST_CASE("documents round-trip byte-for-byte") {
  Document<Rational> c33;
  {
    ModelAlgebra m = build_iso_algebra(IsoFamily::C33, Rational(5), Rational(-4));
    c33.algebra = m.algebra;
    c33.subspaces.emplace_back("p", m.p);
    c33.subspaces.emplace_back("k", m.k);
  }
  std::string text = render_document_json(document_to_json(c33));
  CHECK(round_trip_text(c33) == text);
  CHECK(text.back() == '\n');
  CHECK(text.find('.') == std::string::npos);  // no floats anywhere

  Document<Rational> t2;
  {
    auto t = build_table2(Rational(0), Rational(-4));  // non-coordinate subspaces
    t2.algebra = t.model.algebra;
    t2.subspaces.emplace_back("p", t.model.p);
    t2.subspaces.emplace_back("k", t.model.k);
  }
  CHECK(round_trip_text(t2) == render_document_json(document_to_json(t2)));

  Document<Gaussian> soc;
  soc.algebra = so_plus_complex(3);
  CHECK(round_trip_text(soc) == render_document_json(document_to_json(soc)));
}

TEST_CASE("loaded documents reproduce the original algebra") {
  Document<Rational> doc;
  doc.algebra = a33_iso_algebra<Rational>(Rational(3));
  auto j = document_to_json(doc);
  auto back = std::get<Document<Rational>>(document_from_json(j));
  CHECK(back.algebra.dim() == 14);
  CHECK(back.algebra.params().size() == 1);
  CHECK(back.algebra.params()[0].second == Rational(3));
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t k = i + 1; k < 14; ++k)
      CHECK(back.algebra.bracket_terms(i, k) == doc.algebra.bracket_terms(i, k));
  CHECK(jacobi_defect(back.algebra).ok);
}

TEST_CASE("document validation rejects malformed input") {
  Document<Rational> doc;
  doc.algebra = so3();
  auto j = document_to_json(doc);
  auto bad = j;
  bad["brackets"][0]["i"] = 2;  // i >= j
  CHECK_THROWS_AS(document_from_json(bad), Error);
  bad = j;
  bad["scalars"] = "real";
  CHECK_THROWS_AS(document_from_json(bad), Error);
  bad = j;
  bad["dim"] = 2;
  CHECK_THROWS_AS(document_from_json(bad), Error);
}

TEST_CASE("a mutated document fails jacobi") {
  Document<Rational> doc;
  doc.algebra = c33_iso_algebra<Rational>(Rational(5), Rational(-4));
  auto j = document_to_json(doc);
  j["brackets"][0]["terms"][0]["c"] = "2";  // bump one structure constant
  auto mutated = std::get<Document<Rational>>(document_from_json(j));
  CHECK_FALSE(jacobi_defect(mutated.algebra).ok);
}

TEST_CASE("subspace serialization: index lists and matrices") {
  Document<Rational> doc;
  doc.algebra = so3();
  doc.subspaces.emplace_back("p", Subspace<Rational>::coordinate(3, {0, 2}));
  std::vector<std::vector<Rational>> rows{{Rational(1), Rational(1, 2), Rational(0)}};
  doc.subspaces.emplace_back("q", Subspace<Rational>::span(3, rows));
  auto j = document_to_json(doc);
  CHECK(j["subspaces"]["p"].is_array());
  CHECK(j["subspaces"]["p"][0].is_number_unsigned());
  CHECK(j["subspaces"]["q"][0].is_array());
  auto back = std::get<Document<Rational>>(document_from_json(j));
  CHECK(*back.find_subspace("p") == *doc.find_subspace("p"));
  CHECK(*back.find_subspace("q") == *doc.find_subspace("q"));
}

TEST_CASE("map documents round-trip and apply") {
  auto iso = iso_lemma_bk(Rational(5), Rational(-4));
  MapDocument md;
  md.kind = iso.kind;
  md.source = iso.source->name();
  md.target = iso.target->name();
  for (std::size_t i = 0; i < iso.matrix.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < iso.matrix.cols(); ++j) row.push_back(iso.matrix(i, j).str());
    md.matrix.push_back(std::move(row));
  }
  auto j = map_to_json(md);
  auto back = map_from_json(j);
  CHECK(map_matrix<Rational>(back) == iso.matrix);
}
