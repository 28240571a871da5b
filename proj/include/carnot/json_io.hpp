#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "carnot/gaussian.hpp"
#include "carnot/lie.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

using Json = nlohmann::ordered_json;

/// An algebra plus named subspaces, as carried by the JSON interchange
/// format. Scalars are serialized in the exact grammar ("p/q" rationals,
/// "RE+IM*i" gaussians); no floats ever appear in documents.
template <class R>
struct Document {
  using Scalar = R;

  LieAlgebra<R> algebra;
  std::vector<std::pair<std::string, Subspace<R>>> subspaces;

  const Subspace<R>* find_subspace(const std::string& name) const {
    for (const auto& [n, s] : subspaces)
      if (n == name) return &s;
    return nullptr;
  }
};

using AnyDocument = std::variant<Document<Rational>, Document<Gaussian>>;

namespace detail {

inline std::string scalar_str(const Rational& x) { return x.str(); }
inline std::string scalar_str(const Gaussian& x) { return x.str(); }

template <class R>
R scalar_parse(const std::string& s);
template <>
inline Rational scalar_parse<Rational>(const std::string& s) { return Rational::parse(s); }
template <>
inline Gaussian scalar_parse<Gaussian>(const std::string& s) { return Gaussian::parse(s); }

/// Index list when the subspace is spanned by standard basis vectors.
template <class R>
std::optional<std::vector<std::size_t>> coordinate_indices(const Subspace<R>& s) {
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < s.ambient(); ++c)
      if (!(s.basis()(r, c) == R(0))) {
        ++nonzero;
        where = c;
      }
    if (nonzero != 1 || !(s.basis()(r, where) == R(1))) return std::nullopt;
    idx.push_back(where);
  }
  return idx;
}

}  // namespace detail

template <class R>
Json document_to_json(const Document<R>& doc) {
  const LieAlgebra<R>& g = doc.algebra;
  Json j;
  j["name"] = g.name();
  j["scalars"] = RingTraits<R>::name;
  if (!g.params().empty()) {
    Json p = Json::object();
    for (const auto& [k, v] : g.params()) p[k] = detail::scalar_str(v);
    j["params"] = p;
  }
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      const auto& terms = g.bracket_terms(i, jj);
      if (terms.empty()) continue;
      Json e;
      e["i"] = i;
      e["j"] = jj;
      Json ts = Json::array();
      for (const auto& [k, c] : terms) {
        Json t;
        t["k"] = k;
        t["c"] = detail::scalar_str(c);
        ts.push_back(std::move(t));
      }
      e["terms"] = std::move(ts);
      brackets.push_back(std::move(e));
    }
  j["brackets"] = std::move(brackets);
  if (!doc.subspaces.empty()) {
    Json subs = Json::object();
    for (const auto& [name, s] : doc.subspaces) {
      if (auto idx = detail::coordinate_indices(s)) {
        subs[name] = *idx;
      } else {
        Json rows = Json::array();
        for (std::size_t r = 0; r < s.dim(); ++r) {
          Json row = Json::array();
          for (std::size_t c = 0; c < s.ambient(); ++c)
            row.push_back(detail::scalar_str(s.basis()(r, c)));
          rows.push_back(std::move(row));
        }
        subs[name] = std::move(rows);
      }
    }
    j["subspaces"] = std::move(subs);
  }
  return j;
}

template <class R>
Document<R> document_from_json_typed(const Json& j) {
  Document<R> doc;
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != dim) throw Error("document: dim does not match basis size");
  LieAlgebra<R> g(j.at("name").get<std::string>(), labels);
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items())
      g.set_param(k, detail::scalar_parse<R>(v.template get<std::string>()));
  long last_i = -1, last_j = -1;
  for (const auto& e : j.at("brackets")) {
    std::size_t i = e.at("i").get<std::size_t>();
    std::size_t jj = e.at("j").get<std::size_t>();
    if (i >= jj || jj >= dim) throw Error("document: bracket indices out of order");
    if (std::make_pair(static_cast<long>(i), static_cast<long>(jj)) <=
        std::make_pair(last_i, last_j))
      throw Error("document: brackets not in ascending order");
    last_i = static_cast<long>(i);
    last_j = static_cast<long>(jj);
    typename LieAlgebra<R>::Terms terms;
    long last_k = -1;
    for (const auto& t : e.at("terms")) {
      std::size_t k = t.at("k").get<std::size_t>();
      if (static_cast<long>(k) <= last_k) throw Error("document: terms not ascending in k");
      last_k = static_cast<long>(k);
      terms.emplace_back(k, detail::scalar_parse<R>(t.at("c").template get<std::string>()));
    }
    g.set_bracket(i, jj, std::move(terms));
  }
  doc.algebra = std::move(g);
  if (j.contains("subspaces"))
    for (const auto& [name, val] : j.at("subspaces").items()) {
      if (val.is_array() && (val.empty() || val.front().is_number_unsigned())) {
        doc.subspaces.emplace_back(
            name, Subspace<R>::coordinate(dim, val.template get<std::vector<std::size_t>>()));
      } else {
        std::vector<std::vector<R>> rows;
        for (const auto& row : val) {
          std::vector<R> r;
          for (const auto& x : row) r.push_back(detail::scalar_parse<R>(x.template get<std::string>()));
          if (r.size() != dim) throw Error("document: subspace row length mismatch");
          rows.push_back(std::move(r));
        }
        doc.subspaces.emplace_back(name, Subspace<R>::span(dim, rows));
      }
    }
  return doc;
}

inline AnyDocument document_from_json(const Json& j) {
  std::string ring = j.at("scalars").get<std::string>();
  if (ring == "rational") return document_from_json_typed<Rational>(j);
  if (ring == "gaussian") return document_from_json_typed<Gaussian>(j);
  throw Error("document: unsupported scalar ring '" + ring + "'");
}

inline std::string render_document_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_document_text(const std::string& text) { return Json::parse(text); }

inline AnyDocument load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return document_from_json(Json::parse(ss.str()));
}

/// A linear map between documents: {"kind", "source", "target", "matrix"}.
struct MapDocument {
  std::string kind, source, target;
  std::vector<std::vector<std::string>> matrix;  // scalar strings
};

inline Json map_to_json(const MapDocument& m) {
  Json j;
  j["kind"] = m.kind;
  j["source"] = m.source;
  j["target"] = m.target;
  Json rows = Json::array();
  for (const auto& r : m.matrix) rows.push_back(r);
  j["matrix"] = std::move(rows);
  return j;
}

inline MapDocument map_from_json(const Json& j) {
  MapDocument m;
  m.kind = j.value("kind", "");
  m.source = j.at("source").get<std::string>();
  m.target = j.at("target").get<std::string>();
  for (const auto& row : j.at("matrix"))
    m.matrix.push_back(row.get<std::vector<std::string>>());
  return m;
}

template <class R>
Matrix<R> map_matrix(const MapDocument& m) {
  std::vector<std::vector<R>> rows;
  for (const auto& r : m.matrix) {
    std::vector<R> out;
    for (const auto& s : r) out.push_back(detail::scalar_parse<R>(s));
    rows.push_back(std::move(out));
  }
  return Matrix<R>::from_rows(rows);
}

}  // namespace carnot
