#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "carnot/lie.hpp"
#include "carnot/rational.hpp"

namespace carnot {

/// Bracket word of a Hall set: a generator index or an ordered pair.
/// Order: weight first, then generators before composites, then recursive
/// comparison of (left, right).
struct HallWord {
  int gen = -1;                       // >= 0 for generators
  std::shared_ptr<HallWord> left, right;
  std::size_t weight = 1;

  static HallWord generator(int g) {
    HallWord w;
    w.gen = g;
    return w;
  }
  static HallWord pair(std::shared_ptr<HallWord> l, std::shared_ptr<HallWord> r) {
    HallWord w;
    w.left = std::move(l);
    w.right = std::move(r);
    w.weight = w.left->weight + w.right->weight;
    return w;
  }
  bool is_generator() const { return gen >= 0; }

  /// Serialized as a nested bracket string, generators 1-based: "[1,[1,2]]".
  std::string str() const {
    if (is_generator()) return std::to_string(gen + 1);
    return "[" + left->str() + "," + right->str() + "]";
  }
};

inline int hall_compare(const HallWord& a, const HallWord& b) {
  if (a.weight != b.weight) return a.weight < b.weight ? -1 : 1;
  if (a.is_generator() != b.is_generator()) return a.is_generator() ? -1 : 1;
  if (a.is_generator()) return a.gen < b.gen ? -1 : (a.gen == b.gen ? 0 : 1);
  if (int c = hall_compare(*a.left, *b.left)) return c;
  return hall_compare(*a.right, *b.right);
}

inline bool hall_less(const HallWord& a, const HallWord& b) { return hall_compare(a, b) < 0; }

/// Witt's formula: dim of layer k of the free Lie algebra of rank n.
inline std::size_t witt_dim(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1) throw Error("witt_dim: rank and layer must be positive");
  auto mobius = [](std::size_t d) -> long {
    long m = 1;
    std::size_t x = d;
    for (std::size_t p = 2; p * p <= x; ++p) {
      if (x % p == 0) {
        x /= p;
        if (x % p == 0) return 0;
        m = -m;
      }
    }
    if (x > 1) m = -m;
    return m;
  };
  long total = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    long pw = 1;
    for (std::size_t t = 0; t < k / d; ++t) pw *= static_cast<long>(n);
    total += mobius(d) * pw;
  }
  return static_cast<std::size_t>(total / static_cast<long>(k));
}

/// Hall set of rank n up to weight r: generators, plus [u,v] with u < v and,
/// when v = [a,b], a <= u. Within each weight the words are sorted.
inline std::vector<std::shared_ptr<HallWord>> hall_basis(std::size_t n, std::size_t r) {
  if (n < 1 || r < 1) throw Error("hall_basis: rank and step must be positive");
  std::vector<std::vector<std::shared_ptr<HallWord>>> by_weight(r + 1);
  for (std::size_t g = 0; g < n; ++g)
    by_weight[1].push_back(std::make_shared<HallWord>(HallWord::generator(static_cast<int>(g))));
  for (std::size_t wt = 2; wt <= r; ++wt) {
    auto& cur = by_weight[wt];
    for (std::size_t wl = 1; wl < wt; ++wl)
      for (const auto& u : by_weight[wl])
        for (const auto& v : by_weight[wt - wl]) {
          if (!hall_less(*u, *v)) continue;
          if (!v->is_generator() && hall_less(*u, *v->left)) continue;
          cur.push_back(std::make_shared<HallWord>(HallWord::pair(u, v)));
        }
    std::sort(cur.begin(), cur.end(),
              [](const auto& a, const auto& b) { return hall_less(*a, *b); });
  }
  std::vector<std::shared_ptr<HallWord>> out;
  for (std::size_t wt = 1; wt <= r; ++wt)
    for (auto& w : by_weight[wt]) out.push_back(w);
  return out;
}

struct FreeNilpotent {
  LieAlgebra<Rational> algebra;
  std::vector<std::shared_ptr<HallWord>> words;
  std::vector<std::size_t> layer_dims;
};

/// Free nilpotent Lie algebra f[n,r] on the Hall basis. Structure constants
/// come from recursive Hall normalization: antisymmetry plus the Jacobi
/// rewriting [u,[a,b]] = [[u,a],b] + [a,[u,b]] for u < a.
inline FreeNilpotent free_nilpotent(std::size_t n, std::size_t r) {
  auto words = hall_basis(n, r);
  const std::size_t dim = words.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < dim; ++i) index[words[i]->str()] = i;

  using Combo = std::map<std::size_t, Rational>;
  std::map<std::pair<std::size_t, std::size_t>, Combo> memo;

  std::function<const Combo&(std::size_t, std::size_t)> norm =
      [&](std::size_t i, std::size_t j) -> const Combo& {
    auto key = std::make_pair(i, j);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    Combo out;
    const HallWord& u = *words[i];
    const HallWord& v = *words[j];
    if (i == j || u.weight + v.weight > r) {
      // zero
    } else if (hall_less(v, u)) {
      for (const auto& [k, c] : norm(j, i)) out[k] = -c;
    } else if (v.is_generator() || !hall_less(u, *v.left)) {
      out[index.at(HallWord::pair(words[i], words[j]).str())] = Rational(1);
    } else {
      // u < v.left: Jacobi rewriting
      std::size_t a = index.at(v.left->str());
      std::size_t b = index.at(v.right->str());
      Combo ua = norm(i, a);   // copies intentional: norm() may rehash memo
      for (const auto& [k, c] : ua)
        for (const auto& [k2, c2] : norm(k, b)) {
          out[k2] += c * c2;
          if (out[k2].is_zero()) out.erase(k2);
        }
      Combo ub = norm(i, b);
      for (const auto& [k, c] : ub)
        for (const auto& [k2, c2] : norm(a, k)) {
          out[k2] += c * c2;
          if (out[k2].is_zero()) out.erase(k2);
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<std::string> labels;
  for (const auto& w : words) labels.push_back(w->str());
  LieAlgebra<Rational> g("f[" + std::to_string(n) + "," + std::to_string(r) + "]", labels);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      LieAlgebra<Rational>::Terms t;
      for (const auto& [k, c] : norm(i, j)) t.emplace_back(k, c);
      g.set_bracket(i, j, std::move(t));
    }
  FreeNilpotent out;
  out.algebra = std::move(g);
  out.words = std::move(words);
  for (std::size_t wt = 1; wt <= r; ++wt)
    out.layer_dims.push_back(static_cast<std::size_t>(
        std::count_if(out.words.begin(), out.words.end(),
                      [wt](const auto& w) { return w->weight == wt; })));
  return out;
}

/// Parse a nested bracket string back into a HallWord ("3", "[1,[1,2]]").
inline std::shared_ptr<HallWord> parse_hall_word(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw Error("hall word: unexpected end");
  if (s[pos] == '[') {
    ++pos;
    auto l = parse_hall_word(s, pos);
    if (pos >= s.size() || s[pos] != ',') throw Error("hall word: expected ','");
    ++pos;
    auto r2 = parse_hall_word(s, pos);
    if (pos >= s.size() || s[pos] != ']') throw Error("hall word: expected ']'");
    ++pos;
    return std::make_shared<HallWord>(HallWord::pair(l, r2));
  }
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw Error("hall word: expected digit");
  int g = std::stoi(std::string(s.substr(start, pos - start)));
  if (g < 1) throw Error("hall word: generators are 1-based");
  return std::make_shared<HallWord>(HallWord::generator(g - 1));
}

inline std::shared_ptr<HallWord> parse_hall_word(std::string_view s) {
  std::size_t pos = 0;
  auto w = parse_hall_word(s, pos);
  if (pos != s.size()) throw Error("hall word: trailing input");
  return w;
}

}  // namespace carnot
