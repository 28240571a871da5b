#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carnot/gaussian.hpp"
#include "carnot/matrix.hpp"
#include "carnot/rational.hpp"
#include "carnot/subspace.hpp"

namespace carnot {

template <class R>
using Vec = std::vector<R>;

template <class R>
Vec<R> basis_vector(std::size_t dim, std::size_t i) {
  Vec<R> v(dim, R(0));
  v.at(i) = R(1);
  return v;
}

/// Finite-dimensional Lie algebra given by a labeled basis and an
/// antisymmetric structure-constant table. Only ordered pairs i < j are
/// stored; [e_j, e_i] = -[e_i, e_j] by construction.
template <class R>
class LieAlgebra {
 public:
  using Terms = std::vector<std::pair<std::size_t, R>>;  // (k, c): sum c e_k

  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)),
        table_(labels_.size() < 2 ? 0 : labels_.size() * (labels_.size() - 1) / 2) {}

  const std::string& name() const { return name_; }
  std::string& name() { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<std::pair<std::string, R>>& params() const { return params_; }
  void set_param(const std::string& key, R value) { params_.emplace_back(key, std::move(value)); }

  void set_bracket(std::size_t i, std::size_t j, Terms terms) {
    if (i >= j || j >= dim()) throw Error("LieAlgebra: bad bracket indices");
    for (auto& [k, c] : terms)
      if (k >= dim()) throw Error("LieAlgebra: bracket target out of range");
    table_[tri(i, j)] = std::move(terms);
  }

  const Terms& bracket_terms(std::size_t i, std::size_t j) const {
    return table_[tri(i, j)];
  }

  /// [u, v] by bilinear extension of the table.
  Vec<R> bracket(const Vec<R>& u, const Vec<R>& v) const {
    if (u.size() != dim() || v.size() != dim()) throw Error("bracket: dimension mismatch");
    Vec<R> out(dim(), R(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i + 1; j < dim(); ++j) {
        const Terms& t = table_[tri(i, j)];
        if (t.empty()) continue;
        R c = u[i] * v[j] - u[j] * v[i];
        if (c == R(0)) continue;
        for (const auto& [k, s] : t) out[k] += c * s;
      }
    }
    return out;
  }

  /// Matrix of ad(v): w -> [v, w].
  Matrix<R> ad(const Vec<R>& v) const {
    Matrix<R> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<R> col = bracket(v, basis_vector<R>(dim(), j));
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  Matrix<R> ad_basis(std::size_t i) const { return ad(basis_vector<R>(dim(), i)); }

 private:
  std::size_t tri(std::size_t i, std::size_t j) const {
    return i * (2 * dim() - i - 1) / 2 + (j - i - 1);
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Terms> table_;
  std::vector<std::pair<std::string, R>> params_;
};

/// Build an algebra by evaluating a bilinear bracket rule on basis pairs.
template <class R, class Fn>
LieAlgebra<R> make_algebra(std::string name, std::vector<std::string> labels, Fn&& rule) {
  LieAlgebra<R> g(std::move(name), std::move(labels));
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<R> v = rule(basis_vector<R>(n, i), basis_vector<R>(n, j));
      typename LieAlgebra<R>::Terms t;
      for (std::size_t k = 0; k < n; ++k)
        if (!(v[k] == R(0))) t.emplace_back(k, v[k]);
      g.set_bracket(i, j, std::move(t));
    }
  return g;
}

inline std::vector<std::string> indexed_labels(const std::string& prefix, std::size_t n,
                                               std::size_t from = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(from + i));
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi defect

template <class R>
struct JacobiReport {
  struct Violation {
    std::size_t i, j, k;
    Vec<R> residual;
  };
  bool ok = true;
  std::vector<Violation> violations;
};

/// Exact per-triple residuals of [[i,j],k] + [[j,k],i] + [[k,i],j].
template <class R>
JacobiReport<R> jacobi_defect(const LieAlgebra<R>& g) {
  JacobiReport<R> rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<R> ei = basis_vector<R>(n, i), ej = basis_vector<R>(n, j), ek = basis_vector<R>(n, k);
        Vec<R> r = g.bracket(g.bracket(ei, ej), ek);
        Vec<R> r2 = g.bracket(g.bracket(ej, ek), ei);
        Vec<R> r3 = g.bracket(g.bracket(ek, ei), ej);
        bool zero = true;
        for (std::size_t t = 0; t < n; ++t) {
          r[t] += r2[t] + r3[t];
          if (!(r[t] == R(0))) zero = false;
        }
        if (!zero) {
          rep.ok = false;
          rep.violations.push_back({i, j, k, std::move(r)});
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Linear maps and morphism checks

template <class R>
struct LinearMap {
  const LieAlgebra<R>* source = nullptr;
  const LieAlgebra<R>* target = nullptr;
  Matrix<R> matrix;  // target-dim x source-dim
};

enum class MapMode { Homomorphism, Isomorphism };

template <class R>
struct MapCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  Vec<R> lhs, rhs;
};

template <class R>
MapCheck<R> check_map(const LinearMap<R>& phi, MapMode mode) {
  const LieAlgebra<R>& s = *phi.source;
  const LieAlgebra<R>& t = *phi.target;
  if (phi.matrix.cols() != s.dim() || phi.matrix.rows() != t.dim())
    throw Error("check_map: matrix shape does not match algebras");
  MapCheck<R> out;
  for (std::size_t i = 0; i < s.dim() && out.ok; ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec<R> lhs = phi.matrix.apply(s.bracket(basis_vector<R>(s.dim(), i), basis_vector<R>(s.dim(), j)));
      Vec<R> rhs = t.bracket(phi.matrix.apply(basis_vector<R>(s.dim(), i)),
                             phi.matrix.apply(basis_vector<R>(s.dim(), j)));
      if (lhs != rhs) {
        out.ok = false;
        out.counterexample = {i, j};
        out.lhs = std::move(lhs);
        out.rhs = std::move(rhs);
        break;
      }
    }
  if (out.ok && mode == MapMode::Isomorphism) {
    if constexpr (RingTraits<R>::is_field) {
      if (phi.matrix.rows() != phi.matrix.cols() || rank(phi.matrix) != phi.matrix.rows())
        out.ok = false;
    } else {
      throw Error("check_map: isomorphism test needs a field ring");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

template <class R>
LieAlgebra<R> direct_sum(const LieAlgebra<R>& g, const LieAlgebra<R>& h) {
  std::vector<std::string> labels = g.labels();
  for (const auto& l : h.labels()) labels.push_back(l + "'");
  LieAlgebra<R> s(g.name() + "+" + h.name(), labels);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) s.set_bracket(i, j, g.bracket_terms(i, j));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      typename LieAlgebra<R>::Terms t;
      for (const auto& [k, c] : h.bracket_terms(i, j)) t.emplace_back(k + g.dim(), c);
      s.set_bracket(i + g.dim(), j + g.dim(), std::move(t));
    }
  return s;
}

/// k_alg acting on a trivial-bracket module via matrices theta[i] (one per
/// k-basis element). theta must be a representation; the violating pair is
/// reported otherwise.
template <class R>
LieAlgebra<R> semidirect(const LieAlgebra<R>& k_alg, std::size_t module_dim,
                         const std::vector<Matrix<R>>& theta,
                         const std::vector<std::string>& module_labels = {}) {
  if (theta.size() != k_alg.dim()) throw Error("semidirect: one theta per k basis element required");
  for (const auto& m : theta)
    if (m.rows() != module_dim || m.cols() != module_dim)
      throw Error("semidirect: theta shape mismatch");
  for (std::size_t i = 0; i < k_alg.dim(); ++i)
    for (std::size_t j = i + 1; j < k_alg.dim(); ++j) {
      Matrix<R> lhs(module_dim, module_dim);
      for (const auto& [k, c] : k_alg.bracket_terms(i, j)) lhs = lhs + c * theta[k];
      if (lhs != theta[i].commutator(theta[j]))
        throw Error("semidirect: theta is not a representation at pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  std::vector<std::string> labels = k_alg.labels();
  if (module_labels.empty())
    for (std::size_t i = 0; i < module_dim; ++i) labels.push_back("m" + std::to_string(i + 1));
  else {
    if (module_labels.size() != module_dim) throw Error("semidirect: label count mismatch");
    for (const auto& l : module_labels) labels.push_back(l);
  }
  LieAlgebra<R> g(k_alg.name() + "|x", labels);
  for (std::size_t i = 0; i < k_alg.dim(); ++i)
    for (std::size_t j = i + 1; j < k_alg.dim(); ++j) g.set_bracket(i, j, k_alg.bracket_terms(i, j));
  for (std::size_t i = 0; i < k_alg.dim(); ++i)
    for (std::size_t a = 0; a < module_dim; ++a) {
      typename LieAlgebra<R>::Terms t;
      for (std::size_t r = 0; r < module_dim; ++r)
        if (!(theta[i](r, a) == R(0))) t.emplace_back(k_alg.dim() + r, theta[i](r, a));
      g.set_bracket(i, k_alg.dim() + a, std::move(t));
    }
  return g;
}

/// Conjugate structure constants: new basis e'_j = sum_i T(i,j) e_i.
template <class F>
  requires RingTraits<F>::is_field
LieAlgebra<F> change_basis(const LieAlgebra<F>& g, const Matrix<F>& t) {
  if (t.rows() != g.dim() || t.cols() != g.dim()) throw Error("change_basis: shape mismatch");
  auto tinv = inverse(t);
  if (!tinv) throw Error("change_basis: matrix is singular");
  return make_algebra<F>(g.name() + "~", g.labels(), [&](const Vec<F>& u, const Vec<F>& v) {
    return tinv->apply(g.bracket(t.apply(u), t.apply(v)));
  });
}

/// Forget the complex structure: dim doubles, basis (e_1..e_n, i e_1..i e_n).
inline LieAlgebra<Rational> realify(const LieAlgebra<Gaussian>& g) {
  const std::size_t n = g.dim();
  std::vector<std::string> labels = g.labels();
  for (const auto& l : g.labels()) labels.push_back("i*" + l);
  LieAlgebra<Rational> h(g.name() + "_R", labels);
  auto put = [&](std::size_t a, std::size_t b, const Vec<Gaussian>& w) {
    LieAlgebra<Rational>::Terms t;
    for (std::size_t k = 0; k < n; ++k) {
      if (!w[k].re().is_zero()) t.emplace_back(k, w[k].re());
      if (!w[k].im().is_zero()) t.emplace_back(n + k, w[k].im());
    }
    std::sort(t.begin(), t.end(), [](auto& x, auto& y) { return x.first < y.first; });
    h.set_bracket(a, b, std::move(t));
  };
  auto times_i = [&](Vec<Gaussian> w) {
    for (auto& x : w) x = Gaussian::i() * x;
    return w;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<Gaussian> br = g.bracket(basis_vector<Gaussian>(n, i), basis_vector<Gaussian>(n, j));
      put(i, j, br);                                  // [e_i, e_j]
      Vec<Gaussian> neg = br;
      for (auto& x : neg) x = -x;
      put(n + i, n + j, neg);                         // [ie_i, ie_j] = -[e_i, e_j]
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;  // [e_i, i e_i] = 0
      Vec<Gaussian> br = g.bracket(basis_vector<Gaussian>(n, i), basis_vector<Gaussian>(n, j));
      put(i, n + j, times_i(br));                     // [e_i, i e_j] = i [e_i, e_j]
    }
  return h;
}

// ---------------------------------------------------------------------------
// Killing form

template <class F>
  requires RingTraits<F>::is_field
Matrix<F> killing(const LieAlgebra<F>& g) {
  std::vector<Matrix<F>> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad_basis(i));
  Matrix<F> b(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      F t = (ads[i] * ads[j]).trace();
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

inline Signature killing_signature(const LieAlgebra<Rational>& g) {
  return sym_signature(killing(g));
}

// ---------------------------------------------------------------------------
// Subspace machinery on algebras

template <class F>
Subspace<F> bracket_span(const LieAlgebra<F>& g, const Subspace<F>& u, const Subspace<F>& v) {
  std::vector<Vec<F>> vecs;
  for (const auto& a : u.basis_rows())
    for (const auto& b : v.basis_rows()) vecs.push_back(g.bracket(a, b));
  return Subspace<F>::span(g.dim(), vecs);
}

/// Smallest bracket-closed subspace containing w; fixed point in <= dim steps.
template <class F>
Subspace<F> generated_subalgebra(const LieAlgebra<F>& g, const Subspace<F>& w) {
  Subspace<F> cur = w;
  while (true) {
    Subspace<F> next = sum(cur, bracket_span(g, cur, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

/// Smallest ideal containing w.
template <class F>
Subspace<F> ideal_closure(const LieAlgebra<F>& g, const Subspace<F>& w) {
  Subspace<F> cur = w;
  Subspace<F> full = Subspace<F>::full(g.dim());
  while (true) {
    Subspace<F> next = sum(cur, bracket_span(g, full, cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

template <class F>
bool is_subalgebra(const LieAlgebra<F>& g, const Subspace<F>& w) {
  return w.contains(bracket_span(g, w, w));
}

template <class F>
bool is_ideal(const LieAlgebra<F>& g, const Subspace<F>& w) {
  return w.contains(bracket_span(g, Subspace<F>::full(g.dim()), w));
}

enum class SeriesKind { LowerCentral, Derived };

/// Dimension chain of the lower central or derived series, ending at the
/// first stabilized value (0 for nilpotent algebras).
template <class F>
std::vector<std::size_t> series_dims(const LieAlgebra<F>& g, SeriesKind kind) {
  Subspace<F> cur = Subspace<F>::full(g.dim());
  std::vector<std::size_t> dims{cur.dim()};
  while (true) {
    Subspace<F> next = (kind == SeriesKind::LowerCentral)
                           ? bracket_span(g, Subspace<F>::full(g.dim()), cur)
                           : bracket_span(g, cur, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim() || next.dim() == 0) return dims;
    cur = next;
  }
}

template <class F>
Subspace<F> center(const LieAlgebra<F>& g) {
  // kernel of stacked ad matrices
  const std::size_t n = g.dim();
  Matrix<F> big(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<F> a = g.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) big(i * n + r, c) = a(r, c);
  }
  Reduced<F> red = reduce(big);
  std::vector<Vec<F>> vecs;
  for (std::size_t k = 0; k < red.kernel.cols(); ++k) vecs.push_back(red.kernel.column(k));
  return Subspace<F>::span(n, vecs);
}

// ---------------------------------------------------------------------------
// Quotients

template <class F>
struct QuotientResult {
  LieAlgebra<F> algebra;
  LinearMap<F> projection;               // filled by caller-side helper below
  Matrix<F> projection_matrix;           // quotient-dim x g-dim
  std::vector<std::size_t> complement;   // standard basis indices kept
};

/// g / w for a verified ideal w; the quotient basis is the family of standard
/// basis vectors complementary to w (lowest indices first).
template <class F>
QuotientResult<F> quotient(const LieAlgebra<F>& g, const Subspace<F>& w) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t r = 0; r < w.dim(); ++r)
      if (!w.contains(g.bracket(basis_vector<F>(g.dim(), i), w.basis().row(r))))
        throw Error("quotient: not an ideal, [" + g.labels()[i] +
                    ", basis row " + std::to_string(r) + "] leaves the subspace");
  const std::size_t n = g.dim();
  std::vector<std::size_t> comp;
  Subspace<F> cur = w;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> e = basis_vector<F>(n, i);
    if (!cur.contains(e)) {
      comp.push_back(i);
      std::vector<Vec<F>> rows = cur.basis_rows();
      rows.push_back(e);
      cur = Subspace<F>::span(n, rows);
    }
  }
  const std::size_t q = comp.size();
  // projection: express e_i mod w in the complement coordinates by solving
  // e_i = sum_a x_a e_{comp_a} + (element of w)
  Matrix<F> sys(n, q + w.dim());
  for (std::size_t a = 0; a < q; ++a) sys(comp[a], a) = F(1);
  for (std::size_t b = 0; b < w.dim(); ++b)
    for (std::size_t i = 0; i < n; ++i) sys(i, q + b) = w.basis()(b, i);
  Matrix<F> proj(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto x = solve(sys, basis_vector<F>(n, i));
    if (!x) throw Error("quotient: internal solve failed");
    for (std::size_t a = 0; a < q; ++a) proj(a, i) = (*x)[a];
  }
  std::vector<std::string> labels;
  for (std::size_t a : comp) labels.push_back(g.labels()[a]);
  LieAlgebra<F> qa = make_algebra<F>(g.name() + "/" + std::to_string(w.dim()) + "dim", labels,
                                     [&](const Vec<F>& u, const Vec<F>& v) {
                                       Vec<F> lu(n, F(0)), lv(n, F(0));
                                       for (std::size_t a = 0; a < q; ++a) {
                                         lu[comp[a]] = u[a];
                                         lv[comp[a]] = v[a];
                                       }
                                       return proj.apply(g.bracket(lu, lv));
                                     });
  QuotientResult<F> out;
  out.algebra = std::move(qa);
  out.projection_matrix = proj;
  out.complement = comp;
  return out;
}

// ---------------------------------------------------------------------------
// Growth vector and associated graded

/// Dims of (W_j + k)/k with W_1 = p, W_{j+1} = W_j + [p, W_j]; trailing
/// repeats are collapsed once W stabilizes.
template <class F>
std::vector<std::size_t> growth_vector(const LieAlgebra<F>& g, const Subspace<F>& p,
                                       const Subspace<F>& k) {
  if (intersection(p, k).dim() != 0) throw Error("growth_vector: p meets k");
  if (!is_subalgebra(g, k)) throw Error("growth_vector: k is not a subalgebra");
  Subspace<F> w = p;
  std::vector<std::size_t> dims{sum(w, k).dim() - k.dim()};
  while (true) {
    Subspace<F> next = sum(w, bracket_span(g, p, w));
    if (next.dim() == w.dim()) break;
    w = next;
    std::size_t d = sum(w, k).dim() - k.dim();
    if (d != dims.back()) dims.push_back(d);
  }
  return dims;
}

template <class F>
struct GradedAlgebra {
  LieAlgebra<F> algebra;
  std::vector<std::size_t> layer_dims;
  std::vector<std::size_t> adapted_basis;  // standard basis indices of g, layer by layer
};

/// Associated graded (nilpotentization) of (g, p, k): layers are standard
/// basis complements of the filtration U_j = W_j + k, and graded brackets are
/// taken modulo the previous filtration level.
template <class F>
GradedAlgebra<F> associated_graded(const LieAlgebra<F>& g, const Subspace<F>& p,
                                   const Subspace<F>& k) {
  const std::size_t n = g.dim();
  std::vector<Subspace<F>> filt;  // U_0 = k, U_j = W_j + k
  filt.push_back(k);
  Subspace<F> w = p;
  while (true) {
    Subspace<F> u = sum(w, k);
    if (u.dim() == filt.back().dim()) break;
    filt.push_back(u);
    w = sum(w, bracket_span(g, p, w));
  }
  if (filt.back().dim() != n)
    throw Error("associated_graded: p does not bracket-generate g mod k");
  const std::size_t top = filt.size() - 1;

  // layer complements from standard basis vectors, in index order
  std::vector<std::vector<std::size_t>> layers(top + 1);
  std::vector<std::size_t> adapted;
  Subspace<F> cur = filt[0];
  for (std::size_t j = 1; j <= top; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cur.dim() == filt[j].dim()) break;
      Vec<F> e = basis_vector<F>(n, i);
      if (filt[j].contains(e) && !cur.contains(e)) {
        layers[j].push_back(i);
        auto rows = cur.basis_rows();
        rows.push_back(e);
        cur = Subspace<F>::span(n, rows);
      }
    }
    if (cur.dim() != filt[j].dim())
      throw Error("associated_graded: standard basis fails to fill a layer");
  }
  std::vector<std::size_t> layer_dims;
  for (std::size_t j = 1; j <= top; ++j) {
    layer_dims.push_back(layers[j].size());
    for (std::size_t i : layers[j]) adapted.push_back(i);
  }
  const std::size_t q = adapted.size();
  std::vector<std::size_t> layer_of(q);
  {
    std::size_t pos = 0;
    for (std::size_t j = 1; j <= top; ++j)
      for (std::size_t t = 0; t < layers[j].size(); ++t) layer_of[pos++] = j;
  }

  // coordinates mod U_{j-1} on layer j: solve against [layer basis | U_{j-1} basis]
  auto project = [&](const Vec<F>& v, std::size_t j) -> Vec<F> {
    const Subspace<F>& lower = filt[j - 1];
    std::vector<std::size_t> lay = layers[j];
    Matrix<F> sys(n, lay.size() + lower.dim());
    for (std::size_t a = 0; a < lay.size(); ++a) sys(lay[a], a) = F(1);
    for (std::size_t b = 0; b < lower.dim(); ++b)
      for (std::size_t i = 0; i < n; ++i) sys(i, lay.size() + b) = lower.basis()(b, i);
    auto x = solve(sys, v);
    if (!x) throw Error("associated_graded: bracket escapes the filtration");
    Vec<F> out(lay.size(), F(0));
    for (std::size_t a = 0; a < lay.size(); ++a) out[a] = (*x)[a];
    return out;
  };

  std::vector<std::string> labels;
  for (std::size_t i : adapted) labels.push_back(g.labels()[i]);
  LieAlgebra<F> gr("gr(" + g.name() + ")", labels);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      std::size_t j = layer_of[a] + layer_of[b];
      typename LieAlgebra<F>::Terms terms;
      if (j <= top) {
        Vec<F> br = g.bracket(basis_vector<F>(n, adapted[a]), basis_vector<F>(n, adapted[b]));
        Vec<F> co = project(br, j);
        std::size_t off = 0;
        for (std::size_t l = 1; l < j; ++l) off += layers[l].size();
        for (std::size_t t = 0; t < co.size(); ++t)
          if (!(co[t] == F(0))) terms.emplace_back(off + t, co[t]);
      } else {
        // beyond the top layer the graded bracket vanishes; the original
        // bracket must then lie inside U_top = g, which is automatic
      }
      gr.set_bracket(a, b, std::move(terms));
    }
  GradedAlgebra<F> out;
  out.algebra = std::move(gr);
  out.layer_dims = std::move(layer_dims);
  out.adapted_basis = std::move(adapted);
  return out;
}

/// Structure-constant equality in the adapted basis (exact, no tolerance).
template <class F>
bool graded_matches(const GradedAlgebra<F>& gr, const LieAlgebra<F>& expected) {
  if (gr.algebra.dim() != expected.dim()) return false;
  for (std::size_t i = 0; i < expected.dim(); ++i)
    for (std::size_t j = i + 1; j < expected.dim(); ++j)
      if (gr.algebra.bracket_terms(i, j) != expected.bracket_terms(i, j)) return false;
  return true;
}

}  // namespace carnot
