// Command-line front end: build and export algebras, run the verification
// suites, and query holonomy / equivariance / classification data.
//
// Exit codes: 0 success or verified, 1 verification failed, 2 usage error,
// 3 unsupported parameters (irrational radical, off-locus values).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "carnot/carnot.hpp"

namespace {

using namespace carnot;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

Rational parse_rational_flag(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw CLI::ValidationError(std::string(flag) + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = render_document_json(j);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

Document<Rational> model_document(ModelAlgebra m) {
  Document<Rational> doc;
  doc.algebra = std::move(m.algebra);
  doc.subspaces.emplace_back("p", std::move(m.p));
  doc.subspaces.emplace_back("k", std::move(m.k));
  return doc;
}

struct BuildSpec {
  std::string family;
  std::string out;
  std::string a1 = "0", a2 = "0", kappa = "0";
  std::string case_name;
  std::size_t n = 3, r = 3;
  bool has_a1 = false, has_a2 = false, has_kappa = false;
};

int run_build(const BuildSpec& spec) {
  const Rational a1 = parse_rational_flag(spec.a1, "--a1");
  const Rational a2 = parse_rational_flag(spec.a2, "--a2");
  const Rational kappa = parse_rational_flag(spec.kappa, "--kappa");
  const std::string& f = spec.family;

  auto plain = [&](LieAlgebra<Rational> g) {
    Document<Rational> doc;
    doc.algebra = std::move(g);
    return doc;
  };

  std::optional<Document<Rational>> doc;
  std::optional<Document<Gaussian>> gdoc;
  if (f == "c33") {
    doc = model_document(build_iso_algebra(IsoFamily::C33, a1, a2));
  } else if (f == "a33") {
    doc = model_document(build_iso_algebra(IsoFamily::A33, kappa));
  } else if (f == "f33") {
    doc = model_document(build_iso_algebra(IsoFamily::F33));
  } else if (f == "f33-carnot") {
    doc = plain(f33_model());
    doc->subspaces.emplace_back("p", Subspace<Rational>::coordinate(14, {0, 1, 2}));
  } else if (f == "a33-carnot") {
    doc = plain(carnot_quotients().a33_carnot);
    doc->subspaces.emplace_back("p", Subspace<Rational>::coordinate(11, {0, 1, 2}));
  } else if (f == "c33-carnot") {
    doc = plain(carnot_quotients().c33_carnot);
    doc->subspaces.emplace_back("p", Subspace<Rational>::coordinate(9, {0, 1, 2}));
  } else if (f == "free") {
    doc = plain(free_nilpotent(spec.n, spec.r).algebra);
  } else if (f == "cn3") {
    Cn3 c = cn3_carnot(spec.n);
    doc = plain(std::move(c.algebra));
    doc->subspaces.emplace_back("p", std::move(c.p));
  } else if (f == "quaternionic") {
    QuaternionicStep2 q = quaternionic_step2();
    doc = plain(std::move(q.algebra));
    doc->subspaces.emplace_back("p", std::move(q.p));
  } else if (f == "bk") {
    doc = plain(b_family(kappa));
  } else if (f == "classical") {
    const std::string& c = spec.case_name;
    if (c == "so3") doc = plain(so3());
    else if (c == "so4") doc = plain(so4());
    else if (c == "so31") doc = plain(so31());
    else if (c == "so5") doc = plain(so_plus(4));
    else if (c == "so41") doc = plain(so_lorentz(4));
    else if (c == "su3") doc = plain(su3());
    else if (c == "g2_split") doc = plain(g2_split());
    else if (c == "g2_compact") doc = plain(g2_compact());
    else if (c == "so4c") {
      gdoc = Document<Gaussian>{};
      gdoc->algebra = so_plus_complex(3);
    } else
      throw CLI::ValidationError("--case: unknown classical algebra '" + c + "'");
  } else if (f == "table1") {
    doc = model_document(build_table1(a1, a2).model);
  } else if (f == "table2") {
    doc = model_document(build_table2(a1, a2).model);
  } else if (f == "table3") {
    doc = model_document(build_table3(spec.n, a1, a2).model);
  } else if (f == "g2-horizontal-split" || f == "g2-horizontal-compact") {
    G2Horizontal gh = g2_horizontal(f == "g2-horizontal-split");
    doc = plain(std::move(gh.algebra));
    doc->subspaces.emplace_back("p", std::move(gh.p));
  } else {
    throw CLI::ValidationError("unknown family '" + f + "'");
  }
  if (doc) emit(document_to_json(*doc), spec.out);
  if (gdoc) emit(document_to_json(*gdoc), spec.out);
  return kOk;
}

int run_verify_jacobi(const std::string& path) {
  AnyDocument any = load_document_file(path);
  return std::visit(
      [&](const auto& doc) {
        auto rep = jacobi_defect(doc.algebra);
        if (rep.ok) {
          std::cout << "jacobi: ok (" << doc.algebra.dim() << "-dim, 0 violations)\n";
          return kOk;
        }
        const auto& v = rep.violations.front();
        std::cout << "jacobi: FAILED at triple (" << v.i << "," << v.j << "," << v.k << ") ["
                  << doc.algebra.labels()[v.i] << "," << doc.algebra.labels()[v.j] << ","
                  << doc.algebra.labels()[v.k] << "], " << rep.violations.size()
                  << " violations\n";
        return kVerifyFailed;
      },
      any);
}

int run_verify_iso(const std::string& map_path, const std::string& from_path,
                   const std::string& to_path) {
  std::ifstream in(map_path);
  if (!in) throw Error("cannot open '" + map_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  MapDocument md = map_from_json(Json::parse(ss.str()));
  AnyDocument from = load_document_file(from_path);
  AnyDocument to = load_document_file(to_path);
  if (from.index() != to.index()) {
    std::cout << "iso: FAILED (scalar rings differ)\n";
    return kVerifyFailed;
  }
  return std::visit(
      [&](const auto& src) {
        using R = typename std::decay_t<decltype(src)>::Scalar;
        const auto& tgt = std::get<Document<R>>(to);
        LinearMap<R> phi{&src.algebra, &tgt.algebra, map_matrix<R>(md)};
        auto chk = check_map(phi, MapMode::Isomorphism);
        if (chk.ok) {
          std::cout << "iso: ok (" << src.algebra.name() << " -> " << tgt.algebra.name() << ")\n";
          return kOk;
        }
        if (chk.counterexample)
          std::cout << "iso: FAILED at bracket pair (" << chk.counterexample->first << ","
                    << chk.counterexample->second << ")\n";
        else
          std::cout << "iso: FAILED (matrix not invertible)\n";
        return kVerifyFailed;
      },
      from);
}

int run_iso(const std::string& kind, const std::string& a1s, const std::string& a2s,
            const std::string& lambda_s, const std::string& map_out, const std::string& from_out,
            const std::string& to_out) {
  Rational a1 = parse_rational_flag(a1s, "--a1"), a2 = parse_rational_flag(a2s, "--a2");
  Rational lambda = parse_rational_flag(lambda_s, "--lambda");
  BuiltIsomorphism iso = build_isomorphism(kind, a1, a2, lambda);
  auto chk = check_map(iso.map(), MapMode::Isomorphism);
  if (!chk.ok) {
    std::cerr << "iso: built map failed verification\n";
    return kVerifyFailed;
  }
  MapDocument md;
  md.kind = iso.kind;
  md.source = iso.source->name();
  md.target = iso.target->name();
  for (std::size_t i = 0; i < iso.matrix.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < iso.matrix.cols(); ++j) row.push_back(iso.matrix(i, j).str());
    md.matrix.push_back(std::move(row));
  }
  emit(map_to_json(md), map_out);
  if (!from_out.empty()) {
    Document<Rational> d;
    d.algebra = *iso.source;
    emit(document_to_json(d), from_out);
  }
  if (!to_out.empty()) {
    Document<Rational> d;
    d.algebra = *iso.target;
    emit(document_to_json(d), to_out);
  }
  return kOk;
}

int run_holonomy(const std::string& a1s, const std::string& a2s, long max_num, long max_den) {
  Rational a1 = parse_rational_flag(a1s, "--a1"), a2 = parse_rational_flag(a2s, "--a2");
  std::vector<Rational> candidates;
  for (long den = 1; den <= max_den; ++den)
    for (long num = -max_num * den; num <= max_num * den; ++num)
      candidates.emplace_back(num, den);
  HolonomyReport rep = holonomy_analysis(a1, a2, candidates);
  std::cout << "c^2 roots of t^2 - (" << a1.str() << ") t - (" << a2.str() << "): ";
  if (!rep.discriminant_nonnegative)
    std::cout << "none real (discriminant " << rep.discriminant.str() << " < 0)";
  else if (!rep.roots_rational)
    std::cout << "irrational (discriminant " << rep.discriminant.str() << ")";
  else
    for (const auto& r : rep.roots) std::cout << r.str() << " ";
  std::cout << "\n";
  std::vector<std::string> trivial;
  for (const auto& ct : rep.certificates)
    if (ct.trivial) trivial.push_back(ct.c.str());
  std::cout << "trivial holonomy at c in {";
  for (std::size_t i = 0; i < trivial.size(); ++i) std::cout << (i ? "," : "") << trivial[i];
  std::cout << "} of " << rep.certificates.size() << " certified candidates\n";
  return kOk;
}

int run_equivariant(const std::string& v1, const std::string& v2, const std::string& w,
                    const std::string& group) {
  if (group != "O3" && group != "SO3") {
    std::cerr << "equivariant: --group must be O3 or SO3\n";
    return kUsage;
  }
  for (const std::string& name : {v1, v2, w})
    if (name != "R3" && name != "R3bar" && name != "s" && name != "sbar") {
      std::cerr << "equivariant: unknown representation '" << name << "'\n";
      return kUsage;
    }
  Group g = group == "SO3" ? Group::SO3 : Group::O3;
  auto basis = equivariant_bilinear_basis(standard_rep(v1), standard_rep(v2), standard_rep(w), g);
  Json j;
  j["v1"] = v1;
  j["v2"] = v2;
  j["w"] = w;
  j["group"] = group;
  j["dimension"] = basis.size();
  Json arr = Json::array();
  for (const auto& b : basis) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < b.m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < b.m.cols(); ++c) row.push_back(b.m(r, c).str());
      rows.push_back(std::move(row));
    }
    arr.push_back(std::move(rows));
  }
  j["kernel_basis"] = std::move(arr);
  std::cout << render_document_json(j);
  return kOk;
}

int run_classify(std::size_t n, std::size_t r) {
  if (n != 3 || r != 3) {
    std::cerr << "classify: only the step-and-rank-three case (--n 3 --r 3) is classified\n";
    return kUsage;
  }
  auto ii = invariant_ideals_f33();
  CarnotQuotients cq = carnot_quotients();
  auto growth_of = [&](const LieAlgebra<Rational>& g) {
    return growth_vector(g, Subspace<Rational>::coordinate(g.dim(), {0, 1, 2}),
                         Subspace<Rational>::zero(g.dim()));
  };
  std::cout << "invariant ideals not containing the center: " << ii.ideals.size()
            << " (dims 0, 3, 5)\n";
  struct Row {
    const char* name;
    const LieAlgebra<Rational>* g;
  } rows[] = {{"f[3,3]", &cq.f33}, {"f[3,3]/a", &cq.a33_carnot}, {"f[3,3]/b", &cq.c33_carnot}};
  for (const auto& row : rows) {
    std::cout << row.name << ": dim " << row.g->dim() << ", growth (";
    auto gv = growth_of(*row.g);
    for (std::size_t i = 0; i < gv.size(); ++i) std::cout << (i ? "," : "") << gv[i];
    std::cout << ")\n";
  }
  return kOk;
}

int run_growth(const std::string& path, const std::string& pname, const std::string& kname) {
  AnyDocument any = load_document_file(path);
  return std::visit(
      [&](const auto& doc) {
        using R = typename std::decay_t<decltype(doc)>::Scalar;
        const Subspace<R>* p = doc.find_subspace(pname);
        if (!p) {
          std::cerr << "growth: document has no subspace '" << pname << "'\n";
          return kUsage;
        }
        const Subspace<R>* k = doc.find_subspace(kname);
        Subspace<R> kzero = Subspace<R>::zero(doc.algebra.dim());
        auto gv = growth_vector(doc.algebra, *p, k ? *k : kzero);
        std::cout << "growth (";
        for (std::size_t i = 0; i < gv.size(); ++i) std::cout << (i ? "," : "") << gv[i];
        std::cout << ")\n";
        return kOk;
      },
      any);
}

int run_killing(const std::string& path) {
  AnyDocument any = load_document_file(path);
  LieAlgebra<Rational> g = std::holds_alternative<Document<Rational>>(any)
                               ? std::get<Document<Rational>>(any).algebra
                               : realify(std::get<Document<Gaussian>>(any).algebra);
  Matrix<Rational> b = killing(g);
  Signature sig = sym_signature(b);
  Json j;
  j["name"] = g.name();
  j["signature"] = {sig.plus, sig.minus, sig.zero};
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(i, c).str());
    rows.push_back(std::move(row));
  }
  j["killing"] = std::move(rows);
  std::cout << render_document_json(j);
  return kOk;
}

int run_witt(std::size_t n, std::size_t r) {
  for (std::size_t k = 1; k <= r; ++k) std::cout << (k > 1 ? " " : "") << witt_dim(n, k);
  std::cout << "\n";
  return kOk;
}

int run_rigidity(const std::string& kind) {
  if (kind == "a33") {
    auto recs = recover_a33_equations(a33_ansatz());
    bool ok = true;
    for (const auto& r : recs) {
      std::cout << r.name << " from triple " << r.triple << ": "
                << (r.in_span ? "recovered" : "NOT RECOVERED") << "\n";
      ok = ok && r.in_span;
    }
    auto sol = verify_a33_solution();
    std::cout << "solved coefficients satisfy (E1)-(E8): " << (sol.equations_hold ? "yes" : "NO")
              << "\n";
    std::cout << "Jacobi defect 0 at " << sol.samples.size()
              << " kappa samples: " << (sol.jacobi_zero_on_grid ? "yes" : "NO") << "\n";
    std::cout << "ansatz at solution matches the A33 bracket: "
              << (sol.matches_direct_construction ? "yes" : "NO") << "\n";
    ok = ok && sol.equations_hold && sol.jacobi_zero_on_grid && sol.matches_direct_construction;
    return ok ? kOk : kVerifyFailed;
  }
  if (kind == "f33") {
    RigidityReport rep = verify_rigidity();
    std::cout << "residual components: " << rep.residual_components << ", span dimension "
              << rep.span_dim << "\n";
    for (const auto& [name, in] : rep.equations_in_span)
      std::cout << name << (in ? " in residual span" : " NOT IN SPAN") << "\n";
    for (const auto& s : rep.chain)
      std::cout << (s.ok ? "ok:   " : "FAIL: ") << s.description << "  =>  " << s.result << "\n";
    std::cout << "all-zero assignment is a Lie algebra: "
              << (rep.zero_assignment_is_lie ? "yes" : "NO") << "\n";
    std::cout << "zero algebra is the free model + so(3), growth (";
    for (std::size_t i = 0; i < rep.growth.size(); ++i)
      std::cout << (i ? "," : "") << rep.growth[i];
    std::cout << "): " << (rep.zero_algebra_matches_f33_iso ? "yes" : "NO") << "\n";
    return rep.ok ? kOk : kVerifyFailed;
  }
  std::cerr << "rigidity: --kind must be a33 or f33\n";
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for step-and-rank-three model-space Lie algebras"};
  app.require_subcommand(1);

  BuildSpec bspec;
  auto* b = app.add_subcommand("build", "construct an algebra and export it as JSON");
  b->add_option("family", bspec.family,
                "c33 | a33 | f33 | f33-carnot | a33-carnot | c33-carnot | free | cn3 | "
                "quaternionic | bk | classical | table1 | table2 | table3 | "
                "g2-horizontal-split | g2-horizontal-compact")
      ->required();
  b->add_option("--a1", bspec.a1, "family parameter a1 (exact rational)");
  b->add_option("--a2", bspec.a2, "family parameter a2 (exact rational)");
  b->add_option("--kappa", bspec.kappa, "family parameter kappa (exact rational)");
  b->add_option("--n", bspec.n, "rank n");
  b->add_option("--r", bspec.r, "step r");
  b->add_option("--case", bspec.case_name,
                "classical case: so3 so4 so31 so5 so41 su3 g2_split g2_compact so4c");
  b->add_option("-o,--output", bspec.out, "output file (default stdout)");

  std::string vfile, vmap, vfrom, vto;
  auto* v = app.add_subcommand("verify", "verify a document or a map");
  auto* vj = v->add_subcommand("jacobi", "check the Jacobi identity of a document");
  vj->add_option("file", vfile, "algebra document")->required();
  auto* vi = v->add_subcommand("iso", "check a linear map is a Lie algebra isomorphism");
  vi->add_option("--map", vmap, "map document")->required();
  vi->add_option("--from", vfrom, "source algebra document")->required();
  vi->add_option("--to", vto, "target algebra document")->required();
  v->require_subcommand(1);

  std::string ia1 = "0", ia2 = "0", ilambda = "1", ikind, iout, ifrom, ito;
  auto* icmd = app.add_subcommand("iso", "build one of the named isomorphisms and export it");
  icmd->add_option("--kind", ikind,
                   "lemma_bk | lemma_complex | lemma_exceptional | b1_so3_so3 | so3c_so31 | "
                   "a33_to_g2c | a33_to_g2s | scaling_c33 | scaling_a33")
      ->required();
  icmd->add_option("--a1", ia1, "a1 (or kappa for the a33 kinds)");
  icmd->add_option("--a2", ia2);
  icmd->add_option("--lambda", ilambda, "dilation parameter for the scaling kinds");
  icmd->add_option("-o,--output", iout, "map document output (default stdout)");
  icmd->add_option("--source-out", ifrom, "also export the source algebra");
  icmd->add_option("--target-out", ito, "also export the target algebra");

  std::string ha1 = "0", ha2 = "0";
  long hmaxc = 3, hmaxden = 3;
  auto* h = app.add_subcommand("holonomy", "roots and closure certificates for the p_c family");
  h->add_option("--a1", ha1)->required();
  h->add_option("--a2", ha2)->required();
  h->add_option("--max-c", hmaxc, "certify all |c| <= max-c");
  h->add_option("--max-den", hmaxden, "...with denominators up to max-den");

  std::string ev1, ev2, ew, egroup = "O3";
  auto* e = app.add_subcommand("equivariant", "solve for equivariant bilinear maps");
  e->add_option("--v1", ev1, "R3 | R3bar | s | sbar")->required();
  e->add_option("--v2", ev2)->required();
  e->add_option("--w", ew)->required();
  e->add_option("--group", egroup, "O3 | SO3");

  std::size_t cn = 3, cr = 3;
  auto* c = app.add_subcommand("classify", "Carnot model-space classification data");
  c->add_option("--n", cn);
  c->add_option("--r", cr);

  std::string gfile, gp = "p", gk = "k";
  auto* gcmd = app.add_subcommand("growth", "growth vector of a document's (p, k)");
  gcmd->add_option("file", gfile)->required();
  gcmd->add_option("--p", gp, "horizontal subspace name");
  gcmd->add_option("--k", gk, "isotropy subspace name");

  std::string kfile;
  auto* kcmd = app.add_subcommand("killing", "Killing matrix and signature");
  kcmd->add_option("file", kfile)->required();

  std::size_t wn = 3, wr = 3;
  auto* wcmd = app.add_subcommand("witt", "layer dimensions of the free nilpotent algebra");
  wcmd->add_option("--n", wn)->required();
  wcmd->add_option("--r", wr)->required();

  std::string rkind;
  auto* rcmd = app.add_subcommand("rigidity", "run an ansatz verification suite");
  rcmd->add_option("--kind", rkind, "a33 | f33")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (b->parsed()) return run_build(bspec);
    if (v->parsed()) {
      if (vj->parsed()) return run_verify_jacobi(vfile);
      if (vi->parsed()) return run_verify_iso(vmap, vfrom, vto);
    }
    if (icmd->parsed()) return run_iso(ikind, ia1, ia2, ilambda, iout, ifrom, ito);
    if (h->parsed()) return run_holonomy(ha1, ha2, hmaxc, hmaxden);
    if (e->parsed()) return run_equivariant(ev1, ev2, ew, egroup);
    if (c->parsed()) return run_classify(cn, cr);
    if (gcmd->parsed()) return run_growth(gfile, gp, gk);
    if (kcmd->parsed()) return run_killing(kfile);
    if (wcmd->parsed()) return run_witt(wn, wr);
    if (rcmd->parsed()) return run_rigidity(rkind);
  } catch (const CLI::ParseError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kUsage;
  } catch (const UnsupportedParameter& err) {
    std::cerr << "unsupported parameters: " << err.what() << "\n";
    return kUnsupported;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
