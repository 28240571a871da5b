// Acceptance suite: runs every classification claim end to end and prints
// one PASS/FAIL line per criterion. All checks are exact; there are no
// tolerances anywhere.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "carnot/carnot.hpp"

#ifndef CARNOT_CLI_PATH
#define CARNOT_CLI_PATH "./carnot"
#endif

using namespace carnot;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              note.c_str());
  if (!ok) ++failures;
}

std::vector<Rational> rational_sweep(long max_abs, long max_den) {
  std::vector<Rational> out;
  for (long den = 1; den <= max_den; ++den)
    for (long num = -max_abs * den; num <= max_abs * den; ++num) out.emplace_back(num, den);
  return out;
}

bool run_cli(const std::string& args, int expect_exit, std::string* capture = nullptr) {
  std::string cmd = std::string(CARNOT_CLI_PATH) + " " + args;
  std::string tmp = std::string("cli_capture.tmp");
  cmd += " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  int exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  if (capture) {
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    *capture = ss.str();
  }
  std::remove(tmp.c_str());
  return exit_code == expect_exit;
}

}  // namespace

int main() {
  criterion(1, "Witt dimensions: layers of f[3,3] are (3,3,8); Hall counts match for n,r <= 4",
            [] {
              if (witt_dim(3, 1) != 3 || witt_dim(3, 2) != 3 || witt_dim(3, 3) != 8) return false;
              for (std::size_t n = 1; n <= 4; ++n)
                for (std::size_t r = 1; r <= 4; ++r) {
                  auto words = hall_basis(n, r);
                  for (std::size_t k = 1; k <= r; ++k) {
                    std::size_t cnt = static_cast<std::size_t>(std::count_if(
                        words.begin(), words.end(),
                        [k](const auto& w) { return w->weight == k; }));
                    if (cnt != witt_dim(n, k)) return false;
                  }
                }
              return true;
            });

  criterion(2, "Carnot classification: ideals {0,a,b}; quotient dims {14,11,9} and growth vectors",
            [] {
              auto ii = invariant_ideals_f33();
              if (ii.ideals.size() != 3) return false;
              if (ii.ideals[0].dim() != 0) return false;
              if (ii.ideals[1] != Subspace<Rational>::coordinate(14, {11, 12, 13})) return false;
              if (ii.ideals[2] != Subspace<Rational>::coordinate(14, {6, 7, 8, 9, 10})) return false;
              if (!ii.graph_family_projection_lambda_free) return false;
              auto cq = carnot_quotients();
              if (cq.f33.dim() != 14 || cq.a33_carnot.dim() != 11 || cq.c33_carnot.dim() != 9)
                return false;
              auto gv = [](const LieAlgebra<Rational>& g) {
                return growth_vector(g, Subspace<Rational>::coordinate(g.dim(), {0, 1, 2}),
                                     Subspace<Rational>::zero(g.dim()));
              };
              return gv(cq.f33) == std::vector<std::size_t>{3, 6, 14} &&
                     gv(cq.a33_carnot) == std::vector<std::size_t>{3, 6, 11} &&
                     gv(cq.c33_carnot) == std::vector<std::size_t>{3, 6, 9};
            });

  criterion(3, "Equivariant uniqueness: M1-M5 solver dimensions 1 and spanned by the named maps",
            [] {
              for (const char* id : {"M1", "M2", "M3", "M4", "M5"}) {
                auto reps = named_map_reps(id);
                auto basis = equivariant_bilinear_basis(reps[0], reps[1], reps[2], Group::O3);
                if (basis.size() != 1) return false;
                BilinearMap named = named_map(id);
                Matrix<Rational> stacked(2, named.m.rows() * named.m.cols());
                for (std::size_t r = 0; r < named.m.rows(); ++r)
                  for (std::size_t c = 0; c < named.m.cols(); ++c) {
                    stacked(0, r * named.m.cols() + c) = basis[0].m(r, c);
                    stacked(1, r * named.m.cols() + c) = named.m(r, c);
                  }
                if (rank(stacked) != 1) return false;
              }
              Rep r3 = standard_rep(RepKind::R3);
              return equivariant_bilinear_basis(r3, r3, r3, Group::O3).empty() &&
                     equivariant_bilinear_basis(r3, r3, r3, Group::SO3).size() == 1;
            });

  criterion(4, "C33: jacobi on a 5x5 grid incl (5,-4),(3,4),(0,0); graded = c33_carnot; scaling law",
            [] {
              for (long a1 : {-2, 0, 3, 5, 7})
                for (long a2 : {-4, -1, 0, 2, 4})
                  if (!jacobi_defect(c33_iso_algebra<Rational>(Rational(a1), Rational(a2))).ok)
                    return false;
              auto cq = carnot_quotients();
              for (auto [a1, a2] : {std::pair<long, long>{5, -4}, {3, 4}, {0, 0}}) {
                auto m = build_iso_algebra(IsoFamily::C33, Rational(a1), Rational(a2));
                if (!graded_matches(associated_graded(m.algebra, m.p, m.k), cq.c33_carnot))
                  return false;
              }
              auto iso = iso_scaling_c33(Rational(5), Rational(-4), Rational(2));
              if (!check_map(iso.map(), MapMode::Isomorphism).ok) return false;
              return iso.target->params()[0].second == Rational(5, 4) &&
                     iso.target->params()[1].second == Rational(-1, 4);
            });

  criterion(5, "Holonomy: (5,-4) trivial at c in {+-1,+-2}; (0,1) at +-1; (0,-1) never",
            [] {
              auto sweep = rational_sweep(3, 3);
              auto rep = holonomy_analysis(Rational(5), Rational(-4), sweep);
              for (const auto& cert : rep.certificates) {
                bool expect = cert.c.abs() == Rational(1) || cert.c.abs() == Rational(2);
                if (cert.trivial != expect) return false;
              }
              auto rep2 = holonomy_analysis(Rational(0), Rational(1), sweep);
              if (rep2.real_c != std::vector<Rational>{Rational(1), Rational(-1)}) return false;
              for (const auto& cert : rep2.certificates)
                if (cert.trivial != (cert.c.abs() == Rational(1))) return false;
              auto rep3 = holonomy_analysis(Rational(0), Rational(-1), sweep);
              if (rep3.discriminant_nonnegative || !rep3.real_c.empty()) return false;
              for (const auto& cert : rep3.certificates)
                if (cert.trivial) return false;
              return true;
            });

  criterion(6, "Isomorphisms: psi/phi at (5,-4),(3,4),(0,-4),(+-2,-1); b1 = so(3)+so(3)",
            [] {
              struct Case {
                const char* kind;
                long a1, a2;
              } cases[] = {{"lemma_bk", 5, -4},          {"lemma_bk", 3, 4},
                           {"lemma_complex", 0, -4},     {"lemma_exceptional", 2, -1},
                           {"lemma_exceptional", -2, -1}, {"b1_so3_so3", 0, 0}};
              for (const auto& c : cases) {
                auto iso = build_isomorphism(c.kind, Rational(c.a1), Rational(c.a2), Rational(1));
                if (!check_map(iso.map(), MapMode::Isomorphism).ok) return false;
              }
              // named targets: (5,-4) -> b4+b1 and (3,4) -> b4+b(-1)
              auto i1 = iso_lemma_bk(Rational(5), Rational(-4));
              if (i1.target->params()[0].second != Rational(4) ||
                  i1.target->params()[1].second != Rational(1))
                return false;
              auto i2 = iso_lemma_bk(Rational(3), Rational(4));
              return i2.target->params()[0].second == Rational(4) &&
                     i2.target->params()[1].second == Rational(-1);
            });

  criterion(7, "Tables 1-3: every row at a rational locus is Lie and bracket-generates",
            [] {
              for (auto [a1, a2] : {std::pair<long, long>{3, 4}, {-4, 0}, {4, 0}, {5, -4}, {2, -1}}) {
                auto t = build_table1(Rational(a1), Rational(a2));
                if (!jacobi_defect(t.model.algebra).ok) return false;
                if (growth_vector(t.model.algebra, t.model.p, t.model.k) !=
                    std::vector<std::size_t>{3, 6, 9})
                  return false;
              }
              for (auto [a1, a2] : {std::pair<long, long>{-5, -4}, {-2, -1}, {0, -4}}) {
                auto t = build_table2(Rational(a1), Rational(a2));
                if (!jacobi_defect(t.model.algebra).ok) return false;
                if (growth_vector(t.model.algebra, t.model.p, t.model.k) !=
                    std::vector<std::size_t>{3, 6, 9})
                  return false;
              }
              for (std::size_t n : {2u, 3u, 4u}) {
                std::vector<std::size_t> expect{n, n * (n + 1) / 2, n * (n + 3) / 2};
                for (auto [a1, a2] : {std::pair<long, long>{3, 4}, {5, -4}, {-5, -4}, {0, -4},
                                      {2, -1}, {-2, -1}}) {
                  auto t = build_table3(n, Rational(a1), Rational(a2));
                  if (!jacobi_defect(t.model.algebra).ok) return false;
                  if (growth_vector(t.model.algebra, t.model.p, t.model.k) != expect) return false;
                }
              }
              return true;
            });

  criterion(8, "A33: c7 = 3 kappa solution; (E1)-(E8) recovered; graded; g2 isomorphisms; Killing",
            [] {
              auto sol = verify_a33_solution();
              if (!sol.equations_hold || !sol.jacobi_zero_on_grid ||
                  !sol.matches_direct_construction || sol.samples.size() != 7)
                return false;
              for (const auto& rec : recover_a33_equations(a33_ansatz()))
                if (!rec.in_span) return false;
              auto cq = carnot_quotients();
              for (long k : {0, 1, -1, 3}) {
                auto m = build_iso_algebra(IsoFamily::A33, Rational(k));
                if (!graded_matches(associated_graded(m.algebra, m.p, m.k), cq.a33_carnot))
                  return false;
              }
              if (!check_map(iso_a33_to_g2c(Rational(1)).map(), MapMode::Isomorphism).ok)
                return false;
              if (!check_map(iso_a33_to_g2s(Rational(-1)).map(), MapMode::Isomorphism).ok)
                return false;
              return killing_signature(a33_iso_algebra<Rational>(Rational(1))) ==
                         Signature{0, 14, 0} &&
                     killing_signature(a33_iso_algebra<Rational>(Rational(-1))) ==
                         Signature{8, 6, 0};
            });

  criterion(9, "g2 models: both 14-dimensional Lie algebras; split commutators close in the 7x7 span",
            [] {
              auto s = g2_split();  // throws if a commutator escapes the span
              auto c = g2_compact();
              return s.dim() == 14 && c.dim() == 14 && jacobi_defect(s).ok &&
                     jacobi_defect(c).ok &&
                     killing_signature(s) == Signature{8, 6, 0} &&
                     killing_signature(c) == Signature{0, 14, 0};
            });

  criterion(10, "F[3,3] rigidity: all 18 equations in the residual span; f4 = 72/49 c2^3; all zero",
             [] {
               RigidityReport rep = verify_rigidity();
               if (!rep.ok) return false;
               bool saw_f4 = false;
               for (const auto& s : rep.chain)
                 if (s.result.find("72/49") != std::string::npos) saw_f4 = true;
               return saw_f4 && rep.zero_assignment_is_lie && rep.zero_algebra_matches_f33_iso &&
                      rep.growth == std::vector<std::size_t>{3, 6, 14} &&
                      f33_iso_algebra<Rational>().dim() == 17;
             });

  criterion(11, "step-two rank-four example: dim 7, growth (4,7), jacobi 0",
             [] {
               auto q = quaternionic_step2();
               return q.algebra.dim() == 7 && jacobi_defect(q.algebra).ok &&
                      growth_vector(q.algebra, q.p, Subspace<Rational>::zero(7)) ==
                          std::vector<std::size_t>{4, 7};
             });

  criterion(12, "CLI round-trip: built documents re-verify; mutated documents exit 1",
             [] {
               // library-level byte round-trips for every catalog family
               auto roundtrip = [](const Json& j) {
                 std::string text = render_document_json(j);
                 AnyDocument any = document_from_json(parse_document_text(text));
                 return std::visit(
                            [&](const auto& doc) {
                              return render_document_json(document_to_json(doc));
                            },
                            any) == text;
               };
               {
                 ModelAlgebra m = build_iso_algebra(IsoFamily::C33, Rational(5), Rational(-4));
                 Document<Rational> d;
                 d.algebra = m.algebra;
                 d.subspaces.emplace_back("p", m.p);
                 d.subspaces.emplace_back("k", m.k);
                 if (!roundtrip(document_to_json(d))) return false;
               }
               {
                 Document<Gaussian> d;
                 d.algebra = so_plus_complex(3);
                 if (!roundtrip(document_to_json(d))) return false;
               }
               // CLI end to end
               if (!run_cli("witt --n 3 --r 3", 0)) return false;
               std::string witt_out;
               run_cli("witt --n 3 --r 3", 0, &witt_out);
               if (witt_out != "3 3 8\n") return false;
               if (!run_cli("build c33 --a1 5 --a2 -4 -o acc_c33.json", 0)) return false;
               if (!run_cli("verify jacobi acc_c33.json", 0)) return false;
               if (!run_cli("build classical --case so4c -o acc_so4c.json", 0)) return false;
               if (!run_cli("verify jacobi acc_so4c.json", 0)) return false;
               std::remove("acc_so4c.json");
               if (!run_cli("growth acc_c33.json", 0)) return false;
               if (!run_cli("holonomy --a1 5 --a2 -4", 0)) return false;
               if (!run_cli("classify --n 3 --r 3", 0)) return false;
               if (!run_cli("build table1 --a1 1 --a2 1 -o acc_bad.json", 3)) return false;
               if (!run_cli("build nope", 2)) return false;
               if (!run_cli("equivariant --v1 R9 --v2 s --w R3", 2)) return false;
               // export an isomorphism and re-verify it through the map checker
               if (!run_cli("iso --kind lemma_bk --a1 5 --a2 -4 -o acc_map.json "
                            "--source-out acc_src.json --target-out acc_tgt.json",
                            0))
                 return false;
               if (!run_cli("verify iso --map acc_map.json --from acc_src.json --to acc_tgt.json",
                            0))
                 return false;
               std::remove("acc_map.json");
               std::remove("acc_src.json");
               std::remove("acc_tgt.json");
               // mutate one structure constant and expect exit 1
               {
                 std::ifstream in("acc_c33.json");
                 std::stringstream ss;
                 ss << in.rdbuf();
                 Json j = Json::parse(ss.str());
                 j["brackets"][0]["terms"][0]["c"] = "2";
                 std::ofstream out("acc_mut.json");
                 out << render_document_json(j);
               }
               if (!run_cli("verify jacobi acc_mut.json", 1)) return false;
               std::remove("acc_c33.json");
               std::remove("acc_mut.json");
               return true;
             });

  std::printf("%s: %d of 12 criteria passed\n", failures == 0 ? "OK" : "FAILED", 12 - failures);
  return failures == 0 ? 0 : 1;
}
