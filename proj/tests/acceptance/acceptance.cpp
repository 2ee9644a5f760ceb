// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "liecp/catalog/builders.hpp"
#include "liecp/catalog/catalog.hpp"
#include "liecp/cli/cli.hpp"
#include "liecp/constructions/constructions.hpp"
#include "liecp/cp/cp.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/constructors.hpp"
#include "liecp/liealg/io.hpp"
#include "liecp/liealg/structure.hpp"
#include "liecp/parabolic/parabolic.hpp"
#include "support.hpp"

using namespace liecp;
namespace alg = liecp::algebras;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;
  bool all_certified = true;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

RankPolicy g_policy;

Subspace span_of(const LieAlgebra& L, const std::vector<std::string>& items) {
  std::vector<QVector> vs;
  for (const auto& s : items) vs.push_back(parse_combination(s, L.labels()));
  return Subspace::span(L.dim(), vs);
}

std::string str(std::size_t x) { return std::to_string(x); }

// 1 -------------------------------------------------------------------------
Outcome index_regression() {
  Outcome o;
  const std::vector<std::pair<std::string, std::pair<LieAlgebra, std::size_t>>> cases{
      {"diamond", {alg::diamond(), 2}},       {"h3", {alg::heisenberg(1), 1}},   {"g5", {alg::g5(), 1}},
      {"g6", {alg::g6(), 4}},                 {"dim8_dl", {alg::dim8_dl(), 2}}, {"wedge2(4)", {alg::wedge2(4), 6}},
      {"kE+V(n=4)", {alg::kE_plus_V(4), 3}},
  };
  for (const auto& [name, c] : cases) {
    const IndexReport r = index(c.first, g_policy);
    o.all_certified = o.all_certified && r.certified;
    o.require(r.index == c.second, name + ": expected " + str(c.second) + ", computed " + str(r.index) +
                                       (r.certified ? " (certified)" : " (probabilistic)"));
  }
  o.summary = str(cases.size()) + " algebras";
  return o;
}

// 2 -------------------------------------------------------------------------
Outcome parity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& inst : testing::catalog_instances()) {
    const auto r = index(inst.algebra, g_policy);
    o.require((inst.algebra.dim() - r.index) % 2 == 0, inst.name + ": dim - index odd");
    ++n;
  }
  Rng rng(g_policy.seed, 1002);
  for (int k = 0; k < 200; ++k) {
    const LieAlgebra L = testing::random_perturbation(rng, 12);
    const auto r = index(L, g_policy);
    o.require((L.dim() - r.index) % 2 == 0, "perturbation " + str(static_cast<std::size_t>(k)) + ": dim - index odd");
    ++n;
  }
  o.summary = str(n) + " algebras (catalog + 200 perturbations)";
  return o;
}

// 3 -------------------------------------------------------------------------
Outcome catalog_reproduction() {
  Outcome o;
  auto cp_ideal = [&](const std::string& label, const LieAlgebra& L, const std::vector<std::string>& span) {
    const Subspace P = span_of(L, span);
    const CPReport r = is_cp(L, P, g_policy);
    o.all_certified = o.all_certified && r.certified;
    o.require(r.is_cp && r.is_ideal, label + ": stated CP-ideal rejected");
    const auto f = cp_witness_functional(L, P, g_policy);
    o.require(f && is_witness(L, P, *f), label + ": no witness f with P^f = P");
  };
  for (int item = 4; item <= 11; ++item) {
    const std::string label = "morozov6_" + std::to_string(item);
    const LieAlgebra L = alg::morozov6(item);
    o.require(L.dim() == 6, label + ": dim");
    o.require(index(L, g_policy).index == 2, label + ": index");
    o.require(center(L).dim() == 2, label + ": center dim");
    cp_ideal(label, L, {"e3", "e4", "e5", "e6"});
  }
  const std::vector<std::pair<std::string, std::vector<std::string>>> seeley{
      {"37B", {"a", "d", "e", "f", "g"}},  {"37C", {"a", "d", "e", "f", "g"}},  {"37D", {"a", "d", "e", "f", "g"}},
      {"357A", {"c", "d", "e", "f", "g"}}, {"357B", {"c", "d", "e", "f", "g"}}, {"357C", {"c", "d", "e", "f", "g"}},
  };
  for (const auto& [kind, span] : seeley) {
    const LieAlgebra L = alg::seeley(kind);
    o.require(index(L, g_policy).index == 3, "seeley_" + kind + ": index");
    cp_ideal("seeley_" + kind, L, span);
  }
  cp_ideal("seeley_12457N(xi=2)", alg::seeley_12457N(Rat(2)), {"d", "e", "f", "g"});
  o.summary = "8 Morozov, 6 Seeley, 12457N at xi=2";
  return o;
}

// 4 -------------------------------------------------------------------------
Outcome certificates() {
  Outcome o;
  auto check = [&](const std::string& label, const LieAlgebra& L, bool need_fsr) {
    const auto certs = no_cp_certificates(L, g_policy);
    bool form = false, fsr = false;
    for (const auto& c : certs) {
      const bool sound = verify_certificate(L, c, g_policy);
      o.require(sound, label + ": unsound " + to_string(c.kind) + " certificate");
      if (sound && c.kind == CertificateKind::InvariantFormNonabelian) form = true;
      if (sound && c.kind == CertificateKind::FsrNoncommutative) fsr = true;
    }
    o.require(form, label + ": invariant-form certificate did not fire");
    if (need_fsr) o.require(fsr, label + ": FSR certificate did not fire");
  };
  check("g5", alg::g5(), false);
  check("g6", alg::g6(), false);
  check("diamond", alg::diamond(), true);
  check("sl2+W2", alg::sl2_w2(), false);

  const LieAlgebra r = alg::seeley_12457N(Rat(1));
  const Subspace S = span_of(r, {"a-b", "c", "d", "e", "f", "g"});
  bool found = false;
  for (const auto& c : no_cp_certificates(r, g_policy)) {
    if (c.kind != CertificateKind::FsrNoncommutative) continue;
    const bool sound = verify_certificate(r, c, g_policy);
    o.require(sound, "12457N(xi=1): unsound FSR certificate");
    o.require(S.contains(c.u) && S.contains(c.v), "12457N(xi=1): evidence pair outside <a-b,c,d,e,f,g>");
    found = found || sound;
  }
  o.require(found, "12457N(xi=1): FSR certificate did not fire");
  o.summary = "g5, g6, diamond, sl2+W2, 12457N(xi=1)";
  return o;
}

// 5 -------------------------------------------------------------------------
Outcome property_suites() {
  Outcome o;
  const auto& all = testing::catalog_instances();
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) idx[i] = index(all[i].algebra, g_policy).index;

  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].algebra.dim() + all[j].algebra.dim() > 12) continue;
      const auto r = index(direct_product(all[i].algebra, all[j].algebra), g_policy);
      o.require(r.index == idx[i] + idx[j], "additivity fails for " + all[i].name + " x " + all[j].name);
      ++pairs;
    }
  }

  // quotient formula
  {
    const LieAlgebra L = alg::dim8_dl();
    const auto r = quotient_cp_check(L, std::nullopt, span_of(L, {"e8"}), Functional(unit_vector(8, 6)), g_policy);
    o.require(r.index_L == 2 && r.index_quotient == 1 && r.formula_holds, "dim8_dl / <e8>: expected 2 -> 1");
  }
  Rng rng(g_policy.seed, 1005);
  std::vector<const testing::Instance*> eligible;
  for (const auto& inst : all) {
    const auto e = catalog::find_expectation(inst.name, inst.params);
    if (e && e->cp && e->cp->ideal && inst.algebra.dim() <= 8) eligible.push_back(&inst);
  }
  std::size_t triples = 0;
  for (int attempt = 0; triples < 20 && attempt < 400; ++attempt) {
    const auto* a = eligible[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(eligible.size()) - 1))];
    LieAlgebra L = a->algebra;
    Subspace P = span_of(L, catalog::find_expectation(a->name, a->params)->cp->span);
    if (rng.uniform(0, 1) == 0) {
      const auto* b = eligible[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(eligible.size()) - 1))];
      if (L.dim() + b->algebra.dim() <= 12) {
        const Subspace Pb = span_of(b->algebra, catalog::find_expectation(b->name, b->params)->cp->span);
        std::vector<QVector> vs;
        for (auto v : P.basis_vectors()) {
          v.resize(L.dim() + b->algebra.dim());
          vs.push_back(v);
        }
        for (const auto& w : Pb.basis_vectors()) {
          QVector v = zero_vector(L.dim());
          v.insert(v.end(), w.begin(), w.end());
          vs.push_back(v);
        }
        L = direct_product(L, b->algebra);
        P = Subspace::span(L.dim(), vs);
      }
    }
    const auto f = cp_witness_functional(L, P, g_policy);
    if (!f) continue;
    // A: a random nonzero subspace of Z(L) ∩ P ∩ ker f (an ideal)
    const Subspace Zp = center(L).intersect(P);
    std::vector<QVector> kerf;
    const auto zb = Zp.basis_vectors();
    for (std::size_t k = 1; k < zb.size(); ++k) {
      kerf.push_back(sub(scale((*f)(zb[0]), zb[k]), scale((*f)(zb[k]), zb[0])));
    }
    if (!zb.empty() && (*f)(zb[0]) == 0) kerf.push_back(zb[0]);
    const Subspace K = Subspace::span(L.dim(), kerf);
    if (K.dim() == 0) continue;
    std::vector<QVector> avs;
    const auto kb = K.basis_vectors();
    const auto take = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(kb.size())));
    for (std::size_t k = 0; k < take; ++k) {
      QVector v = zero_vector(L.dim());
      for (const auto& b : kb) axpy(v, Rat(rng.uniform(-3, 3)), b);
      avs.push_back(v);
    }
    const Subspace A = Subspace::span(L.dim(), avs);
    if (A.dim() == 0) continue;
    const auto r = quotient_cp_check(L, P, A, *f, g_policy);
    const bool ok = r.formula_holds && r.p_is_witness.value_or(false) && r.quotient_cp && r.quotient_cp->is_cp;
    o.require(ok, "quotient triple on " + L.name() + " with dim A = " + str(A.dim()));
    ++triples;
  }
  o.require(triples == 20, "only " + str(triples) + " random quotient triples generated");

  // codimension one
  struct Case {
    LieAlgebra L;
    std::size_t drop;
    std::string label;
  };
  std::vector<Case> pool;
  auto add_pool = [&](const LieAlgebra& L, const std::string& label) {
    for (std::size_t d = 0; d < L.dim(); ++d) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < L.dim(); ++i) {
        if (i != d) keep.push_back(i);
      }
      if (is_subalgebra(L, Subspace::coordinate(L.dim(), keep))) pool.push_back({L, d, label});
    }
  };
  for (const auto& inst : all) {
    if (inst.algebra.dim() <= 12 && inst.algebra.dim() >= 2) add_pool(inst.algebra, inst.name);
  }
  for (int k = 0; k < 20; ++k) {
    const auto& a = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    const auto& b = all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
    if (a.algebra.dim() + b.algebra.dim() <= 12) add_pool(direct_product(a.algebra, b.algebra), a.name + "x" + b.name);
  }
  std::set<std::size_t> chosen;
  while (chosen.size() < 100 && chosen.size() < pool.size()) {
    chosen.insert(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1)));
  }
  o.require(chosen.size() == 100, "only " + str(chosen.size()) + " codimension-one cases available");
  for (std::size_t c : chosen) {
    const auto& cs = pool[c];
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cs.L.dim(); ++i) {
      if (i != cs.drop) keep.push_back(i);
    }
    const auto r = codim1_analysis(cs.L, Subspace::coordinate(cs.L.dim(), keep), g_policy);
    o.require(r.dichotomy && r.direction != Codim1Direction::Inconsistent,
              "codim-1 " + cs.label + " without " + cs.L.label(cs.drop));
  }
  o.summary = str(pairs) + " product pairs, 1+" + str(triples) + " quotient triples, " + str(chosen.size()) +
              " codim-1 subalgebras";
  return o;
}

// 6 -------------------------------------------------------------------------
Outcome equivalences() {
  Outcome o;
  auto expect = [&](const std::string& label, const std::function<EquivalenceReport()>& fn, bool value) {
    try {
      const EquivalenceReport r = fn();
      o.require(r.consistent, label + ": inconsistent");
      for (const auto& [k, v] : r.conditions) o.require(v == value, label + ": condition " + k + " = " + (v ? "true" : "false"));
      o.all_certified = o.all_certified && r.certified;
    } catch (const Error& e) {
      o.require(false, label + ": " + e.what());
    }
  };
  const LieAlgebra two = alg::twodim_nonabelian();
  expect("2-dim adjoint", [&] { return semidirect_cp_report(two, adjoint_action(two), 2, g_policy); }, true);
  const LieAlgebra s = alg::sl2();
  expect("sl2 on W2", [&] { return semidirect_cp_report(s, adjoint_action(s), 3, g_policy); }, false);
  expect("k[t]/(t^2)", [&] { return frobenius_associative_report(truncated_polynomial(2), g_policy); }, true);
  expect("M2", [&] { return frobenius_associative_report(matrix_algebra(2), g_policy); }, true);
  const AssocAlgebra xy({"1", "x", "y"}, {{0, 0, {{0, Rat(1)}}},
                                          {0, 1, {{1, Rat(1)}}},
                                          {1, 0, {{1, Rat(1)}}},
                                          {0, 2, {{2, Rat(1)}}},
                                          {2, 0, {{2, Rat(1)}}}});
  expect("k[x,y]/(x^2,xy,y^2)", [&] { return frobenius_associative_report(xy, g_policy); }, false);
  o.require(index(semidirect_product(two, adjoint_action(two), 2), g_policy).index == 0, "2-dim adjoint: not Frobenius");
  o.summary = "5 instances";
  return o;
}

// 7 -------------------------------------------------------------------------
Outcome parabolic_sweep() {
  Outcome o;
  std::size_t count = 0, certified = 0;
  auto run = [&](char type, const std::vector<std::size_t>& parts) {
    const ParabolicReport r = verify_parabolic(type, parts, g_policy);
    std::string fails;
    for (const auto& f : r.failures) fails += " " + f;
    o.require(r.ok(), std::string(1, type) + "(" + format_composition(parts) + "):" + fails);
    if (r.dim_N <= 12) o.require(r.certified, std::string(1, type) + "(" + format_composition(parts) + ") uncertified");
    ++count;
    if (r.certified) ++certified;
    return r;
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& c : compositions_A(n)) run('A', c.parts());
  }
  for (std::size_t r = 1; r <= 4; ++r) {
    for (const auto& c : compositions_C(r)) run('C', c.parts());
  }
  const std::vector<std::tuple<char, std::vector<std::size_t>, std::size_t>> borel{
      {'A', {1, 1, 1}, 1}, {'A', {1, 1, 1, 1}, 2}, {'A', {1, 1, 1, 1, 1}, 2},
      {'C', {1, 1, 1, 1}, 2}, {'C', {1, 1, 1, 1, 1, 1}, 3}};
  for (const auto& [type, parts, expected] : borel) {
    const auto r = verify_parabolic(type, parts, g_policy);
    o.require(r.index == expected, std::string(1, type) + " Borel (" + format_composition(parts) + "): index " +
                                       str(r.index) + ", expected " + str(expected));
  }
  o.summary = str(count) + " compositions (" + str(certified) + " certified symbolically)";
  return o;
}

// 8 -------------------------------------------------------------------------
Outcome table1() {
  Outcome o;
  std::vector<std::pair<char, std::size_t>> rows;
  for (std::size_t r = 1; r <= 5; ++r) rows.push_back({'A', r});
  for (std::size_t r = 3; r <= 4; ++r) rows.push_back({'B', r});
  for (std::size_t r = 2; r <= 4; ++r) rows.push_back({'C', r});
  for (std::size_t r = 4; r <= 5; ++r) rows.push_back({'D', r});
  for (const auto& [type, rank] : rows) {
    const Table1Report r = table1_check(type, rank, g_policy);
    const std::string label = std::string(1, type) + str(rank);
    std::string fails;
    for (const auto& f : r.failures) fails += " " + f;
    o.require(r.ok(), label + ":" + fails);
    o.require(r.sum_ok, label + ": i(N) + i(B) != r");
    if (type == 'A' || type == 'C') {
      o.require(r.cp_found.value_or(false) && r.cp_dim == r.computed.half() && r.computed.half() == r.expected.m,
                label + ": CP-ideal of dimension m not found");
    } else {
      o.require(r.computed.half() > r.expected.m, label + ": (dim N + i(N))/2 does not exceed m");
    }
  }
  o.summary = str(rows.size()) + " rows";
  return o;
}

// 9 -------------------------------------------------------------------------
Outcome principal_nilpotent() {
  Outcome o;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = principal_nilpotent_normalizer(n, g_policy);
    const std::string label = "sl" + str(n);
    o.require(r.dim_C == n - 1, label + ": dim C(x)");
    o.require(r.C_abelian, label + ": C(x) not abelian");
    o.require(r.dim_F == 2 * (n - 1), label + ": dim F");
    o.require(r.index_F == 0, label + ": i(F)");
    o.require(r.cp_ideal, label + ": C(x) not a CP-ideal of F");
    o.require(r.certified, label + ": not certified");
  }
  o.summary = "n = 2..5";
  return o;
}

// 10 ------------------------------------------------------------------------
QMatrix diag(const std::vector<int>& w) {
  QMatrix d(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d(i, i) = w[i];
  return d;
}

Subspace lift_tensor(const AssocAlgebra& A, const LieAlgebra& M, const Subspace& P) {
  std::vector<QVector> vs;
  const std::size_t n = A.dim() * M.dim();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (const auto& p : P.basis_vectors()) {
      QVector v = zero_vector(n);
      for (std::size_t j = 0; j < M.dim(); ++j) v[tensor_index(i, j, M.dim())] = p[j];
      vs.push_back(v);
    }
  }
  return Subspace::span(n, vs);
}

Outcome extensions() {
  Outcome o;
  // derivation extensions with d(Z(M)) != 0
  const std::vector<std::tuple<std::string, LieAlgebra, std::vector<int>>> derivs{
      {"h3", alg::heisenberg(1), {1, 1, 2}},
      {"abelian(4)", alg::abelian(4), {1, 1, 1, 1}},
      {"morozov6_4", alg::morozov6(4), {1, 1, 2, 2, 2, 3}},
      {"g5", alg::g5(), {1, 2, 3, 4, 5}},
  };
  for (const auto& [label, M, w] : derivs) {
    const QMatrix d = diag(w);
    const Subspace Z = center(M);
    bool moves = false;
    for (const auto& z : Z.basis_vectors()) moves = moves || !is_zero(d.apply(z));
    o.require(moves, label + ": d(Z(M)) = 0");
    const LieAlgebra L = derivation_extend(M, d);
    const auto iM = index(M, g_policy).index, iL = index(L, g_policy).index;
    o.require(iM == iL + 1, label + ": i(M) = " + str(iM) + ", i(L) = " + str(iL));
  }

  // Heisenberg extensions
  const std::vector<std::tuple<std::string, LieAlgebra, std::string, std::vector<std::string>>> heis{
      {"h3", alg::heisenberg(1), "z", {"y", "z"}},
      {"morozov6_4", alg::morozov6(4), "e5", {"e3", "e4", "e5", "e6"}},
  };
  for (const auto& [label, M, zname, pspan] : heis) {
    for (std::size_t r = 1; r <= 2; ++r) {
      const QVector z = parse_combination(zname, M.labels());
      const LieAlgebra L = heisenberg_extend(M, z, r);
      const std::string tag = label + " r=" + str(r);
      o.require(index(L, g_policy).index == index(M, g_policy).index, tag + ": i(L) != i(M)");
      std::vector<QVector> zm;
      for (auto v : center(M).basis_vectors()) {
        v.resize(L.dim());
        zm.push_back(v);
      }
      o.require(center(L) == Subspace::span(L.dim(), zm), tag + ": Z(L) != Z(M)");
      std::vector<QVector> pv;
      for (auto v : span_of(M, pspan).basis_vectors()) {
        v.resize(L.dim());
        pv.push_back(v);
      }
      for (std::size_t k = 0; k < r; ++k) pv.push_back(unit_vector(L.dim(), M.dim() + k));
      o.require(is_cp(L, Subspace::span(L.dim(), pv), g_policy).is_cp, tag + ": P + <s_1..s_r> not a CP");
    }
  }

  // tensor products with commutative Frobenius algebras
  const std::vector<std::tuple<std::string, LieAlgebra, std::vector<std::string>>> tens{
      {"h3", alg::heisenberg(1), {"y", "z"}},
      {"diamond", alg::diamond(), {}},
      {"morozov6_4", alg::morozov6(4), {"e3", "e4", "e5", "e6"}},
  };
  for (std::size_t m = 2; m <= 3; ++m) {
    const AssocAlgebra A = truncated_polynomial(m);
    for (const auto& [label, M, pspan] : tens) {
      const LieAlgebra L = tensor_commutative(A, M);
      const std::string tag = A.name() + " (x) " + label;
      const auto iL = index(L, g_policy).index, iM = index(M, g_policy).index;
      o.require(iL == m * iM, tag + ": i = " + str(iL) + ", expected " + str(m * iM));
      if (!pspan.empty()) {
        o.require(is_cp(L, lift_tensor(A, M, span_of(M, pspan)), g_policy).is_cp, tag + ": A(x)P not a CP");
      }
    }
  }
  o.summary = "4 derivation, 4 Heisenberg, 6 tensor instances";
  return o;
}

// 11 ------------------------------------------------------------------------
std::string cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("liecp_acceptance_" + name);
  std::ofstream(path) << text;
  return path.string();
}


Outcome determinism() {
  Outcome o;
  const std::vector<std::string> seeds{"11", "22", "33"};
  const std::string g6 = write_temp("g6.json", serialize_algebra(alg::g6()));
  const std::string m4 = write_temp("m4.json", serialize_algebra(alg::morozov6(4)));
  const std::string dl = write_temp("dl.json", serialize_algebra(alg::dim8_dl()));
  const std::vector<std::vector<std::string>> commands{
      {"index", g6},
      {"fsr", g6},
      {"certify-no-cp", g6},
      {"invariant-form", g6},
      {"cp-find", m4},
      {"cp-check", m4, "--span", "e3,e4,e5,e6"},
      {"quotient", dl, "--ideal", "e8", "--f", "e7"},
      {"catalog", "verify"},
      {"parabolic", "--type", "C", "--composition", "1,2,2,1", "--verify"},
  };
  std::vector<std::string> conclusions_first;
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    std::vector<std::string> conclusions;
    for (const auto& cmd : commands) {
      std::vector<std::string> args{"--json", "--seed", seeds[si]};
      args.insert(args.end(), cmd.begin(), cmd.end());
      int c1 = 0, c2 = 0;
      const std::string a = cli(args, c1);
      const std::string b = cli(args, c2);
      o.require(a == b && c1 == c2, cmd[0] + " not byte-identical under seed " + seeds[si]);
      const json j = json::parse(a);
      // exact conclusions: exit code and status, plus the seed-free invariants
      std::string concl = cmd[0] + ":" + std::to_string(c1) + ":" + j.at("status").get<std::string>();
      const json& r = j.at("result");
      for (const char* k : {"index", "center_dim", "fsr_dim", "nondegenerate", "found", "span", "is_cp",
                            "index_quotient", "all_ok", "cp", "regular", "commutative"}) {
        if (r.contains(k)) concl += std::string(":") + k + "=" + r.at(k).dump();
      }
      if (r.contains("certificates")) {
        for (const auto& c : r.at("certificates")) concl += ":" + c.at("kind").get<std::string>();
      }
      conclusions.push_back(concl);
    }
    // library-level conclusions over the whole catalog
    RankPolicy p = g_policy.with_seed(std::stoull(seeds[si]));
    for (const auto& inst : testing::catalog_instances()) {
      const auto r = catalog::verify(inst.name, inst.params, p);
      conclusions.push_back(inst.name + (r.ok() ? ":ok" : ":fail") + ":" + str(index(inst.algebra, p).index));
    }
    if (si == 0) {
      conclusions_first = conclusions;
    } else {
      for (std::size_t k = 0; k < conclusions.size(); ++k) {
        o.require(conclusions[k] == conclusions_first[k],
                  "conclusion differs under seed " + seeds[si] + ": " + conclusions[k] + " vs " + conclusions_first[k]);
      }
    }
  }
  o.summary = str(commands.size()) + " CLI commands and " + str(testing::catalog_instances().size()) +
              " catalog verifications under seeds 11, 22, 33";
  return o;
}

// 12 ------------------------------------------------------------------------
Outcome oracle_cross_check() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& inst : testing::catalog_instances()) {
    if (inst.algebra.dim() > 8) continue;
    const LinFormMatrix B = bracket_matrix(inst.algebra);
    const std::size_t rnd = randomized_rank(B, g_policy);
    const std::size_t sym = symbolic_rank(B);
    o.require(rnd == sym, inst.name + ": randomized " + str(rnd) + " vs symbolic " + str(sym));
    const auto cert = index(inst.algebra, g_policy.with_certify(Certify::Always));
    const auto prob = index(inst.algebra, g_policy.with_certify(Certify::Never));
    o.require(cert.certified && cert.index == prob.index, inst.name + ": certified and sampled index differ");
    ++n;
  }
  o.summary = str(n) + " algebras of dim <= 8";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0) g_policy.seed = std::stoull(argv[i + 1]);
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"index regression", index_regression},
      {"parity", parity},
      {"Morozov/Seeley catalog", catalog_reproduction},
      {"no-CP certificates", certificates},
      {"additivity, quotient and codim-1 suites", property_suites},
      {"equivalence consistency", equivalences},
      {"parabolic sweep", parabolic_sweep},
      {"classical Borel nilradical rows", table1},
      {"principal nilpotent in sl_n", principal_nilpotent},
      {"extension suite", extensions},
      {"determinism", determinism},
      {"randomized vs symbolic rank", oracle_cross_check},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "CRITERION " << (k + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.summary << " [" << time.str() << "s]\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
