#include "liecp/cp/cp.hpp"

#include <algorithm>
#include <functional>

#include "liecp/exactla/random.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp {

namespace {

void check_ambient(const LieAlgebra& L, const Subspace& S, const char* what) {
  if (S.ambient_dim() != L.dim()) {
    throw Error(ErrorKind::AmbientMismatch, std::string(what) + " lives in dimension " +
                                                std::to_string(S.ambient_dim()) + ", algebra has dimension " +
                                                std::to_string(L.dim()));
  }
}

CPReport is_cp_with_index(const LieAlgebra& L, const Subspace& P, const IndexReport& idx, const RankPolicy& policy) {
  check_ambient(L, P, "P");
  const std::size_t n = L.dim();
  CPReport r;
  r.dim_P = P.dim();
  r.index = idx.index;
  r.target_dim = (n + idx.index) / 2;
  r.abelian_subalgebra = is_abelian(L, P);
  r.is_ideal = is_ideal(L, P);
  r.certified = idx.certified;
  if (!r.abelian_subalgebra) return r;

  const LinFormMatrix m = cp_rank_matrix(L, P);
  GenericRank rank = generic_rank(m, policy);
  IndexReport index_used = idx;
  auto dimension_ok = [&](const IndexReport& i) { return 2 * P.dim() == n + i.index; };
  auto rank_ok = [&](const GenericRank& g) { return g.rank + P.dim() == n; };
  if (dimension_ok(index_used) != rank_ok(rank)) {
    r.rechecked = true;
    const RankPolicy exact = policy.with_certify(Certify::Always);
    index_used = index(L, exact);
    rank = generic_rank(m, exact);
    if (dimension_ok(index_used) != rank_ok(rank)) {
      throw Error(ErrorKind::InconsistentConditions,
                  "dimension and rank criteria for a polarization disagree after exact recomputation");
    }
  }
  r.index = index_used.index;
  r.target_dim = (n + index_used.index) / 2;
  r.dimension_condition = dimension_ok(index_used);
  r.rank_condition = rank_ok(rank);
  r.rank = rank.rank;
  r.certified = index_used.certified && rank.certified;
  r.is_cp = *r.dimension_condition && *r.rank_condition;
  return r;
}

// Basis vectors i, j with [x_i, x_j] = 0.
std::vector<std::vector<bool>> commuting_table(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, true));
  for (const auto& [key, value] : L.table()) {
    c[key.first][key.second] = false;
    c[key.second][key.first] = false;
  }
  return c;
}

// Calls visit on every subset of {0..n-1} of the given size whose elements
// pairwise commute, in lexicographic order; stops when visit returns true.
void for_each_abelian_subset(const std::vector<std::vector<bool>>& comm, std::size_t size,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = comm.size();
  std::vector<std::size_t> current;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (current.size() == size) return visit(current);
    for (std::size_t i = start; i + (size - current.size()) <= n; ++i) {
      bool ok = true;
      for (auto j : current) {
        if (!comm[i][j]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(i);
      if (rec(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  rec(0);
}

}  // namespace

LinFormMatrix cp_rank_matrix(const LieAlgebra& L, const Subspace& P) {
  const std::size_t n = L.dim();
  LinFormMatrix m(P.dim(), n, n);
  for (std::size_t i = 0; i < P.dim(); ++i) {
    const QMatrix ad = L.ad(P.basis_vector(i));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(ad(k, j)) != 0) m.add(i, j, k, ad(k, j));
      }
    }
  }
  return m;
}

CPReport is_cp(const LieAlgebra& L, const Subspace& P, const RankPolicy& policy) {
  check_ambient(L, P, "P");
  return is_cp_with_index(L, P, index(L, policy), policy);
}

bool is_witness(const LieAlgebra& L, const Subspace& P, const Functional& f) { return perp(L, P, f) == P; }

std::optional<Functional> cp_witness_functional(const LieAlgebra& L, const Subspace& P, const RankPolicy& policy) {
  check_ambient(L, P, "P");
  policy.validate();
  if (!is_abelian(L, P)) throw Error(ErrorKind::PreconditionViolated, "P must be an abelian subalgebra");
  const std::size_t idx = index(L, policy).index;
  if (2 * P.dim() != L.dim() + idx) return std::nullopt;
  Rng rng(policy.seed, stream::kWitness);
  for (std::size_t a = 0; a < policy.attempts; ++a) {
    Functional f(rng.integer_point(L.dim(), policy.coeff_bound));
    if (is_witness(L, P, f) && stabilizer(L, f).dim() == idx) return f;
  }
  return std::nullopt;
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::FsrNoncommutative: return "fsr_noncommutative";
    case CertificateKind::InvariantFormNonabelian: return "invariant_form_nonabelian";
  }
  return "unknown";
}

std::vector<NoCPCertificate> no_cp_certificates(const LieAlgebra& L, const RankPolicy& policy) {
  if (L.is_abelian()) throw Error(ErrorKind::PreconditionViolated, "no-CP certificates need a nonabelian algebra");
  std::vector<NoCPCertificate> out;
  const FSRReport fsr = frobenius_semiradical(L, policy);
  const auto basis = fsr.subspace.basis_vectors();
  bool found = false;
  for (std::size_t a = 0; a < basis.size() && !found; ++a) {
    for (std::size_t b = a + 1; b < basis.size() && !found; ++b) {
      QVector br = L.bracket(basis[a], basis[b]);
      if (is_zero(br)) continue;
      NoCPCertificate c;
      c.kind = CertificateKind::FsrNoncommutative;
      c.functionals = fsr.functionals;
      c.fsr = fsr.subspace;
      c.u = basis[a];
      c.v = basis[b];
      c.bracket = std::move(br);
      out.push_back(std::move(c));
      found = true;
    }
  }
  if (auto form = nondeg_invariant_form(L, policy)) {
    NoCPCertificate c;
    c.kind = CertificateKind::InvariantFormNonabelian;
    c.form_point = std::move(form->point);
    c.form = std::move(form->matrix);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<NoCPCertificate> no_cp_certificate(const LieAlgebra& L, const RankPolicy& policy) {
  auto all = no_cp_certificates(L, policy);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

bool verify_certificate(const LieAlgebra& L, const NoCPCertificate& c, const RankPolicy& policy) {
  if (L.is_abelian()) return false;
  const std::size_t n = L.dim();
  if (c.kind == CertificateKind::InvariantFormNonabelian) {
    return c.form.rows() == n && is_invariant_form(L, c.form) && rank_exact(c.form) == n;
  }
  if (c.functionals.empty() || c.u.size() != n || c.v.size() != n) return false;
  const std::size_t idx = index(L, policy.with_certify(Certify::Always)).index;
  Subspace sum(n);
  for (const auto& f : c.functionals) {
    const Subspace s = stabilizer(L, f);
    if (s.dim() != idx) return false;
    sum = sum + s;
  }
  if (sum != c.fsr) return false;
  const QVector br = L.bracket(c.u, c.v);
  return sum.contains(c.u) && sum.contains(c.v) && !is_zero(br) && br == c.bracket;
}

std::optional<SearchResult> search_cp(const LieAlgebra& L, const RankPolicy& policy) {
  const std::size_t n = L.dim();
  const IndexReport idx = index(L, policy);
  if ((n + idx.index) % 2 != 0) return std::nullopt;
  const std::size_t d = (n + idx.index) / 2;
  const Subspace required = center(L) + frobenius_semiradical(L, policy).subspace;
  if (!is_abelian(L, required)) return std::nullopt;
  const auto comm = commuting_table(L);

  std::optional<SearchResult> fallback;
  auto consider = [&](const Subspace& S, int tier) {
    if (!S.contains(required) || S.dim() != d) return false;
    const CPReport r = is_cp_with_index(L, S, idx, policy);
    if (!r.is_cp) return false;
    if (r.is_ideal) {
      fallback = SearchResult{S, tier, true};
      return true;
    }
    if (!fallback) fallback = SearchResult{S, tier, false};
    return false;
  };

  for_each_abelian_subset(comm, d, [&](const std::vector<std::size_t>& subset) {
    return consider(Subspace::coordinate(n, subset), 1);
  });
  if (fallback) return fallback;
  if (d == 0) return std::nullopt;

  for_each_abelian_subset(comm, d - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<bool> in(n, false);
    for (auto s : subset) in[s] = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (in[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (in[b]) continue;
        // Need [x_a, x_s] + c [x_b, x_s] = 0 for all s, with c != 0.
        QVector lhs, rhs;
        for (auto s : subset) {
          const QVector as = to_dense(L.basis_bracket(a, s), n);
          const QVector bs = to_dense(L.basis_bracket(b, s), n);
          lhs.insert(lhs.end(), as.begin(), as.end());
          rhs.insert(rhs.end(), bs.begin(), bs.end());
        }
        std::optional<Rat> c;
        for (std::size_t k = 0; k < rhs.size(); ++k) {
          if (sgn(rhs[k]) != 0) {
            c = -lhs[k] / rhs[k];
            break;
          }
        }
        if (!c || sgn(*c) == 0) continue;
        bool ok = true;
        for (std::size_t k = 0; k < rhs.size() && ok; ++k) ok = lhs[k] + *c * rhs[k] == 0;
        if (!ok) continue;
        QVector w = unit_vector(n, a);
        w[b] = *c;
        std::vector<QVector> vs;
        for (auto s : subset) vs.push_back(unit_vector(n, s));
        vs.push_back(std::move(w));
        if (consider(Subspace::span(n, vs), 2)) return true;
      }
    }
    return false;
  });
  return fallback;
}

ChainReport verify_index_chain(const LieAlgebra& L, const std::vector<Subspace>& chain, const RankPolicy& policy) {
  ChainReport report;
  const IndexReport top = index(L, policy);
  report.levels.push_back({L.dim(), top.index, top.certified, L.is_abelian()});
  Subspace prev = Subspace::whole(L.dim());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const Subspace& S = chain[k];
    check_ambient(L, S, "chain level");
    const std::string level = "level " + std::to_string(k + 1);
    if (!prev.contains(S) || S.dim() + 1 != prev.dim()) {
      throw Error(ErrorKind::ChainGap, level + " is not a codimension-one subspace of the previous level");
    }
    if (!is_subalgebra(L, S)) throw Error(ErrorKind::NotASubalgebra, level + " is not a subalgebra");
    const IndexReport r = subalgebra_index(L, S, policy);
    report.levels.push_back({S.dim(), r.index, r.certified, is_abelian(L, S)});
    prev = S;
  }
  report.increasing = true;
  for (std::size_t k = 1; k < report.levels.size(); ++k) {
    if (report.levels[k].index != report.levels[k - 1].index + 1) report.increasing = false;
  }
  report.valid = report.increasing;
  if (!chain.empty() && report.levels.back().abelian) {
    report.final_cp = is_cp(L, chain.back(), policy);
    if (report.increasing && !report.final_cp->is_cp) report.valid = false;
  }
  return report;
}

QuotientCheckReport quotient_cp_check(const LieAlgebra& L, const std::optional<Subspace>& P, const Subspace& A,
                                      const Functional& f, const RankPolicy& policy) {
  check_ambient(L, A, "A");
  if (f.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "functional length differs from the algebra");
  if (!is_ideal(L, A)) throw Error(ErrorKind::NotAnIdeal, "A is not an ideal");
  if (P) {
    check_ambient(L, *P, "P");
    if (!P->contains(A)) throw Error(ErrorKind::PreconditionViolated, "A is not contained in P");
  }
  if (!f.vanishes_on(A)) throw Error(ErrorKind::PreconditionViolated, "f does not vanish on A");
  const IndexReport iL = index(L, policy);
  if (stabilizer(L, f).dim() != iL.index) throw Error(ErrorKind::PreconditionViolated, "f is not regular");

  const Quotient q = quotient(L, A);
  const IndexReport iQ = index(q.algebra, policy);
  QuotientCheckReport r;
  r.dim_quotient = q.algebra.dim();
  r.index_L = iL.index;
  r.index_quotient = iQ.index;
  r.formula_holds = iQ.index + A.dim() == iL.index;
  QVector g(q.projection.kept().size());
  for (std::size_t a = 0; a < g.size(); ++a) g[a] = f.coords()[q.projection.kept()[a]];
  r.induced = Functional(std::move(g));
  r.certified = iL.certified && iQ.certified;
  if (P) {
    r.p_is_witness = is_witness(L, *P, f);
    r.quotient_cp = is_cp(q.algebra, q.projection.apply(*P), policy);
  }
  return r;
}

std::string to_string(Codim1Direction d) {
  switch (d) {
    case Codim1Direction::CertifiedMinusOne: return "minus_one_certified";
    case Codim1Direction::MinusOne: return "minus_one";
    case Codim1Direction::CertifiedPlusOne: return "plus_one_certified";
    case Codim1Direction::ProbablePlusOne: return "plus_one_probable";
    case Codim1Direction::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

Codim1Report codim1_analysis(const LieAlgebra& L, const Subspace& M, const RankPolicy& policy) {
  check_ambient(L, M, "M");
  if (M.dim() + 1 != L.dim()) throw Error(ErrorKind::NotCodimOne, "M does not have codimension one");
  if (!is_subalgebra(L, M)) throw Error(ErrorKind::NotASubalgebra, "M is not a subalgebra");
  const IndexReport iL = index(L, policy);
  const IndexReport iM = subalgebra_index(L, M, policy);
  const FSRReport fsr = frobenius_semiradical(L, policy);
  Codim1Report r;
  r.index_L = iL.index;
  r.index_M = iM.index;
  r.delta = static_cast<int>(iM.index) - static_cast<int>(iL.index);
  r.dichotomy = r.delta == 1 || r.delta == -1;
  r.fsr_in_M = M.contains(fsr.subspace);
  r.fsr_converged = fsr.converged;
  r.certified = iL.certified && iM.certified;
  if (!r.dichotomy) {
    r.direction = Codim1Direction::Inconsistent;
  } else if (!r.fsr_in_M) {
    // A regular stabilizer outside M forces the index down.
    r.direction = r.delta == -1 ? Codim1Direction::CertifiedMinusOne : Codim1Direction::Inconsistent;
  } else if (r.delta == 1) {
    r.direction = fsr.converged && r.certified ? Codim1Direction::CertifiedPlusOne : Codim1Direction::ProbablePlusOne;
  } else {
    r.direction = Codim1Direction::MinusOne;
  }
  return r;
}

CentralizerReport centralizer_codim1_check(const LieAlgebra& L, const QVector& u, const RankPolicy& policy) {
  if (u.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the algebra");
  CentralizerReport r;
  r.M = centralizer(L, u);
  if (r.M.dim() + 1 != L.dim()) {
    throw Error(ErrorKind::WrongCodimension,
                "centralizer has codimension " + std::to_string(L.dim() - r.M.dim()) + ", expected 1");
  }
  const Restriction res = restrict_to(L, r.M);
  const IndexReport iL = index(L, policy);
  const IndexReport iM = index(res.algebra, policy);
  r.index_L = iL.index;
  r.index_M = iM.index;
  r.plus_one = iM.index == iL.index + 1;
  if (iL.index == center(L).dim()) r.square_integrable_transfer = iM.index == center(res.algebra).dim();

  if (auto found = search_cp(L, policy)) {
    r.cp_L = found->P;
    Subspace transfer = r.M.contains(found->P) ? found->P : found->P.intersect(r.M).with(u);
    r.cp_M_from_L_ok = is_cp(res.algebra, res.to_sub(transfer), policy).is_cp;
    r.cp_M_from_L = std::move(transfer);
  }
  if (auto found = search_cp(res.algebra, policy)) {
    std::vector<QVector> vs;
    for (const auto& c : found->P.basis_vectors()) vs.push_back(res.to_ambient(c));
    Subspace Q = Subspace::span(L.dim(), vs);
    r.cp_L_from_M_ok = is_cp(L, Q, policy).is_cp;
    r.cp_M = std::move(Q);
  }
  r.cp_equivalence = r.cp_L.has_value() == r.cp_M.has_value();
  return r;
}

AbelianIdealResult max_abelian_coordinate_ideal(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const auto comm = commuting_table(L);
  // support[i][t]: coordinates appearing in [x_i, x_t]
  std::vector<std::vector<std::vector<std::size_t>>> support(n, std::vector<std::vector<std::size_t>>(n));
  std::vector<bool> central(n, true);
  for (const auto& [key, value] : L.table()) {
    central[key.first] = central[key.second] = false;
    for (const auto& [k, c] : value) {
      support[key.first][key.second].push_back(k);
      support[key.second][key.first].push_back(k);
    }
  }
  std::vector<std::size_t> candidates;
  std::vector<bool> in(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (central[i]) in[i] = true;
    else candidates.push_back(i);
  }
  const std::size_t base = n - candidates.size();
  auto is_ideal_set = [&]() {
    for (std::size_t t = 0; t < n; ++t) {
      if (!in[t]) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (auto k : support[i][t]) {
          if (!in[k]) return false;
        }
      }
    }
    return true;
  };
  std::vector<std::size_t> chosen, best;
  bool have_best = false;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if ((!have_best || chosen.size() > best.size()) && is_ideal_set()) {
      best = chosen;
      have_best = true;
    }
    for (std::size_t p = start; p < candidates.size(); ++p) {
      if (have_best && chosen.size() + (candidates.size() - p) <= best.size()) return;
      const std::size_t i = candidates[p];
      bool ok = true;
      for (auto j : chosen) {
        if (!comm[i][j]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      in[i] = true;
      rec(p + 1);
      in[i] = false;
      chosen.pop_back();
    }
  };
  rec(0);
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < n; ++i) {
    if (central[i]) indices.push_back(i);
  }
  for (auto i : best) indices.push_back(i);
  std::sort(indices.begin(), indices.end());
  return AbelianIdealResult{base + best.size(), Subspace::coordinate(n, indices)};
}

TransferReport subalgebra_cp_transfer(const LieAlgebra& L, const Subspace& M, const Subspace& P,
                                      const RankPolicy& policy) {
  check_ambient(L, M, "M");
  check_ambient(L, P, "P");
  if (!M.contains(P)) throw Error(ErrorKind::PreconditionViolated, "P is not contained in M");
  if (!is_subalgebra(L, M)) throw Error(ErrorKind::NotASubalgebra, "M is not a subalgebra");
  const Restriction res = restrict_to(L, M);
  TransferReport r;
  r.p_cp_of_L = is_cp(L, P, policy).is_cp;
  r.p_cp_of_M = is_cp(res.algebra, res.to_sub(P), policy).is_cp;
  r.index_L = index(L, policy).index;
  r.index_M = index(res.algebra, policy).index;
  r.index_relation = r.index_M + M.dim() == r.index_L + L.dim();
  r.consistent = r.p_cp_of_L == (r.p_cp_of_M && r.index_relation);
  return r;
}

}  // namespace liecp
