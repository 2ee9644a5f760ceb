#include "liecp/constructions/constructions.hpp"

#include <optional>

#include "liecp/cp/cp.hpp"
#include "liecp/exactla/random.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/constructors.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp {

namespace {

bool all_equal(const std::map<std::string, bool>& conditions) {
  std::optional<bool> first;
  for (const auto& [name, value] : conditions) {
    if (!first) first = value;
    if (value != *first) return false;
  }
  return true;
}

std::string describe(const std::map<std::string, bool>& conditions) {
  std::string out;
  for (const auto& [name, value] : conditions) {
    if (!out.empty()) out += ", ";
    out += name + (value ? "=true" : "=false");
  }
  return out;
}

// Some sampled point of [-B, B]^n where the action matrix has rank rows().
bool sampled_full_rank(const LinFormMatrix& m, const RankPolicy& policy) {
  if (m.rows() == 0) return true;
  Rng rng(policy.seed, stream::kStabilizer);
  for (std::size_t a = 0; a < policy.attempts; ++a) {
    if (rank_exact(m.evaluate(rng.integer_point(m.nvars(), policy.coeff_bound))) == m.rows()) return true;
  }
  return false;
}

Subspace trailing(std::size_t n, std::size_t k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = n - k; i < n; ++i) idx.push_back(i);
  return Subspace::coordinate(n, idx);
}

// Evaluates `compute` and, if the conditions disagree, once more with
// certification forced before giving up.
template <typename F>
EquivalenceReport settle(const char* what, const RankPolicy& policy, F compute) {
  EquivalenceReport r = compute(policy);
  if (!all_equal(r.conditions)) {
    r = compute(policy.with_certify(Certify::Always));
    if (!all_equal(r.conditions)) {
      throw Error(ErrorKind::InconsistentConditions,
                  std::string(what) + ": equivalent conditions disagree (" + describe(r.conditions) + ")");
    }
  }
  r.consistent = true;
  return r;
}

}  // namespace

bool EquivalenceReport::holds() const { return !conditions.empty() && conditions.begin()->second; }

LinFormMatrix action_rank_matrix(const std::vector<QMatrix>& action, std::size_t dimV) {
  LinFormMatrix m(action.size(), dimV, dimV);
  for (std::size_t i = 0; i < action.size(); ++i) {
    for (std::size_t j = 0; j < dimV; ++j) {
      for (std::size_t k = 0; k < dimV; ++k) {
        if (sgn(action[i](k, j)) != 0) m.add(i, j, k, action[i](k, j));
      }
    }
  }
  return m;
}

EquivalenceReport semidirect_cp_report(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV,
                                       const RankPolicy& policy) {
  if (g.dim() > dimV) {
    throw Error(ErrorKind::PreconditionViolated, "semidirect report needs dim g <= dim V (" +
                                                     std::to_string(g.dim()) + " > " + std::to_string(dimV) + ")");
  }
  const LieAlgebra L = semidirect_product(g, action, dimV);
  const Subspace V = trailing(L.dim(), dimV);
  const LinFormMatrix m = action_rank_matrix(action, dimV);
  return settle("semidirect product", policy, [&](const RankPolicy& p) {
    EquivalenceReport r;
    r.built = L;
    const CPReport cp = is_cp(L, V, p);
    const IndexReport ir = index(L, p);
    const GenericRank gr = generic_rank(m, p);
    r.index = ir.index;
    r.conditions["cp_ideal"] = cp.is_cp && cp.is_ideal;
    r.conditions["index"] = ir.index + g.dim() == dimV;
    r.conditions["action_rank"] = gr.rank == g.dim();
    r.conditions["stabilizer"] = sampled_full_rank(m, p);
    r.certified = ir.certified && gr.certified && cp.certified;
    return r;
  });
}

LinFormMatrix pairing_matrix(const BilinearAlgebra& A) {
  const std::size_t n = A.dim();
  LinFormMatrix m(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : A.basis_product(i, j)) m.add(i, j, k, c);
    }
  }
  return m;
}

EquivalenceReport frobenius_associative_report(const AssocAlgebra& A, const RankPolicy& policy) {
  if (!A.unit()) throw Error(ErrorKind::NoUnit, "associative algebra has no unit");
  const std::size_t n = A.dim();
  const LieAlgebra L = semidirect_product(lie_of_associative(A), left_mult_action(A), n, A.labels());
  const Subspace V = trailing(L.dim(), n);
  const LinFormMatrix pairing = pairing_matrix(A);
  return settle("associative algebra", policy, [&](const RankPolicy& p) {
    EquivalenceReport r;
    r.built = L;
    const GenericRank gr = generic_rank(pairing, p);
    const IndexReport ir = index(L, p);
    const CPReport cp = is_cp(L, V, p);
    r.index = ir.index;
    r.conditions["frobenius_algebra"] = gr.rank == n;
    r.conditions["frobenius_lie"] = ir.index == 0;
    r.conditions["cp_ideal"] = cp.is_cp && cp.is_ideal;
    r.certified = gr.certified && ir.certified && cp.certified;
    return r;
  });
}

std::vector<QMatrix> dual_action(const std::vector<QMatrix>& action) {
  std::vector<QMatrix> out;
  for (const auto& m : action) out.push_back(QMatrix(m.rows(), m.cols()) - m.transpose());
  return out;
}

EquivalenceReport lsa_frobenius_report(const LSAAlgebra& A, const RankPolicy& policy) {
  const std::size_t n = A.dim();
  const LSAData data = lie_of_lsa(A);
  const std::vector<QMatrix> action = dual_action(data.action);
  std::vector<std::string> dual_labels;
  for (const auto& l : A.labels()) dual_labels.push_back(l + "*");
  const LieAlgebra L = semidirect_product(data.g, action, n, dual_labels);
  const Subspace V = trailing(L.dim(), n);
  const LinFormMatrix m = action_rank_matrix(action, n);
  return settle("left-symmetric algebra", policy, [&](const RankPolicy& p) {
    EquivalenceReport r;
    r.built = L;
    const IndexReport ir = index(L, p);
    const CPReport cp = is_cp(L, V, p);
    r.index = ir.index;
    r.conditions["stabilizer"] = sampled_full_rank(m, p);
    r.conditions["frobenius_lie"] = ir.index == 0;
    r.conditions["cp_ideal"] = cp.is_cp && cp.is_ideal;
    r.certified = ir.certified && cp.certified;
    return r;
  });
}

AbelianizationReport abelianization_semidirect_check(const LieAlgebra& L, const Subspace& V,
                                                     const RankPolicy& policy) {
  if (V.ambient_dim() != L.dim() || !is_ideal(L, V) || !is_abelian(L, V)) {
    throw Error(ErrorKind::NotCommutativeIdeal, "subspace is not a commutative ideal");
  }
  const Quotient Q = quotient(L, V);
  const std::size_t k = V.dim();
  const auto vb = V.basis_vectors();
  std::vector<QMatrix> action;
  for (std::size_t a = 0; a < Q.algebra.dim(); ++a) {
    const QVector x = Q.projection.lift(unit_vector(Q.algebra.dim(), a));
    QMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const QVector c = V.coordinates(L.bracket(x, vb[j]));
      for (std::size_t i = 0; i < k; ++i) m(i, j) = c[i];
    }
    action.push_back(std::move(m));
  }
  std::vector<std::string> v_labels;
  for (const auto& v : vb) v_labels.push_back(format_combination(v, L.labels()));

  AbelianizationReport r;
  r.L1 = semidirect_product(Q.algebra, action, k, v_labels);
  r.V1 = trailing(r.L1.dim(), k);
  auto run = [&](const RankPolicy& p) {
    const CPReport a = is_cp(L, V, p);
    const CPReport b = is_cp(r.L1, r.V1, p);
    const IndexReport ia = index(L, p);
    const IndexReport ib = index(r.L1, p);
    r.cp_L = a.is_cp;
    r.cp_L1 = b.is_cp;
    r.index_L = ia.index;
    r.index_L1 = ib.index;
    r.consistent = r.cp_L == r.cp_L1 && (!r.cp_L || r.index_L == r.index_L1);
    r.certified = a.certified && b.certified && ia.certified && ib.certified;
  };
  run(policy);
  if (!r.consistent) run(policy.with_certify(Certify::Always));
  return r;
}

}  // namespace liecp
