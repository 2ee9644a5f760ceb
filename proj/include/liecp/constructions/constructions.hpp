#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liecp/exactla/rank.hpp"
#include "liecp/liealg/assoc.hpp"
#include "liecp/liealg/lie_algebra.hpp"
#include "liecp/liealg/subspace.hpp"

namespace liecp {

/// Conditions that are known to be equivalent, each computed on its own.
/// A returned report always has consistent == true: when the conditions
/// disagree they are recomputed with certification, and a remaining
/// disagreement raises Error{InconsistentConditions}.
struct EquivalenceReport {
  std::map<std::string, bool> conditions;
  bool consistent = false;
  LieAlgebra built;
  std::size_t index = 0;
  bool certified = false;

  /// The common value of the conditions.
  bool holds() const;
};

/// dim g x dim V matrix of linear forms Σ_k (x_i . v_j)_k t_k in the
/// coordinates t of f ∈ V*. Its left kernel at f is the stabilizer g(f).
LinFormMatrix action_rank_matrix(const std::vector<QMatrix>& action, std::size_t dimV);

/// L = g ⋉ V. Conditions: "cp_ideal" (V is a CP-ideal of L), "index"
/// (i(L) = dim V - dim g), "action_rank" (generic rank of the action matrix
/// is dim g) and "stabilizer" (g(f) = 0 for a sampled f ∈ V*).
/// Requires dim g <= dim V (Error{PreconditionViolated}).
EquivalenceReport semidirect_cp_report(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV,
                                       const RankPolicy& policy);

/// dim A x dim A matrix of linear forms f(e_i e_j).
LinFormMatrix pairing_matrix(const BilinearAlgebra& A);

/// L = Lie(A) ⋉ A under left multiplication. Conditions: "frobenius_algebra"
/// (the pairing matrix has full generic rank), "frobenius_lie" (i(L) = 0) and
/// "cp_ideal" (A is a CP-ideal of L). Throws Error{NoUnit} when A has no unit.
EquivalenceReport frobenius_associative_report(const AssocAlgebra& A, const RankPolicy& policy);

/// Action of g on V* given an action on V: x . f = -f ∘ x.
std::vector<QMatrix> dual_action(const std::vector<QMatrix>& action);

/// L = g ⋉ V* where g is the commutator algebra of A acting on V* dually to
/// left multiplication. Conditions: "stabilizer" (some f has trivial
/// stabilizer, i.e. a generic element is not a right zero divisor),
/// "frobenius_lie" and "cp_ideal" (V* is a CP-ideal).
EquivalenceReport lsa_frobenius_report(const LSAAlgebra& A, const RankPolicy& policy);

struct AbelianizationReport {
  LieAlgebra L1;       // (L/V) ⋉ V with the induced action
  Subspace V1;         // V inside L1 (the trailing coordinates)
  bool cp_L = false;   // V is a CP of L
  bool cp_L1 = false;  // V is a CP of L1
  std::size_t index_L = 0;
  std::size_t index_L1 = 0;
  bool consistent = false;  // cp_L == cp_L1, and equal indices when both hold
  bool certified = false;
};
/// Requires V a commutative ideal of L (Error{NotCommutativeIdeal}).
AbelianizationReport abelianization_semidirect_check(const LieAlgebra& L, const Subspace& V,
                                                     const RankPolicy& policy);

}  // namespace liecp
