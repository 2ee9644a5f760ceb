#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecp/exactla/rank.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/lie_algebra.hpp"
#include "liecp/liealg/subspace.hpp"

namespace liecp {

struct CPReport {
  bool is_cp = false;
  bool is_ideal = false;
  bool abelian_subalgebra = false;
  std::size_t dim_P = 0;
  std::size_t index = 0;
  /// (dim L + index) / 2
  std::size_t target_dim = 0;
  /// Only evaluated for abelian subalgebras.
  std::optional<bool> dimension_condition;
  std::optional<bool> rank_condition;
  std::size_t rank = 0;  // generic rank of ([h_i, x_j]) when evaluated
  bool certified = false;
  /// The two conditions disagreed under sampling and were recomputed exactly.
  bool rechecked = false;
};

/// Tests whether P is a commutative polarization by the dimension criterion
/// and by the rank criterion rank ([h_i, x_j]) = dim L - dim P, insisting that
/// they agree. Throws Error{InconsistentConditions} if they still disagree
/// after an exact recomputation.
CPReport is_cp(const LieAlgebra& L, const Subspace& P, const RankPolicy& policy);

/// dim P x dim L matrix of linear forms Σ_k ([h_i, x_j])_k t_k.
LinFormMatrix cp_rank_matrix(const LieAlgebra& L, const Subspace& P);

/// f with P^f = P (such f is regular), sampled from [-B, B]^n. Absent when
/// none turns up within policy.attempts draws. Throws if P is not an abelian
/// subalgebra.
std::optional<Functional> cp_witness_functional(const LieAlgebra& L, const Subspace& P, const RankPolicy& policy);
/// P^f == P, exactly.
bool is_witness(const LieAlgebra& L, const Subspace& P, const Functional& f);

enum class CertificateKind { FsrNoncommutative, InvariantFormNonabelian };
std::string to_string(CertificateKind kind);

struct NoCPCertificate {
  CertificateKind kind = CertificateKind::FsrNoncommutative;
  // FsrNoncommutative: u, v lie in the span of the stabilizers of the listed
  // regular functionals and [u, v] != 0.
  std::vector<Functional> functionals;
  Subspace fsr;
  QVector u, v, bracket;
  // InvariantFormNonabelian: an invariant, symmetric, nondegenerate form.
  QVector form_point;
  QMatrix form;
};

/// Every certificate kind that fires (possibly none). Requires L nonabelian.
std::vector<NoCPCertificate> no_cp_certificates(const LieAlgebra& L, const RankPolicy& policy);
std::optional<NoCPCertificate> no_cp_certificate(const LieAlgebra& L, const RankPolicy& policy);
/// Re-checks the evidence from scratch.
bool verify_certificate(const LieAlgebra& L, const NoCPCertificate& c, const RankPolicy& policy);

struct SearchResult {
  Subspace P;
  int tier = 1;  // 1: coordinate span, 2: coordinate span plus x_a + c x_b
  bool is_ideal = false;
};

/// Looks for a CP among coordinate spans of dimension (dim L + i(L)) / 2 that
/// contain the center and the sampled semiradical, then among spans of one
/// fewer basis vector plus one combination x_a + c x_b. Ideals are preferred,
/// then the lexicographically first basis subset. Absence proves nothing.
std::optional<SearchResult> search_cp(const LieAlgebra& L, const RankPolicy& policy);

struct ChainLevel {
  std::size_t dim = 0;
  std::size_t index = 0;
  bool certified = false;
  bool abelian = false;
};
struct ChainReport {
  std::vector<ChainLevel> levels;  // levels[0] is L itself
  bool increasing = false;         // every descent raises the index by exactly one
  std::optional<CPReport> final_cp;
  bool valid = false;
};
/// Chain L ⊋ L_1 ⊋ ... with each level of codimension one in the previous.
/// Throws Error{NotASubalgebra} or Error{ChainGap} naming the level.
ChainReport verify_index_chain(const LieAlgebra& L, const std::vector<Subspace>& chain, const RankPolicy& policy);

struct QuotientCheckReport {
  std::size_t dim_quotient = 0;
  std::size_t index_L = 0;
  std::size_t index_quotient = 0;
  bool formula_holds = false;  // i(L/A) = i(L) - dim A
  std::optional<bool> p_is_witness;  // P^f = P
  std::optional<CPReport> quotient_cp;
  Functional induced;  // g with g∘π = f
  bool certified = false;
};
/// Requires A an ideal, f regular with f(A) = 0 and, when P is given, A ⊆ P.
/// Each violated precondition raises Error{PreconditionViolated} (or NotAnIdeal).
QuotientCheckReport quotient_cp_check(const LieAlgebra& L, const std::optional<Subspace>& P, const Subspace& A,
                                      const Functional& f, const RankPolicy& policy);

/// CertifiedMinusOne: a sampled regular stabilizer leaves M. MinusOne: the
/// computed indices drop but every sampled stabilizer lies in M.
enum class Codim1Direction { CertifiedMinusOne, MinusOne, CertifiedPlusOne, ProbablePlusOne, Inconsistent };
std::string to_string(Codim1Direction d);

struct Codim1Report {
  std::size_t index_L = 0;
  std::size_t index_M = 0;
  int delta = 0;
  bool dichotomy = false;  // |i(M) - i(L)| == 1
  bool fsr_in_M = false;
  bool fsr_converged = false;
  Codim1Direction direction = Codim1Direction::Inconsistent;
  bool certified = false;
};
/// Throws Error{NotCodimOne} or Error{NotASubalgebra}.
Codim1Report codim1_analysis(const LieAlgebra& L, const Subspace& M, const RankPolicy& policy);

struct CentralizerReport {
  Subspace M;
  std::size_t index_L = 0;
  std::size_t index_M = 0;
  bool plus_one = false;
  std::optional<bool> square_integrable_transfer;  // set when L is square integrable
  std::optional<Subspace> cp_L;
  std::optional<Subspace> cp_M_from_L;  // P or (P ∩ M) + ku
  std::optional<bool> cp_M_from_L_ok;
  std::optional<Subspace> cp_M;
  std::optional<bool> cp_L_from_M_ok;
  bool cp_equivalence = false;  // L has a found CP iff M does
};
/// Throws Error{WrongCodimension} unless C(u) has codimension one.
CentralizerReport centralizer_codim1_check(const LieAlgebra& L, const QVector& u, const RankPolicy& policy);

struct AbelianIdealResult {
  std::size_t dim = 0;
  Subspace ideal;
};
/// Largest abelian ideal spanned by basis vectors; ties go to the
/// lexicographically first basis subset.
AbelianIdealResult max_abelian_coordinate_ideal(const LieAlgebra& L);

struct TransferReport {
  bool p_cp_of_L = false;
  bool p_cp_of_M = false;
  std::size_t index_L = 0;
  std::size_t index_M = 0;
  bool index_relation = false;  // i(M) = i(L) + dim L - dim M
  bool consistent = false;      // P CP of L <=> (P CP of M and relation)
};
/// Requires P ⊆ M ⊆ L with M a subalgebra (Error{PreconditionViolated} /
/// Error{NotASubalgebra}).
TransferReport subalgebra_cp_transfer(const LieAlgebra& L, const Subspace& M, const Subspace& P,
                                      const RankPolicy& policy);

}  // namespace liecp
