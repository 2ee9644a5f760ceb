#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "liecp/exactla/rank.hpp"
#include "liecp/liealg/lie_algebra.hpp"
#include "liecp/liealg/subspace.hpp"

namespace liecp {

/// n x n matrix with entry (i, j) = Σ_k c_ij^k t_k.
LinFormMatrix bracket_matrix(const LieAlgebra& L);

struct IndexReport {
  std::size_t index = 0;
  std::size_t rank = 0;
  bool certified = false;
  std::uint64_t seed = 0;
};

/// dim L - generic rank of the bracket matrix.
IndexReport index(const LieAlgebra& L, const RankPolicy& policy);
/// Index of a subalgebra S viewed as a Lie algebra in its own right.
IndexReport subalgebra_index(const LieAlgebra& L, const Subspace& S, const RankPolicy& policy);

/// (B_f)_ij = f([x_i, x_j]).
QMatrix Bf_matrix(const LieAlgebra& L, const Functional& f);
/// L(f) = kernel of B_f.
Subspace stabilizer(const LieAlgebra& L, const Functional& f);
/// S^f = { x : f([x, s]) = 0 for all s in S }.
Subspace perp(const LieAlgebra& L, const Subspace& S, const Functional& f);

bool is_regular(const LieAlgebra& L, const Functional& f, const RankPolicy& policy);
/// Draws integer functionals from [-B, B]^n until one is regular.
/// Throws Error{SamplingExhausted} after policy.attempts draws.
Functional sample_regular(const LieAlgebra& L, const RankPolicy& policy);
/// Same with a precomputed index.
Functional sample_regular(const LieAlgebra& L, std::size_t index_value, const RankPolicy& policy);

struct FSRReport {
  Subspace subspace;
  bool converged = false;
  std::size_t samples_used = 0;
  std::vector<Functional> functionals;  // the regular functionals whose stabilizers were summed
};

inline constexpr std::size_t kFsrStableRounds = 3;
inline constexpr std::size_t kFsrMaxSamples = 64;

/// Sum of stabilizers of sampled regular functionals. Always a subspace of the
/// true semiradical; sampling stops once the span has not grown for
/// kFsrStableRounds consecutive samples (converged) or after kFsrMaxSamples.
FSRReport frobenius_semiradical(const LieAlgebra& L, const RankPolicy& policy);

/// All invariant symmetric bilinear forms, b([x, y], w) + b(y, [x, w]) = 0,
/// as one symmetric matrix of linear forms in `params` free parameters.
struct InvariantForms {
  std::size_t params = 0;
  LinFormMatrix forms;
  std::vector<QMatrix> basis;  // one symmetric matrix per parameter
};
InvariantForms invariant_symmetric_forms(const LieAlgebra& L);

bool has_nondeg_invariant_form(const LieAlgebra& L, const RankPolicy& policy);
/// A concrete nondegenerate invariant form (parameter point and matrix), if any.
struct FormWitness {
  QVector point;
  QMatrix matrix;
};
std::optional<FormWitness> nondeg_invariant_form(const LieAlgebra& L, const RankPolicy& policy);
bool is_invariant_form(const LieAlgebra& L, const QMatrix& b);

bool is_square_integrable(const LieAlgebra& L, const RankPolicy& policy);
bool is_frobenius(const LieAlgebra& L, const RankPolicy& policy);

}  // namespace liecp
