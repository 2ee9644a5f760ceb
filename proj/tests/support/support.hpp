#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liecp/catalog/catalog.hpp"
#include "liecp/exactla/random.hpp"
#include "liecp/exactla/rank.hpp"
#include "liecp/liealg/lie_algebra.hpp"

namespace liecp::testing {

/// LIECP_TEST_SEED, default 0.
std::uint64_t test_seed();
RankPolicy test_policy();

struct Instance {
  std::string name;
  catalog::Params params;
  LieAlgebra algebra;
};
/// Every (name, params) pair with a shipped expectation.
const std::vector<Instance>& catalog_instances();

Rat random_rational(Rng& rng, std::int64_t bound = 5);
QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 3);
QMatrix random_invertible(Rng& rng, std::size_t n);
/// Invertible with few nonzero entries, so structure constants stay sparse.
QMatrix random_sparse_invertible(Rng& rng, std::size_t n);

/// Same algebra on the basis y_i = Σ_k B(k, i) x_k.
LieAlgebra change_basis(const LieAlgebra& L, const QMatrix& B, const std::string& prefix = "y");

/// A Jacobi-valid algebra derived from the catalog: a random entry, possibly
/// times a second one, possibly divided by a random ideal, on a random basis.
LieAlgebra random_perturbation(Rng& rng, std::size_t max_dim = 12);

LinFormMatrix random_linform_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t nvars,
                                    int density_percent = 50);

/// Basis-vector subsets of size k, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace liecp::testing
