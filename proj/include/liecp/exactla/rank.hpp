#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "liecp/exactla/linform.hpp"

namespace liecp {

enum class Certify {
  Auto,    // certify when max(rows, cols) <= certify_max_side, within the work budget
  Always,
  Never,
};

/// Controls every randomized computation in the library. All randomness is
/// derived from `seed`; identical policies give identical results.
struct RankPolicy {
  std::size_t samples = 5;
  std::int64_t coeff_bound = 1'000'000;
  Certify certify = Certify::Auto;
  std::size_t certify_max_side = 12;
  /// Auto only: symbolic elimination is abandoned (and the sampled rank
  /// reported uncertified) once it has multiplied this many monomial pairs.
  /// Dense inputs hit this long before sparse ones of the same size.
  std::uint64_t certify_work_budget = 2'000'000;
  std::uint64_t seed = 0;
  /// Cap on draws when searching for a functional with a property
  /// (regular, witness of a polarization, trivial stabilizer).
  std::size_t attempts = 64;

  /// Throws Error{InvalidPolicy} unless samples >= 1, coeff_bound >= 2, attempts >= 1.
  void validate() const;
  bool certifies(std::size_t rows, std::size_t cols) const;
  RankPolicy with_certify(Certify mode) const;
  RankPolicy with_seed(std::uint64_t new_seed) const;
};

struct GenericRank {
  std::size_t rank = 0;
  bool certified = false;
};

/// Rank over the field of rational functions in the matrix variables.
///
/// The randomized part takes the maximum exact rank over `samples` integer
/// points of [-B, B]^nvars; every specialization is a lower bound, and a
/// nonzero r-minor of degree <= r vanishes at a uniform point with
/// probability <= r / (2B + 1). When certification applies, the rank is
/// recomputed by fraction-free elimination over polynomial entries and that
/// exact value is returned.
GenericRank generic_rank(const LinFormMatrix& m, const RankPolicy& policy);

/// Maximum specialization rank only (no certification).
std::size_t randomized_rank(const LinFormMatrix& m, const RankPolicy& policy);

/// Same elimination, giving up once more than work_budget monomial products
/// have been formed.
std::optional<std::size_t> symbolic_rank_within(const LinFormMatrix& m, std::uint64_t work_budget);

/// Exact rank by Bareiss elimination with exact polynomial division.
/// Pivot: fewest terms, ties broken by lowest (row, col).
std::size_t symbolic_rank(const LinFormMatrix& m);

}  // namespace liecp
