#include "liecp/exactla/rank.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "liecp/error.hpp"
#include "liecp/exactla/random.hpp"

namespace liecp {

void RankPolicy::validate() const {
  if (samples < 1) throw Error(ErrorKind::InvalidPolicy, "samples must be at least 1");
  if (coeff_bound < 2) throw Error(ErrorKind::InvalidPolicy, "coefficient bound must be at least 2");
  if (attempts < 1) throw Error(ErrorKind::InvalidPolicy, "attempt cap must be at least 1");
}

bool RankPolicy::certifies(std::size_t rows, std::size_t cols) const {
  switch (certify) {
    case Certify::Always: return true;
    case Certify::Never: return false;
    case Certify::Auto: return std::max(rows, cols) <= certify_max_side;
  }
  return false;
}

RankPolicy RankPolicy::with_certify(Certify mode) const {
  RankPolicy p = *this;
  p.certify = mode;
  return p;
}

RankPolicy RankPolicy::with_seed(std::uint64_t new_seed) const {
  RankPolicy p = *this;
  p.seed = new_seed;
  return p;
}

std::size_t randomized_rank(const LinFormMatrix& m, const RankPolicy& policy) {
  policy.validate();
  const std::size_t cap = std::min(m.rows(), m.cols());
  Rng rng(policy.seed, stream::kRank);
  std::size_t best = 0;
  for (std::size_t s = 0; s < policy.samples && best < cap; ++s) {
    const QVector point = rng.integer_point(m.nvars(), policy.coeff_bound);
    best = std::max(best, rank_exact(m.evaluate(point)));
  }
  return best;
}

std::optional<std::size_t> symbolic_rank_within(const LinFormMatrix& m, std::uint64_t work_budget) {
  auto a = m.to_polys();
  std::uint64_t work = 0;
  auto charge = [&](const Poly& x, const Poly& y) {
    work += static_cast<std::uint64_t>(x.term_count()) * y.term_count();
    return work <= work_budget;
  };
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Poly prev = Poly::constant(m.nvars(), Rat(1));
  bool prev_is_one = true;

  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // Pivot search over the trailing block.
    std::size_t best_i = rows, best_j = cols;
    std::size_t best_terms = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        const std::size_t t = a[i][j].term_count();
        if (t != 0 && t < best_terms) {
          best_terms = t;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i == rows) break;
    std::swap(a[k], a[best_i]);
    if (best_j != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][best_j]);
    }

    const Poly& piv = a[k][k];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const bool lead_zero = a[i][k].is_zero();
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[i][j].is_zero() && (lead_zero || a[k][j].is_zero())) continue;
        if (!charge(piv, a[i][j])) return std::nullopt;
        Poly t = piv * a[i][j];
        if (!lead_zero && !a[k][j].is_zero()) {
          if (!charge(a[i][k], a[k][j])) return std::nullopt;
          t = t - a[i][k] * a[k][j];
        }
        if (!prev_is_one && !charge(t, prev)) return std::nullopt;
        a[i][j] = prev_is_one ? std::move(t) : exact_divide(t, prev);
      }
      a[i][k] = Poly(m.nvars());
    }
    prev = a[k][k];
    prev_is_one = prev.term_count() == 1 && prev.total_degree() == 0 && prev.terms().begin()->second == 1;
  }
  return k;
}

std::size_t symbolic_rank(const LinFormMatrix& m) {
  return *symbolic_rank_within(m, std::numeric_limits<std::uint64_t>::max());
}

GenericRank generic_rank(const LinFormMatrix& m, const RankPolicy& policy) {
  const std::size_t sampled = randomized_rank(m, policy);
  if (!policy.certifies(m.rows(), m.cols())) return GenericRank{sampled, false};
  // A full-rank specialization is already exact.
  if (sampled == std::min(m.rows(), m.cols())) return GenericRank{sampled, true};
  if (policy.certify == Certify::Always) return GenericRank{symbolic_rank(m), true};
  const auto exact = symbolic_rank_within(m, policy.certify_work_budget);
  if (!exact) return GenericRank{sampled, false};
  return GenericRank{*exact, true};
}

}  // namespace liecp
