#pragma once

#include <cstddef>
#include <vector>

#include "liecp/liealg/lie_algebra.hpp"
#include "liecp/liealg/subspace.hpp"

namespace liecp {

Subspace center(const LieAlgebra& L);
Subspace derived_subalgebra(const LieAlgebra& L);
/// { v : [v, u] = 0 }
Subspace centralizer(const LieAlgebra& L, const QVector& u);
/// { v : [v, S] ⊆ S }
Subspace normalizer(const LieAlgebra& L, const Subspace& S);
/// span [S, T]
Subspace bracket_span(const LieAlgebra& L, const Subspace& S, const Subspace& T);

bool is_subalgebra(const LieAlgebra& L, const Subspace& S);
bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_abelian(const LieAlgebra& L, const Subspace& S);
bool is_central(const LieAlgebra& L, const QVector& u);
bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

/// L = C^0 ⊋ C^1 = [L, L] ⊋ ... down to the point where the series stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
std::vector<Subspace> derived_series(const LieAlgebra& L);

/// A subalgebra presented as a standalone algebra on its echelon basis.
/// Labels are the basis vectors written as combinations of ambient labels.
struct Restriction {
  LieAlgebra algebra;
  Subspace subspace;

  /// Ambient vector -> coordinates in `algebra`.
  QVector to_sub(const QVector& v) const { return subspace.coordinates(v); }
  QVector to_ambient(const QVector& c) const { return subspace.from_coordinates(c); }
  Subspace to_sub(const Subspace& s) const;
};

/// Throws Error{NotASubalgebra}.
Restriction restrict_to(const LieAlgebra& L, const Subspace& S);

/// Quotient map L -> L / A. The quotient basis is the set of coordinates that
/// are not pivots of A's echelon basis, in their original order and labels.
class Projection {
 public:
  Projection() = default;
  Projection(Subspace ideal, std::vector<std::size_t> kept);

  const Subspace& ideal() const noexcept { return ideal_; }
  const std::vector<std::size_t>& kept() const noexcept { return kept_; }

  QVector apply(const QVector& v) const;
  Subspace apply(const Subspace& s) const;
  /// The coordinate lift (zero on pivot coordinates of the ideal).
  QVector lift(const QVector& q) const;
  Subspace preimage(const Subspace& s) const;

 private:
  Subspace ideal_;
  std::vector<std::size_t> kept_;
};

struct Quotient {
  LieAlgebra algebra;
  Projection projection;
};

/// Throws Error{NotAnIdeal}.
Quotient quotient(const LieAlgebra& L, const Subspace& A);

}  // namespace liecp
