#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecp/liealg/lie_algebra.hpp"

namespace liecp {

/// e_lhs e_rhs = value; any ordered pair may appear once.
struct ProductTerm {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  SparseVec value;
};

/// Bilinear algebra given by a full table of structure constants.
class BilinearAlgebra {
 public:
  BilinearAlgebra() = default;
  BilinearAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products, std::string name);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<ProductTerm> products() const;

  const SparseVec& basis_product(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
  QVector multiply(const QVector& a, const QVector& b) const;
  /// Column j is e_i e_j.
  QMatrix left_mult(std::size_t i) const;
  bool is_commutative() const;
  /// Two-sided identity if one exists (solved exactly).
  std::optional<QVector> find_unit() const;

  bool operator==(const BilinearAlgebra& other) const = default;

 protected:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;  // dim x dim, row-major
};

/// Associative algebra; associativity is checked on every basis triple.
class AssocAlgebra : public BilinearAlgebra {
 public:
  AssocAlgebra() = default;
  /// Throws Error{NotAssociative}; a supplied unit must be two-sided (Error{NoUnit}).
  AssocAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products, std::string name = {},
               std::optional<QVector> unit = std::nullopt);

  const std::optional<QVector>& unit() const noexcept { return unit_; }

 private:
  std::optional<QVector> unit_;
};

/// Left-symmetric algebra: a(bc) - (ab)c = b(ac) - (ba)c on all basis triples.
class LSAAlgebra : public BilinearAlgebra {
 public:
  LSAAlgebra() = default;
  /// Throws Error{NotLeftSymmetric} naming the triple and defect.
  LSAAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products, std::string name = {});

  static LSAAlgebra from(const BilinearAlgebra& a);
};

/// Commutator algebra [a, b] = ab - ba.
LieAlgebra lie_of_associative(const AssocAlgebra& A);
/// Matrices of b -> e_i b.
std::vector<QMatrix> left_mult_action(const BilinearAlgebra& A);

struct LSAData {
  LieAlgebra g;
  std::vector<QMatrix> action;  // left multiplication on V = A
};
LSAData lie_of_lsa(const LSAAlgebra& A);

/// k[t]/(t^m) on 1, t, ..., t^(m-1).
AssocAlgebra truncated_polynomial(std::size_t m);
/// Full matrix algebra on E_ij.
AssocAlgebra matrix_algebra(std::size_t n);
/// k ⊕ V with V^2 = 0, e.g. k[x,y]/(x^2,xy,y^2) for k = 2.
AssocAlgebra square_zero_extension(std::size_t k);
/// Zero product on k^n (not unital).
LSAAlgebra zero_product(std::size_t n);

}  // namespace liecp
