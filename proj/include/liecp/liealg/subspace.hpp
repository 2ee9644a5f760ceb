#pragma once

#include <cstddef>
#include <vector>

#include "liecp/exactla/qmatrix.hpp"

namespace liecp {

/// Subspace of Q^n stored as the reduced row-echelon form of a spanning set,
/// so equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<QVector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  /// Span of the listed standard basis vectors.
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const QMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  QVector basis_vector(std::size_t k) const { return basis_.row(k); }
  std::vector<QVector> basis_vectors() const { return basis_.row_vectors(); }

  /// v minus its echelon reduction; zero exactly when v lies in the subspace.
  QVector reduce(const QVector& v) const;
  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(); v must lie in the subspace.
  QVector coordinates(const QVector& v) const;
  /// Inverse of coordinates().
  QVector from_coordinates(const QVector& c) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace with(const QVector& v) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Element of the dual space, given by its values on the basis.
class Functional {
 public:
  Functional() = default;
  explicit Functional(QVector coords) : coords_(std::move(coords)) {}

  static Functional dual_basis(std::size_t ambient_dim, std::size_t i);

  std::size_t ambient_dim() const noexcept { return coords_.size(); }
  const QVector& coords() const noexcept { return coords_; }
  Rat operator()(const QVector& v) const;
  bool vanishes_on(const Subspace& s) const;

  bool operator==(const Functional& other) const = default;

 private:
  QVector coords_;
};

}  // namespace liecp
