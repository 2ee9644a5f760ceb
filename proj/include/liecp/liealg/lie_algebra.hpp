#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liecp/error.hpp"
#include "liecp/exactla/qmatrix.hpp"

namespace liecp {

/// Sparse vector: basis index -> nonzero coefficient.
using SparseVec = std::map<std::size_t, Rat>;

QVector to_dense(const SparseVec& v, std::size_t n);
SparseVec to_sparse(const QVector& v);

/// One structure-constant entry [x_lhs, x_rhs] = value, with lhs < rhs.
struct BracketTerm {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  SparseVec value;
};

/// Raised when the Jacobi identity fails; carries the offending basis
/// triple and its (nonzero) defect vector.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, SparseVec defect, const std::string& message);

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }
  const SparseVec& defect() const noexcept { return defect_; }

 private:
  std::size_t i_, j_, k_;
  SparseVec defect_;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labelled basis. Only pairs i < j are stored; antisymmetry is implicit.
/// Construction validates labels, indices and the Jacobi identity on every
/// basis triple, so every LieAlgebra value is a genuine Lie algebra.
class LieAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> labels, const std::vector<BracketTerm>& brackets, std::string name = {});

  /// Builds from a complete table (pairs i < j); zero entries are dropped.
  static LieAlgebra from_table(std::vector<std::string> labels, const Table& table, std::string name = {});

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const Table& table() const noexcept { return table_; }

  LieAlgebra renamed(std::string name) const;

  /// [x_i, x_j] for arbitrary i, j.
  SparseVec basis_bracket(std::size_t i, std::size_t j) const;
  QVector bracket(const QVector& u, const QVector& v) const;
  /// Matrix of ad u; column j is [u, x_j].
  QMatrix ad(const QVector& u) const;
  bool is_abelian() const noexcept { return table_.empty(); }

  bool operator==(const LieAlgebra& other) const;

 private:
  void validate_jacobi() const;

  std::string name_;
  std::vector<std::string> labels_;
  Table table_;
};

/// Vector as a label combination, e.g. "a-b" or "2*x1+1/2*x3"; "0" for zero.
std::string format_combination(const QVector& v, const std::vector<std::string>& labels);

/// Inverse of format_combination. Terms are "[coeff][*]label" joined by + or -,
/// e.g. "a-b", "2e1", "1/2*c". A term that is itself a label always wins.
/// Throws Error{ParseError} on unknown labels or malformed coefficients.
QVector parse_combination(std::string_view text, const std::vector<std::string>& labels);

}  // namespace liecp
