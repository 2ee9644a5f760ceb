#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecp/exactla/rational.hpp"

namespace liecp {

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  /// All rows must have the same length; an empty list yields 0 x cols.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;
  std::vector<QVector> row_vectors() const;

  /// this * v
  QVector apply(const QVector& v) const;
  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix operator+(const QMatrix& other) const;
  bool is_zero() const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank_exact(const QMatrix& m);

struct Echelon {
  QMatrix reduced;                  // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan reduced row-echelon form with leading-1 pivots.
Echelon rref(const QMatrix& m);

/// Reduced-echelon basis of { v : m v = 0 }.
std::vector<QVector> kernel(const QMatrix& m);

/// One solution of m v = rhs, or nullopt when inconsistent.
std::optional<QVector> solve_linear_system(const QMatrix& m, const QVector& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

}  // namespace liecp
