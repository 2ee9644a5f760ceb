#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecp/exactla/poly.hpp"
#include "liecp/exactla/qmatrix.hpp"

namespace liecp {

/// Matrix whose entries are linear forms in `nvars` symbolic variables.
class LinFormMatrix {
 public:
  LinFormMatrix() = default;
  LinFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }

  const LinForm& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Adds c * t_var to entry (i, j).
  void add(std::size_t i, std::size_t j, std::size_t var, const Rat& c);
  void set(std::size_t i, std::size_t j, LinForm form);

  /// Specializes every variable; throws on a length mismatch.
  QMatrix evaluate(const QVector& point) const;
  std::vector<std::vector<Poly>> to_polys() const;

  bool operator==(const LinFormMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<LinForm> entries_;
};

std::string to_string(const LinForm& form);

}  // namespace liecp
