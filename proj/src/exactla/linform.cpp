#include "liecp/exactla/linform.hpp"

#include <sstream>

#include "liecp/error.hpp"

namespace liecp {

LinFormMatrix::LinFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols) {}

void LinFormMatrix::add(std::size_t i, std::size_t j, std::size_t var, const Rat& c) {
  if (i >= rows_ || j >= cols_ || var >= nvars_) {
    throw Error(ErrorKind::IndexOutOfRange, "linear-form matrix entry out of range");
  }
  if (sgn(c) == 0) return;
  LinForm& form = entries_[i * cols_ + j];
  auto [it, inserted] = form.try_emplace(var, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) form.erase(it);
  }
}

void LinFormMatrix::set(std::size_t i, std::size_t j, LinForm form) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorKind::IndexOutOfRange, "linear-form matrix entry out of range");
  for (auto it = form.begin(); it != form.end();) {
    if (it->first >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
    it = sgn(it->second) == 0 ? form.erase(it) : std::next(it);
  }
  entries_[i * cols_ + j] = std::move(form);
}

QMatrix LinFormMatrix::evaluate(const QVector& point) const {
  if (point.size() != nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "point has length " + std::to_string(point.size()) +
                                                  ", matrix has " + std::to_string(nvars_) + " variables");
  }
  QMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat v(0);
      for (const auto& [var, c] : at(i, j)) v += c * point[var];
      m(i, j) = v;
    }
  }
  return m;
}

std::vector<std::vector<Poly>> LinFormMatrix::to_polys() const {
  std::vector<std::vector<Poly>> out(rows_, std::vector<Poly>(cols_, Poly(nvars_)));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = Poly::from_linear(nvars_, at(i, j));
  return out;
}

std::string to_string(const LinForm& form) {
  if (form.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [var, c] : form) {
    const Rat mag = abs(c);
    out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) out << to_string(mag) << "*";
    out << "t" << (var + 1);
    first = false;
  }
  return out.str();
}

}  // namespace liecp
