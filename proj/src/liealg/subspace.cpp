#include "liecp/liealg/subspace.hpp"

#include <string>

#include "liecp/error.hpp"

namespace liecp {

namespace {

void check_ambient(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorKind::AmbientMismatch,
                "ambient dimension " + std::to_string(expected) + " vs " + std::to_string(got));
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  Echelon e = rref(QMatrix::from_rows(vectors, ambient_dim));
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMatrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<QVector> vs;
  for (auto i : indices) {
    if (i >= ambient_dim) throw Error(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(i));
    vs.push_back(unit_vector(ambient_dim, i));
  }
  return span(ambient_dim, vs);
}

QVector Subspace::reduce(const QVector& v) const {
  check_ambient(ambient_, v.size());
  QVector r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rat c = r[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      const Rat& b = basis_(k, j);
      if (sgn(b) != 0) r[j] -= c * b;
    }
  }
  return r;
}

bool Subspace::contains(const QVector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(ambient_, other.ambient_);
  for (std::size_t k = 0; k < other.dim(); ++k) {
    if (!contains(other.basis_vector(k))) return false;
  }
  return true;
}

QVector Subspace::coordinates(const QVector& v) const {
  if (!contains(v)) throw Error(ErrorKind::PreconditionViolated, "vector does not lie in the subspace");
  QVector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

QVector Subspace::from_coordinates(const QVector& c) const {
  if (c.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  QVector v = zero_vector(ambient_);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_(k, j)) != 0) v[j] += c[k] * basis_(k, j);
    }
  }
  return v;
}

Subspace Subspace::operator+(const Subspace& other) const {
  check_ambient(ambient_, other.ambient_);
  auto vs = basis_vectors();
  for (auto& v : other.basis_vectors()) vs.push_back(std::move(v));
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_ambient(ambient_, other.ambient_);
  const std::size_t d1 = dim();
  const std::size_t d2 = other.dim();
  QMatrix m(ambient_, d1 + d2);
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t i = 0; i < d1; ++i) m(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < d2; ++i) m(j, d1 + i) = -other.basis_(i, j);
  }
  std::vector<QVector> vs;
  for (const auto& sol : kernel(m)) {
    QVector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < d1; ++i) {
      if (sgn(sol[i]) != 0) axpy(v, sol[i], basis_vector(i));
    }
    vs.push_back(std::move(v));
  }
  return span(ambient_, vs);
}

Subspace Subspace::with(const QVector& v) const {
  auto vs = basis_vectors();
  vs.push_back(v);
  return span(ambient_, vs);
}

Functional Functional::dual_basis(std::size_t ambient_dim, std::size_t i) {
  return Functional(unit_vector(ambient_dim, i));
}

Rat Functional::operator()(const QVector& v) const { return dot(coords_, v); }

bool Functional::vanishes_on(const Subspace& s) const {
  if (s.ambient_dim() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "functional vs subspace");
  for (std::size_t k = 0; k < s.dim(); ++k) {
    if (sgn((*this)(s.basis_vector(k))) != 0) return false;
  }
  return true;
}

}  // namespace liecp
