#include "liecp/liealg/constructors.hpp"

#include <algorithm>
#include <set>

#include "liecp/liealg/structure.hpp"

namespace liecp {

namespace {

std::vector<std::string> disambiguate(const std::vector<std::string>& taken, std::vector<std::string> labels) {
  std::set<std::string> used(taken.begin(), taken.end());
  for (auto& l : labels) {
    while (used.count(l) != 0) l += "'";
    used.insert(l);
  }
  return labels;
}

SparseVec shifted(const SparseVec& v, std::size_t offset) {
  SparseVec out;
  for (const auto& [k, c] : v) out.emplace(k + offset, c);
  return out;
}

SparseVec column_of(const QMatrix& m, std::size_t j, std::size_t offset) {
  SparseVec out;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (sgn(m(k, j)) != 0) out.emplace(k + offset, m(k, j));
  }
  return out;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace

LieAlgebra direct_product(const LieAlgebra& L1, const LieAlgebra& L2) {
  auto labels = L1.labels();
  for (auto& l : disambiguate(L1.labels(), L2.labels())) labels.push_back(std::move(l));
  LieAlgebra::Table table = L1.table();
  for (const auto& [key, value] : L2.table()) {
    table.emplace(std::make_pair(key.first + L1.dim(), key.second + L1.dim()), shifted(value, L1.dim()));
  }
  std::string name = L1.name().empty() || L2.name().empty() ? std::string() : L1.name() + "x" + L2.name();
  return LieAlgebra::from_table(std::move(labels), table, std::move(name));
}

std::vector<QMatrix> adjoint_action(const LieAlgebra& g) {
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(g.ad(unit_vector(g.dim(), i)));
  return out;
}

void check_representation(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV) {
  if (action.size() != g.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "action lists " + std::to_string(action.size()) +
                                                  " matrices for an algebra of dimension " + std::to_string(g.dim()));
  }
  for (const auto& m : action) {
    if (m.rows() != dimV || m.cols() != dimV) throw Error(ErrorKind::DimensionMismatch, "action matrix shape");
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      QMatrix expected(dimV, dimV);
      for (const auto& [k, c] : g.basis_bracket(i, j)) {
        for (std::size_t a = 0; a < dimV; ++a) {
          for (std::size_t b = 0; b < dimV; ++b) expected(a, b) += c * action[k](a, b);
        }
      }
      if (commutator(action[i], action[j]) != expected) {
        throw Error(ErrorKind::NotARepresentation,
                    "action does not respect the bracket [" + g.label(i) + ", " + g.label(j) + "]");
      }
    }
  }
}

LieAlgebra semidirect_product(const LieAlgebra& g, const std::vector<QMatrix>& action, std::size_t dimV,
                              std::vector<std::string> v_labels) {
  check_representation(g, action, dimV);
  if (v_labels.empty()) {
    for (std::size_t k = 1; k <= dimV; ++k) v_labels.push_back("v" + std::to_string(k));
  }
  if (v_labels.size() != dimV) throw Error(ErrorKind::DimensionMismatch, "module label count");
  auto labels = g.labels();
  for (auto& l : disambiguate(g.labels(), std::move(v_labels))) labels.push_back(std::move(l));
  const std::size_t n = g.dim();
  LieAlgebra::Table table = g.table();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dimV; ++k) {
      SparseVec v = column_of(action[i], k, n);
      if (!v.empty()) table.emplace(std::make_pair(i, n + k), std::move(v));
    }
  }
  return LieAlgebra::from_table(std::move(labels), table, g.name().empty() ? std::string() : g.name() + "+V");
}

bool is_derivation(const LieAlgebra& M, const QMatrix& d) {
  const std::size_t n = M.dim();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorKind::DimensionMismatch, "derivation matrix shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const QVector xi = unit_vector(n, i);
      const QVector xj = unit_vector(n, j);
      const QVector lhs = d.apply(M.bracket(xi, xj));
      const QVector rhs = add(M.bracket(d.apply(xi), xj), M.bracket(xi, d.apply(xj)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

LieAlgebra derivation_extend(const LieAlgebra& M, const QMatrix& d, std::string label) {
  if (!is_derivation(M, d)) throw Error(ErrorKind::NotADerivation, "matrix is not a derivation of the algebra");
  const std::size_t n = M.dim();
  std::vector<std::string> labels = disambiguate(M.labels(), {std::move(label)});
  for (const auto& l : M.labels()) labels.push_back(l);
  LieAlgebra::Table table;
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec v = column_of(d, j, 1);
    if (!v.empty()) table.emplace(std::make_pair(std::size_t{0}, j + 1), std::move(v));
  }
  for (const auto& [key, value] : M.table()) {
    table.emplace(std::make_pair(key.first + 1, key.second + 1), shifted(value, 1));
  }
  return LieAlgebra::from_table(std::move(labels), table, M.name().empty() ? std::string() : M.name() + "+kd");
}

LieAlgebra heisenberg_extend(const LieAlgebra& M, const QVector& z, std::size_t r) {
  if (z.size() != M.dim()) throw Error(ErrorKind::DimensionMismatch, "central vector length");
  if (is_zero(z)) throw Error(ErrorKind::ZeroVector, "heisenberg extension needs a nonzero central vector");
  if (!is_central(M, z)) throw Error(ErrorKind::NotCentral, "vector is not central");
  const std::size_t n = M.dim();
  std::vector<std::string> extra;
  for (std::size_t i = 1; i <= r; ++i) extra.push_back("s" + std::to_string(i));
  for (std::size_t i = 1; i <= r; ++i) extra.push_back("t" + std::to_string(i));
  auto labels = M.labels();
  for (auto& l : disambiguate(M.labels(), extra)) labels.push_back(std::move(l));
  LieAlgebra::Table table = M.table();
  for (std::size_t i = 0; i < r; ++i) table.emplace(std::make_pair(n + i, n + r + i), to_sparse(z));
  return LieAlgebra::from_table(std::move(labels), table, M.name().empty() ? std::string() : M.name() + "+S");
}

LieAlgebra tensor_commutative(const AssocAlgebra& A, const LieAlgebra& M) {
  if (!A.is_commutative()) throw Error(ErrorKind::NotCommutative, "tensor construction needs a commutative algebra");
  const std::size_t m = M.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < m; ++j) labels.push_back(A.dim() == 1 ? M.label(j) : A.labels()[i] + "." + M.label(j));
  }
  LieAlgebra::Table table;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t k = 0; k < A.dim(); ++k) {
      const SparseVec& ak = A.basis_product(i, k);
      if (ak.empty()) continue;
      for (const auto& [key, value] : M.table()) {
        const auto [j, l] = key;
        const std::size_t left = tensor_index(i, j, m);
        const std::size_t right = tensor_index(k, l, m);
        // [a_i x_j, a_k x_l] = a_i a_k [x_j, x_l]
        SparseVec v;
        for (const auto& [p, c] : ak) {
          for (const auto& [q, d] : value) v[tensor_index(p, q, m)] += c * d;
        }
        std::erase_if(v, [](const auto& e) { return sgn(e.second) == 0; });
        if (v.empty()) continue;
        std::size_t lo = left, hi = right;
        if (lo > hi) {
          std::swap(lo, hi);
          for (auto& [p, c] : v) c = -c;
        }
        auto& slot = table[{lo, hi}];
        for (const auto& [p, c] : v) {
          slot[p] += c;
          if (sgn(slot[p]) == 0) slot.erase(p);
        }
      }
    }
  }
  std::erase_if(table, [](const auto& e) { return e.second.empty(); });
  std::string name = A.name().empty() || M.name().empty() ? std::string() : A.name() + "(x)" + M.name();
  return LieAlgebra::from_table(std::move(labels), table, std::move(name));
}

LieAlgebra matrix_lie_algebra(const std::vector<QMatrix>& basis, std::vector<std::string> labels, std::string name) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw Error(ErrorKind::DimensionMismatch, "label count");
  if (d == 0) return LieAlgebra(std::move(labels), {}, std::move(name));
  const std::size_t rows = basis[0].rows();
  const std::size_t cols = basis[0].cols();
  const std::size_t flat = rows * cols;
  auto flatten = [&](const QMatrix& m) {
    if (m.rows() != rows || m.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix shape");
    QVector v(flat);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) v[i * cols + j] = m(i, j);
    }
    return v;
  };
  std::vector<QVector> flats;
  for (const auto& m : basis) flats.push_back(flatten(m));
  const QMatrix B = QMatrix::from_rows(flats, flat);
  const Echelon e = rref(B);
  if (e.pivots.size() != d) throw Error(ErrorKind::PreconditionViolated, "basis matrices are linearly dependent");
  QMatrix St(d, d);  // St(p, a) = B(a, pivot_p)
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t a = 0; a < d; ++a) St(p, a) = B(a, e.pivots[p]);
  }
  const QMatrix inv = *inverse(St);
  auto coordinates = [&](const QVector& w) {
    QVector wp(d);
    for (std::size_t p = 0; p < d; ++p) wp[p] = w[e.pivots[p]];
    QVector c = inv.apply(wp);
    QVector back = zero_vector(flat);
    for (std::size_t a = 0; a < d; ++a) {
      if (sgn(c[a]) != 0) axpy(back, c[a], flats[a]);
    }
    if (back != w) throw Error(ErrorKind::NotASubalgebra, "matrix span is not closed under commutators");
    return c;
  };
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      SparseVec v = to_sparse(coordinates(flatten(commutator(basis[a], basis[b]))));
      if (!v.empty()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  }
  return LieAlgebra::from_table(std::move(labels), table, std::move(name));
}

}  // namespace liecp
