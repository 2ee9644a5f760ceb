#include "liecp/liealg/assoc.hpp"

#include <set>
#include <sstream>

namespace liecp {

namespace {

void accumulate(SparseVec& acc, const Rat& s, const SparseVec& v) {
  for (const auto& [k, c] : v) {
    Rat& slot = acc[k];
    slot += s * c;
    if (sgn(slot) == 0) acc.erase(k);
  }
}

std::string triple_message(const std::string& what, const std::vector<std::string>& labels, std::size_t i,
                           std::size_t j, std::size_t k, const SparseVec& defect) {
  std::ostringstream msg;
  msg << what << " fails on (" << labels[i] << ", " << labels[j] << ", " << labels[k] << "): defect "
      << format_combination(to_dense(defect, labels.size()), labels);
  return msg.str();
}

}  // namespace

BilinearAlgebra::BilinearAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products,
                                 std::string name)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::ParseError, "empty basis label");
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "basis label '" + l + "' repeated");
  }
  table_.assign(n * n, SparseVec{});
  std::vector<bool> given(n * n, false);
  for (const auto& p : products) {
    if (p.lhs >= n || p.rhs >= n) throw Error(ErrorKind::IndexOutOfRange, "product pair index");
    if (given[p.lhs * n + p.rhs]) {
      throw Error(ErrorKind::DuplicatePair, "product " + labels_[p.lhs] + "*" + labels_[p.rhs] + " given twice");
    }
    given[p.lhs * n + p.rhs] = true;
    for (const auto& [k, c] : p.value) {
      if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "product term index");
      if (sgn(c) != 0) table_[p.lhs * n + p.rhs].emplace(k, c);
    }
  }
}

std::vector<ProductTerm> BilinearAlgebra::products() const {
  std::vector<ProductTerm> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!basis_product(i, j).empty()) out.push_back({i, j, basis_product(i, j)});
    }
  }
  return out;
}

QVector BilinearAlgebra::multiply(const QVector& a, const QVector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw Error(ErrorKind::DimensionMismatch, "product operand length");
  QVector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rat s = a[i] * b[j];
      for (const auto& [k, c] : basis_product(i, j)) out[k] += s * c;
    }
  }
  return out;
}

QMatrix BilinearAlgebra::left_mult(std::size_t i) const {
  const std::size_t n = dim();
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [k, c] : basis_product(i, j)) m(k, j) = c;
  }
  return m;
}

bool BilinearAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (basis_product(i, j) != basis_product(j, i)) return false;
    }
  }
  return true;
}

std::optional<QVector> BilinearAlgebra::find_unit() const {
  const std::size_t n = dim();
  // u e_j = e_j and e_j u = e_j, coordinate by coordinate.
  QMatrix m(2 * n * n, n);
  QVector rhs(2 * n * n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t r1 = j * n + k;
      const std::size_t r2 = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        auto left = basis_product(i, j).find(k);
        if (left != basis_product(i, j).end()) m(r1, i) = left->second;
        auto right = basis_product(j, i).find(k);
        if (right != basis_product(j, i).end()) m(r2, i) = right->second;
      }
      if (j == k) rhs[r1] = rhs[r2] = 1;
    }
  }
  if (n == 0) return std::nullopt;
  return solve_linear_system(m, rhs);
}

AssocAlgebra::AssocAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products,
                           std::string name, std::optional<QVector> unit)
    : BilinearAlgebra(std::move(labels), products, std::move(name)) {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec defect;
        for (const auto& [a, c] : basis_product(i, j)) accumulate(defect, c, basis_product(a, k));
        for (const auto& [a, c] : basis_product(j, k)) accumulate(defect, -c, basis_product(i, a));
        if (!defect.empty()) {
          throw Error(ErrorKind::NotAssociative, triple_message("associativity", labels_, i, j, k, defect));
        }
      }
    }
  }
  if (unit) {
    if (unit->size() != n) throw Error(ErrorKind::DimensionMismatch, "unit vector length");
    for (std::size_t j = 0; j < n; ++j) {
      const QVector e = unit_vector(n, j);
      if (multiply(*unit, e) != e || multiply(e, *unit) != e) {
        throw Error(ErrorKind::NoUnit, "supplied unit is not a two-sided identity");
      }
    }
    unit_ = std::move(unit);
  } else {
    unit_ = find_unit();
  }
}

LSAAlgebra::LSAAlgebra(std::vector<std::string> labels, const std::vector<ProductTerm>& products, std::string name)
    : BilinearAlgebra(std::move(labels), products, std::move(name)) {
  const std::size_t n = dim();
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    // a(bc) - (ab)c
    SparseVec out;
    for (const auto& [m, x] : basis_product(b, c)) accumulate(out, x, basis_product(a, m));
    for (const auto& [m, x] : basis_product(a, b)) accumulate(out, -x, basis_product(m, c));
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec defect = assoc(i, j, k);
        accumulate(defect, Rat(-1), assoc(j, i, k));
        if (!defect.empty()) {
          throw Error(ErrorKind::NotLeftSymmetric, triple_message("left-symmetric identity", labels_, i, j, k, defect));
        }
      }
    }
  }
}

LSAAlgebra LSAAlgebra::from(const BilinearAlgebra& a) { return LSAAlgebra(a.labels(), a.products(), a.name()); }

LieAlgebra lie_of_associative(const AssocAlgebra& A) {
  LieAlgebra::Table table;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      SparseVec v = A.basis_product(i, j);
      accumulate(v, Rat(-1), A.basis_product(j, i));
      if (!v.empty()) table.emplace(std::make_pair(i, j), std::move(v));
    }
  }
  return LieAlgebra::from_table(A.labels(), table, A.name());
}

std::vector<QMatrix> left_mult_action(const BilinearAlgebra& A) {
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < A.dim(); ++i) out.push_back(A.left_mult(i));
  return out;
}

LSAData lie_of_lsa(const LSAAlgebra& A) {
  LieAlgebra::Table table;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      SparseVec v = A.basis_product(i, j);
      accumulate(v, Rat(-1), A.basis_product(j, i));
      if (!v.empty()) table.emplace(std::make_pair(i, j), std::move(v));
    }
  }
  return LSAData{LieAlgebra::from_table(A.labels(), table, A.name()), left_mult_action(A)};
}

AssocAlgebra truncated_polynomial(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "k[t]/(t^m) needs m >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<ProductTerm> products;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) products.push_back({i, j, {{i + j, Rat(1)}}});
  }
  return AssocAlgebra(labels, products, "k[t]/(t^" + std::to_string(m) + ")");
}

AssocAlgebra matrix_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  }
  std::vector<ProductTerm> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) products.push_back({i * n + j, j * n + l, {{i * n + l, Rat(1)}}});
    }
  }
  return AssocAlgebra(labels, products, "M" + std::to_string(n));
}

AssocAlgebra square_zero_extension(std::size_t k) {
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<ProductTerm> products{{0, 0, {{0, Rat(1)}}}};
  for (std::size_t i = 1; i <= k; ++i) {
    products.push_back({0, i, {{i, Rat(1)}}});
    products.push_back({i, 0, {{i, Rat(1)}}});
  }
  return AssocAlgebra(labels, products, "k+V" + std::to_string(k));
}

LSAAlgebra zero_product(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return LSAAlgebra(labels, {}, "zero" + std::to_string(n));
}

}  // namespace liecp
