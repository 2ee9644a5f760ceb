#include "liecp/liealg/structure.hpp"

#include <algorithm>

namespace liecp {

namespace {

void check_ambient(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) {
    throw Error(ErrorKind::AmbientMismatch, "subspace lives in dimension " + std::to_string(S.ambient_dim()) +
                                                ", algebra has dimension " + std::to_string(L.dim()));
  }
}

// Rows a with a . s = 0 for every s in S.
std::vector<QVector> annihilator(const Subspace& S) {
  if (S.dim() == 0) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < S.ambient_dim(); ++i) all.push_back(unit_vector(S.ambient_dim(), i));
    return all;
  }
  return kernel(S.basis());
}

Subspace kernel_of_stack(std::size_t n, const std::vector<QVector>& rows) {
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, kernel(QMatrix::from_rows(rows, n)));
}

}  // namespace

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix a = L.ad(unit_vector(n, i));
    for (std::size_t r = 0; r < n; ++r) {
      QVector row = a.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return kernel_of_stack(n, rows);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  std::vector<QVector> vs;
  for (const auto& [key, value] : L.table()) vs.push_back(to_dense(value, L.dim()));
  return Subspace::span(L.dim(), vs);
}

Subspace centralizer(const LieAlgebra& L, const QVector& u) {
  return kernel_of_stack(L.dim(), L.ad(u).row_vectors());
}

Subspace normalizer(const LieAlgebra& L, const Subspace& S) {
  check_ambient(L, S);
  const std::size_t n = L.dim();
  const auto ann = annihilator(S);
  std::vector<QVector> rows;
  for (std::size_t k = 0; k < S.dim(); ++k) {
    // a . [v, s] = -(a^T ad s) v
    const QMatrix ads = L.ad(S.basis_vector(k));
    const QMatrix adsT = ads.transpose();
    for (const auto& a : ann) {
      QVector row = adsT.apply(a);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  return kernel_of_stack(n, rows);
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& S, const Subspace& T) {
  check_ambient(L, S);
  check_ambient(L, T);
  std::vector<QVector> vs;
  const auto sb = S.basis_vectors();
  const auto tb = T.basis_vectors();
  for (const auto& s : sb) {
    for (const auto& t : tb) {
      QVector b = L.bracket(s, t);
      if (!is_zero(b)) vs.push_back(std::move(b));
    }
  }
  return Subspace::span(L.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
  check_ambient(L, S);
  const auto sb = S.basis_vectors();
  for (std::size_t a = 0; a < sb.size(); ++a) {
    for (std::size_t b = a + 1; b < sb.size(); ++b) {
      if (!S.contains(L.bracket(sb[a], sb[b]))) return false;
    }
  }
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  check_ambient(L, S);
  const std::size_t n = L.dim();
  for (const auto& s : S.basis_vectors()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!S.contains(L.bracket(unit_vector(n, i), s))) return false;
    }
  }
  return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& S) {
  check_ambient(L, S);
  const auto sb = S.basis_vectors();
  for (std::size_t a = 0; a < sb.size(); ++a) {
    for (std::size_t b = a + 1; b < sb.size(); ++b) {
      if (!is_zero(L.bracket(sb[a], sb[b]))) return false;
    }
  }
  return true;
}

bool is_central(const LieAlgebra& L, const QVector& u) { return L.ad(u).is_zero(); }

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace whole = Subspace::whole(L.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(L, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::whole(L.dim())};
  while (true) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }
bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }

Subspace Restriction::to_sub(const Subspace& s) const {
  std::vector<QVector> vs;
  for (const auto& v : s.basis_vectors()) vs.push_back(subspace.coordinates(v));
  return Subspace::span(subspace.dim(), vs);
}

Restriction restrict_to(const LieAlgebra& L, const Subspace& S) {
  check_ambient(L, S);
  if (!is_subalgebra(L, S)) throw Error(ErrorKind::NotASubalgebra, "subspace is not closed under the bracket");
  const auto sb = S.basis_vectors();
  std::vector<std::string> labels;
  for (const auto& b : sb) labels.push_back(format_combination(b, L.labels()));
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < sb.size(); ++a) {
    for (std::size_t b = a + 1; b < sb.size(); ++b) {
      SparseVec value = to_sparse(S.coordinates(L.bracket(sb[a], sb[b])));
      if (!value.empty()) table.emplace(std::make_pair(a, b), std::move(value));
    }
  }
  return Restriction{LieAlgebra::from_table(std::move(labels), table, L.name()), S};
}

Projection::Projection(Subspace ideal, std::vector<std::size_t> kept)
    : ideal_(std::move(ideal)), kept_(std::move(kept)) {}

QVector Projection::apply(const QVector& v) const {
  const QVector r = ideal_.reduce(v);
  QVector q(kept_.size());
  for (std::size_t a = 0; a < kept_.size(); ++a) q[a] = r[kept_[a]];
  return q;
}

Subspace Projection::apply(const Subspace& s) const {
  std::vector<QVector> vs;
  for (const auto& v : s.basis_vectors()) vs.push_back(apply(v));
  return Subspace::span(kept_.size(), vs);
}

QVector Projection::lift(const QVector& q) const {
  if (q.size() != kept_.size()) throw Error(ErrorKind::DimensionMismatch, "quotient vector length");
  QVector v = zero_vector(ideal_.ambient_dim());
  for (std::size_t a = 0; a < kept_.size(); ++a) v[kept_[a]] = q[a];
  return v;
}

Subspace Projection::preimage(const Subspace& s) const {
  auto vs = ideal_.basis_vectors();
  for (const auto& q : s.basis_vectors()) vs.push_back(lift(q));
  return Subspace::span(ideal_.ambient_dim(), vs);
}

Quotient quotient(const LieAlgebra& L, const Subspace& A) {
  check_ambient(L, A);
  if (!is_ideal(L, A)) throw Error(ErrorKind::NotAnIdeal, "quotient requires an ideal");
  const std::size_t n = L.dim();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(A.pivots().begin(), A.pivots().end(), i) == A.pivots().end()) kept.push_back(i);
  }
  Projection proj(A, kept);
  std::vector<std::string> labels;
  for (auto i : kept) labels.push_back(L.label(i));
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      SparseVec value = to_sparse(proj.apply(to_dense(L.basis_bracket(kept[a], kept[b]), n)));
      if (!value.empty()) table.emplace(std::make_pair(a, b), std::move(value));
    }
  }
  std::string name = L.name().empty() ? std::string() : L.name() + "/A";
  return Quotient{LieAlgebra::from_table(std::move(labels), table, std::move(name)), std::move(proj)};
}

}  // namespace liecp
