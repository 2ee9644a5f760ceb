#include "liecp/index/index.hpp"

#include "liecp/exactla/random.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp {

LinFormMatrix bracket_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  LinFormMatrix m(n, n, n);
  for (const auto& [key, value] : L.table()) {
    const auto [i, j] = key;
    for (const auto& [k, c] : value) {
      m.add(i, j, k, c);
      m.add(j, i, k, -c);
    }
  }
  return m;
}

IndexReport index(const LieAlgebra& L, const RankPolicy& policy) {
  const GenericRank r = generic_rank(bracket_matrix(L), policy);
  return IndexReport{L.dim() - r.rank, r.rank, r.certified, policy.seed};
}

IndexReport subalgebra_index(const LieAlgebra& L, const Subspace& S, const RankPolicy& policy) {
  return index(restrict_to(L, S).algebra, policy);
}

QMatrix Bf_matrix(const LieAlgebra& L, const Functional& f) {
  const std::size_t n = L.dim();
  if (f.ambient_dim() != n) throw Error(ErrorKind::AmbientMismatch, "functional length differs from the algebra");
  QMatrix b(n, n);
  for (const auto& [key, value] : L.table()) {
    Rat v(0);
    for (const auto& [k, c] : value) v += c * f.coords()[k];
    b(key.first, key.second) = v;
    b(key.second, key.first) = -v;
  }
  return b;
}

Subspace stabilizer(const LieAlgebra& L, const Functional& f) {
  return Subspace::span(L.dim(), kernel(Bf_matrix(L, f)));
}

Subspace perp(const LieAlgebra& L, const Subspace& S, const Functional& f) {
  const std::size_t n = L.dim();
  if (S.ambient_dim() != n) throw Error(ErrorKind::AmbientMismatch, "subspace vs algebra");
  const QMatrix b = Bf_matrix(L, f);
  if (S.dim() == 0) return Subspace::whole(n);
  // f([x, s]) = x^T B s
  const QMatrix rows = S.basis() * b.transpose();
  return Subspace::span(n, kernel(rows));
}

bool is_regular(const LieAlgebra& L, const Functional& f, const RankPolicy& policy) {
  return stabilizer(L, f).dim() == index(L, policy).index;
}

Functional sample_regular(const LieAlgebra& L, std::size_t index_value, const RankPolicy& policy) {
  policy.validate();
  Rng rng(policy.seed, stream::kRegular);
  for (std::size_t a = 0; a < policy.attempts; ++a) {
    Functional f(rng.integer_point(L.dim(), policy.coeff_bound));
    if (stabilizer(L, f).dim() == index_value) return f;
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no regular functional in " + std::to_string(policy.attempts) + " draws");
}

Functional sample_regular(const LieAlgebra& L, const RankPolicy& policy) {
  return sample_regular(L, index(L, policy).index, policy);
}

FSRReport frobenius_semiradical(const LieAlgebra& L, const RankPolicy& policy) {
  policy.validate();
  const std::size_t n = L.dim();
  const std::size_t idx = index(L, policy).index;
  Rng rng(policy.seed, stream::kSemiradical);
  FSRReport report;
  report.subspace = Subspace(n);
  std::size_t stable = 0;
  std::size_t draws = 0;
  const std::size_t draw_cap = kFsrMaxSamples * policy.attempts;
  while (report.samples_used < kFsrMaxSamples) {
    if (draws++ >= draw_cap) {
      throw Error(ErrorKind::SamplingExhausted, "too few regular functionals while sampling stabilizers");
    }
    Functional f(rng.integer_point(n, policy.coeff_bound));
    const Subspace s = stabilizer(L, f);
    if (s.dim() != idx) continue;
    ++report.samples_used;
    Subspace next = report.subspace + s;
    if (next.dim() > report.subspace.dim()) {
      report.subspace = std::move(next);
      report.functionals.push_back(std::move(f));
      stable = 0;
      if (report.subspace.dim() == n) {
        report.converged = true;
        break;
      }
    } else if (++stable >= kFsrStableRounds) {
      report.converged = true;
      break;
    }
  }
  return report;
}

InvariantForms invariant_symmetric_forms(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * (n + 1) / 2;
  auto u = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a - 1) / 2 + (b - a);
  };
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec cij = L.basis_bracket(i, j);
      for (std::size_t l = j; l < n; ++l) {
        const SparseVec cil = L.basis_bracket(i, l);
        if (cij.empty() && cil.empty()) continue;
        // b([x_i, x_j], x_l) + b(x_j, [x_i, x_l]) = 0
        QVector row = zero_vector(unknowns);
        for (const auto& [k, c] : cij) row[u(k, l)] += c;
        for (const auto& [k, c] : cil) row[u(j, k)] += c;
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<QVector> sols;
  if (rows.empty()) {
    for (std::size_t p = 0; p < unknowns; ++p) sols.push_back(unit_vector(unknowns, p));
  } else {
    sols = kernel(QMatrix::from_rows(rows, unknowns));
  }
  InvariantForms out;
  out.params = sols.size();
  out.forms = LinFormMatrix(n, n, out.params);
  for (std::size_t p = 0; p < sols.size(); ++p) {
    QMatrix b(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        b(a, c) = sols[p][u(a, c)];
        if (sgn(b(a, c)) != 0) out.forms.add(a, c, p, b(a, c));
      }
    }
    out.basis.push_back(std::move(b));
  }
  return out;
}

bool is_invariant_form(const LieAlgebra& L, const QMatrix& b) {
  const std::size_t n = L.dim();
  if (b.rows() != n || b.cols() != n) throw Error(ErrorKind::DimensionMismatch, "form matrix shape");
  if (b != b.transpose()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const QMatrix a = L.ad(unit_vector(n, i));
    // b(ad x . , .) + b(., ad x .) = 0  <=>  a^T b + b a = 0
    if (!(a.transpose() * b + b * a).is_zero()) return false;
  }
  return true;
}

bool has_nondeg_invariant_form(const LieAlgebra& L, const RankPolicy& policy) {
  const InvariantForms forms = invariant_symmetric_forms(L);
  if (forms.params == 0) return L.dim() == 0;
  return generic_rank(forms.forms, policy).rank == L.dim();
}

std::optional<FormWitness> nondeg_invariant_form(const LieAlgebra& L, const RankPolicy& policy) {
  const InvariantForms forms = invariant_symmetric_forms(L);
  if (forms.params == 0 || generic_rank(forms.forms, policy).rank < L.dim()) return std::nullopt;
  Rng rng(policy.seed, stream::kForm);
  for (std::size_t a = 0; a < policy.attempts; ++a) {
    QVector point = rng.integer_point(forms.params, policy.coeff_bound);
    QMatrix m = forms.forms.evaluate(point);
    if (rank_exact(m) == L.dim()) return FormWitness{std::move(point), std::move(m)};
  }
  throw Error(ErrorKind::SamplingExhausted, "no nondegenerate specialization of the invariant forms found");
}

bool is_square_integrable(const LieAlgebra& L, const RankPolicy& policy) {
  return index(L, policy).index == center(L).dim();
}

bool is_frobenius(const LieAlgebra& L, const RankPolicy& policy) { return index(L, policy).index == 0; }

}  // namespace liecp
