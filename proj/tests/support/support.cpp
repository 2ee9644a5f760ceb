#include "support.hpp"

#include <cstdlib>
#include <stdexcept>

#include "liecp/liealg/constructors.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp::testing {

std::uint64_t test_seed() {
  const char* s = std::getenv("LIECP_TEST_SEED");
  return s == nullptr ? 0 : std::strtoull(s, nullptr, 10);
}

RankPolicy test_policy() {
  RankPolicy p;
  p.seed = test_seed();
  return p;
}

const std::vector<Instance>& catalog_instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> out;
    for (const auto& e : catalog::expectations()) out.push_back({e.name, e.params, catalog::get(e.name, e.params)});
    return out;
  }();
  return all;
}

Rat random_rational(Rng& rng, std::int64_t bound) {
  Rat r(Integer(static_cast<long>(rng.uniform(-bound, bound))), Integer(static_cast<long>(rng.uniform(1, 3))));
  r.canonicalize();
  return r;
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = random_rational(rng, bound);
    }
  }
  return m;
}

QMatrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    QMatrix m = random_matrix(rng, n, n, 2);
    if (rank_exact(m) == n) return m;
  }
}

QMatrix random_sparse_invertible(Rng& rng, std::size_t n) {
  // permutation, diagonal scaling and about n/2 elementary operations
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat d = random_rational(rng, 3);
    while (d == 0) d = random_rational(rng, 3);
    m(perm[i], i) = d;
  }
  for (std::size_t k = 0; k < n / 2 && n > 1; ++k) {
    const auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (b >= a) ++b;
    const Rat c(rng.uniform(-2, 2));
    for (std::size_t r = 0; r < n; ++r) m(r, a) += c * m(r, b);
  }
  return m;
}

LieAlgebra change_basis(const LieAlgebra& L, const QMatrix& B, const std::string& prefix) {
  const std::size_t n = L.dim();
  const QMatrix inv = *inverse(B);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseVec v = to_sparse(inv.apply(L.bracket(B.col(a), B.col(b))));
      if (!v.empty()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  }
  return LieAlgebra::from_table(std::move(labels), table, L.name());
}

namespace {

const Instance* pick(Rng& rng, std::size_t max_dim) {
  std::vector<const Instance*> fits;
  for (const auto& c : catalog_instances()) {
    if (c.algebra.dim() <= max_dim) fits.push_back(&c);
  }
  if (fits.empty()) return nullptr;
  return fits[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(fits.size()) - 1))];
}

// A random ideal: a random subspace of the center, a term of the lower
// central or derived series, or such a term plus central vectors.
Subspace random_ideal(Rng& rng, const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Subspace> terms;
  for (const auto& s : lower_central_series(L)) terms.push_back(s);
  for (const auto& s : derived_series(L)) terms.push_back(s);
  Subspace base(n);
  if (rng.uniform(0, 1) == 0) base = terms[static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(terms.size()) - 1))];
  if (base.dim() == n) base = Subspace(n);
  const Subspace Z = center(L);
  std::vector<QVector> extra;
  const auto zs = Z.basis_vectors();
  for (const auto& z : zs) {
    if (rng.uniform(0, 2) == 0) extra.push_back(scale(random_rational(rng), z));
  }
  Subspace I = base + Subspace::span(n, extra);
  if (I.dim() == n) I = base;
  return I;
}

}  // namespace

LieAlgebra random_perturbation(Rng& rng, std::size_t max_dim) {
  const Instance* first = pick(rng, max_dim);
  if (first == nullptr) throw std::invalid_argument("no catalog algebra of dimension <= " + std::to_string(max_dim));
  LieAlgebra L = first->algebra;
  if (L.dim() < max_dim && rng.uniform(0, 2) == 0) {
    if (const Instance* other = pick(rng, max_dim - L.dim())) L = direct_product(L, other->algebra);
  }
  if (rng.uniform(0, 1) == 0) {
    const Subspace I = random_ideal(rng, L);
    if (I.dim() > 0 && I.dim() < L.dim()) L = quotient(L, I).algebra;
  }
  return change_basis(L, random_sparse_invertible(rng, L.dim()));
}

LinFormMatrix random_linform_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t nvars,
                                    int density_percent) {
  LinFormMatrix m(rows, cols, nvars);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.uniform(1, 100) > density_percent) continue;
      const auto var = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1));
      m.add(i, j, var, Rat(rng.uniform(-3, 3)));
    }
  }
  return m;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace liecp::testing
