#include "liecp/parabolic/parabolic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "liecp/cp/cp.hpp"
#include "liecp/index/index.hpp"
#include "liecp/liealg/constructors.hpp"
#include "liecp/liealg/structure.hpp"

namespace liecp {

namespace {

using Pos = std::pair<std::size_t, std::size_t>;

std::string e_label(const char* head, std::size_t i, std::size_t j) {
  return head + std::to_string(i) + "_" + std::to_string(j);
}

QMatrix unit_matrix(std::size_t size, std::size_t a, std::size_t b) {
  QMatrix m(size, size);
  m(a - 1, b - 1) = 1;
  return m;
}

// 1-based block number of every 1-based position.
std::vector<std::size_t> block_of(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> out{0};
  for (std::size_t b = 0; b < parts.size(); ++b) out.insert(out.end(), parts[b], b + 1);
  return out;
}

std::size_t sum_squares(const std::vector<std::size_t>& v, std::size_t count) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < count; ++i) s += v[i] * v[i];
  return s;
}

Subspace coordinate_where(const LieAlgebra& L, const std::vector<Pos>& positions, std::size_t cut) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k].first <= cut && cut < positions[k].second) idx.push_back(k);
  }
  return Subspace::coordinate(L.dim(), idx);
}

struct MatrixBasis {
  std::vector<QMatrix> matrices;
  std::vector<std::string> labels;
  std::vector<Pos> positions;
};

// Strictly upper triangular part of sl, so or sp of the given size; the form
// is anti-diagonal with signs eps(a) on row a.
enum class Form { None, Symmetric, Alternating };

MatrixBasis strictly_upper(std::size_t size, Form form) {
  const std::size_t half = size / 2;
  auto eps = [&](std::size_t a) { return form == Form::Alternating && a > half ? -1 : 1; };
  auto mirror = [&](std::size_t a) { return size + 1 - a; };
  MatrixBasis out;
  for (std::size_t a = 1; a <= size; ++a) {
    for (std::size_t b = a + 1; b <= size; ++b) {
      QMatrix m = unit_matrix(size, a, b);
      if (form != Form::None) {
        const Pos partner{mirror(b), mirror(a)};
        if (partner < Pos{a, b}) continue;
        if (partner == Pos{a, b}) {
          if (form == Form::Symmetric) continue;
        } else {
          // J X symmetric (alternating form) or antisymmetric (symmetric form).
          const int s = (form == Form::Alternating ? 1 : -1) * eps(mirror(a)) * eps(b);
          m(partner.first - 1, partner.second - 1) = s;
        }
      }
      out.matrices.push_back(std::move(m));
      out.labels.push_back(e_label("E", a, b));
      out.positions.push_back({a, b});
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> parse_composition(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::InvalidComposition, "composition entry '" + std::string(item) + "' is not a count");
    }
    parts.push_back(value);
    start = end + 1;
  }
  return parts;
}

std::string format_composition(const std::vector<std::size_t>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out;
}

CompositionA::CompositionA(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidComposition, "composition has no parts");
  for (auto p : parts_) {
    if (p == 0) throw Error(ErrorKind::InvalidComposition, "composition part 0 in " + format_composition(parts_));
    n_ += p;
  }
  // Compare 2s with n to stay in integers.
  std::size_t best_dist = n_;
  std::size_t s = 0;
  for (auto p : parts_) {
    s += p;
    const std::size_t dist = 2 * s > n_ ? 2 * s - n_ : n_ - 2 * s;
    if (dist < best_dist || (dist == best_dist && 2 * s <= n_)) {
      best_dist = dist;
      cut_ = s;
    }
  }
}

CompositionC::CompositionC(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  const std::string text = format_composition(parts_);
  if (parts_.empty()) throw Error(ErrorKind::InvalidComposition, "composition has no parts");
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error(ErrorKind::InvalidComposition, "composition part 0 in " + text);
    if (parts_[i] != parts_[parts_.size() - 1 - i]) {
      throw Error(ErrorKind::InvalidComposition, "type C composition " + text + " is not palindromic");
    }
    total += parts_[i];
  }
  if (parts_.size() % 2 == 1) {
    const std::size_t middle = parts_[parts_.size() / 2];
    if (middle % 2 != 0) throw Error(ErrorKind::InvalidComposition, "middle part of " + text + " is odd");
    r1_ = middle / 2;
  }
  r_ = total / 2;
}

std::vector<CompositionA> compositions_A(std::size_t n) {
  std::vector<CompositionA> out;
  if (n == 0) return out;
  // Bit k of mask set: cut after position k+1.
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> parts;
    std::size_t run = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (mask >> k & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(parts);
  }
  return out;
}

std::vector<CompositionC> compositions_C(std::size_t r) {
  std::vector<CompositionC> out;
  if (r == 0) return out;
  // First half from a composition of k <= r, then a middle part 2(r - k) if k < r.
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> halves;
    if (k == 0) {
      halves.push_back({});
    } else {
      for (const auto& c : compositions_A(k)) halves.push_back(c.parts());
    }
    for (const auto& h : halves) {
      std::vector<std::size_t> parts = h;
      if (k < r) parts.push_back(2 * (r - k));
      parts.insert(parts.end(), h.rbegin(), h.rend());
      out.emplace_back(parts);
    }
  }
  return out;
}

LieAlgebra nilradical_A(const CompositionA& c) {
  const std::size_t n = c.n();
  const auto block = block_of(c.parts());
  std::vector<QMatrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (block[i] < block[j]) {
        basis.push_back(unit_matrix(n, i, j));
        labels.push_back(e_label("E", i, j));
      }
    }
  }
  return matrix_lie_algebra(basis, labels, "N_A(" + format_composition(c.parts()) + ")");
}

LieAlgebra nilradical_C(const CompositionC& c) {
  const std::size_t r = c.r();
  const std::size_t size = 2 * r;
  const auto block = block_of(c.parts());
  auto neg = [&](std::size_t j) { return size + 1 - j; };
  std::vector<QMatrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      if (block[i] < block[j]) {
        basis.push_back(unit_matrix(size, i, j) - unit_matrix(size, neg(j), neg(i)));
        labels.push_back(e_label("Xm", i, j));
      }
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      if (block[i] < block[neg(j)]) {
        basis.push_back(unit_matrix(size, i, neg(j)) + unit_matrix(size, j, neg(i)));
        labels.push_back(e_label("Xp", i, j));
      }
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    if (block[i] < block[neg(i)]) {
      basis.push_back(unit_matrix(size, i, neg(i)));
      labels.push_back("X2e" + std::to_string(i));
    }
  }
  return matrix_lie_algebra(basis, labels, "N_C(" + format_composition(c.parts()) + ")");
}

std::size_t dim_formula_A(const CompositionA& c) {
  return (c.n() * c.n() - sum_squares(c.parts(), c.parts().size())) / 2;
}

std::size_t dim_formula_C(const CompositionC& c) {
  const std::size_t r = c.r(), r1 = c.r1();
  return (r * r - r1 * r1) - sum_squares(c.parts(), c.ell()) / 2 + (r - r1) / 2;
}

std::size_t index_formula_A(const CompositionA& c) {
  const std::size_t p = c.cut();
  return 2 * p * (c.n() - p) - dim_formula_A(c);
}

std::size_t index_formula_C(const CompositionC& c) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < c.ell(); ++i) s += c.parts()[i] * (c.parts()[i] + 1);
  return s / 2;
}

Subspace cp_ideal_A(const CompositionA& c) {
  const LieAlgebra N = nilradical_A(c);
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= c.cut(); ++i) {
    for (std::size_t j = c.cut() + 1; j <= c.n(); ++j) idx.push_back(*N.index_of(e_label("E", i, j)));
  }
  std::sort(idx.begin(), idx.end());
  return Subspace::coordinate(N.dim(), idx);
}

Functional regular_f_A(const CompositionA& c) {
  const LieAlgebra N = nilradical_A(c);
  const std::size_t n = c.n();
  QVector f = zero_vector(N.dim());
  for (std::size_t i = 1; i <= std::min(c.cut(), n - c.cut()); ++i) f[*N.index_of(e_label("E", i, n + 1 - i))] = 1;
  return Functional(std::move(f));
}

Subspace cp_ideal_C(const CompositionC& c) {
  const LieAlgebra N = nilradical_C(c);
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + c.r1() <= c.r(); ++i) {
    idx.push_back(*N.index_of("X2e" + std::to_string(i)));
    for (std::size_t j = i + 1; j <= c.r(); ++j) idx.push_back(*N.index_of(e_label("Xp", i, j)));
  }
  return Subspace::coordinate(N.dim(), idx);
}

Functional regular_f_C(const CompositionC& c) {
  const LieAlgebra N = nilradical_C(c);
  QVector f = zero_vector(N.dim());
  for (std::size_t i = 1; i + c.r1() <= c.r(); ++i) f[*N.index_of("X2e" + std::to_string(i))] = 1;
  return Functional(std::move(f));
}

ParabolicReport verify_parabolic(char type, const std::vector<std::size_t>& parts, const RankPolicy& policy) {
  ParabolicReport r;
  r.type = type;
  r.parts = parts;
  if (type == 'A') {
    const CompositionA c(parts);
    r.N = nilradical_A(c);
    r.dim_formula = dim_formula_A(c);
    r.index_formula = index_formula_A(c);
    r.P = cp_ideal_A(c);
    r.f = regular_f_A(c);
  } else if (type == 'C') {
    const CompositionC c(parts);
    r.N = nilradical_C(c);
    r.dim_formula = dim_formula_C(c);
    r.index_formula = index_formula_C(c);
    r.P = cp_ideal_C(c);
    r.f = regular_f_C(c);
  } else {
    throw Error(ErrorKind::UnsupportedType, std::string("parabolic type '") + type + "' (expected A or C)");
  }
  r.dim_N = r.N.dim();
  const IndexReport ir = index(r.N, policy);
  r.index = ir.index;
  const CPReport cp = is_cp(r.N, r.P, policy);
  r.cp = cp.is_cp;
  r.ideal = cp.is_ideal;
  r.certified = ir.certified && cp.certified;
  r.witness = perp(r.N, r.P, r.f) == r.P;
  r.regular = stabilizer(r.N, r.f).dim() == r.index;
  if (r.dim_N != r.dim_formula) r.failures.push_back("dimension differs from the closed form");
  if (r.index != r.index_formula) r.failures.push_back("index differs from the closed form");
  if (!r.cp) r.failures.push_back("P is not a commutative polarization");
  if (!r.ideal) r.failures.push_back("P is not an ideal");
  if (!r.witness) r.failures.push_back("P^f != P");
  if (!r.regular) r.failures.push_back("f is not regular");
  return r;
}

BorelData borel_data_classical(char type, std::size_t rank) {
  std::size_t size = 0;
  Form form = Form::None;
  switch (type) {
    case 'A':
      if (rank < 1 || rank > 7) throw Error(ErrorKind::UnsupportedType, "type A supports ranks 1..7");
      size = rank + 1;
      break;
    case 'B':
      if (rank < 2 || rank > 5) throw Error(ErrorKind::UnsupportedType, "type B supports ranks 2..5");
      size = 2 * rank + 1;
      form = Form::Symmetric;
      break;
    case 'C':
      if (rank < 1 || rank > 5) throw Error(ErrorKind::UnsupportedType, "type C supports ranks 1..5");
      size = 2 * rank;
      form = Form::Alternating;
      break;
    case 'D':
      if (rank < 3 || rank > 5) throw Error(ErrorKind::UnsupportedType, "type D supports ranks 3..5");
      size = 2 * rank;
      form = Form::Symmetric;
      break;
    default:
      throw Error(ErrorKind::UnsupportedType, std::string("no classical type '") + type + "'");
  }
  const MatrixBasis nil = strictly_upper(size, form);
  const std::string tag = std::string(1, type) + std::to_string(rank);
  BorelData out;
  out.type = type;
  out.rank = rank;
  out.positions = nil.positions;
  out.N = matrix_lie_algebra(nil.matrices, nil.labels, "N(" + tag + ")");
  std::vector<QMatrix> bb;
  std::vector<std::string> bl;
  for (std::size_t i = 1; i <= rank; ++i) {
    const std::size_t other = type == 'A' ? i + 1 : size + 1 - i;
    bb.push_back(unit_matrix(size, i, i) - unit_matrix(size, other, other));
    bl.push_back("H" + std::to_string(i));
  }
  bb.insert(bb.end(), nil.matrices.begin(), nil.matrices.end());
  bl.insert(bl.end(), nil.labels.begin(), nil.labels.end());
  out.B = matrix_lie_algebra(bb, bl, "B(" + tag + ")");
  return out;
}

Table1Row table1_row(char type, std::size_t r) {
  const std::size_t t = r / 2;
  switch (type) {
    case 'A':
      if (r < 1) break;
      if (r % 2 == 0) return {t * (2 * t + 1), t, t, t * (t + 1)};
      return {(t + 1) * (2 * t + 1), t + 1, t, (t + 1) * (t + 1)};
    case 'B':
      if (r == 3) return {9, 3, 0, 5};
      if (r >= 4) return {r * r, r, 0, r * (r - 1) / 2 + 1};
      break;
    case 'C':
      if (r >= 2) return {r * r, r, 0, r * (r + 1) / 2};
      break;
    case 'D':
      if (r >= 4 && r % 2 == 0) return {2 * t * (2 * t - 1), 2 * t, 0, t * (2 * t - 1)};
      if (r >= 5) return {2 * t * (2 * t + 1), 2 * t, 1, t * (2 * t + 1)};
      break;
    case 'E':
      if (r == 6) return {36, 4, 2, 16};
      if (r == 7) return {63, 7, 0, 27};
      if (r == 8) return {120, 8, 0, 36};
      break;
    case 'F':
      if (r == 4) return {24, 4, 0, 9};
      break;
    case 'G':
      if (r == 2) return {6, 2, 0, 3};
      break;
    default:
      break;
  }
  throw Error(ErrorKind::UnsupportedType, std::string("no recorded row for ") + type + std::to_string(r));
}

Table1Report table1_check(char type, std::size_t rank, const RankPolicy& policy) {
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D') {
    throw Error(ErrorKind::UnsupportedType, std::string("type ") + type + " has recorded constants only");
  }
  Table1Report rep;
  rep.type = type;
  rep.rank = rank;
  rep.expected = table1_row(type, rank);
  const BorelData data = borel_data_classical(type, rank);
  const IndexReport iN = index(data.N, policy);
  const IndexReport iB = index(data.B, policy);
  rep.computed = {data.N.dim(), iN.index, iB.index, rep.expected.m};
  rep.certified = iN.certified && iB.certified;
  rep.sum_ok = iN.index + iB.index == rank;
  rep.cp_expected = rep.computed.half() == rep.expected.m;
  if (rep.computed.dim_N != rep.expected.dim_N) rep.failures.push_back("dim N differs from the table");
  if (rep.computed.index_N != rep.expected.index_N) rep.failures.push_back("i(N) differs from the table");
  if (rep.computed.index_B != rep.expected.index_B) rep.failures.push_back("i(B) differs from the table");
  if (!rep.sum_ok) rep.failures.push_back("i(N) + i(B) != rank");
  if (type == 'A' || type == 'C') {
    const std::size_t cut = type == 'A' ? (rank + 1) / 2 : rank;
    const Subspace P = coordinate_where(data.N, data.positions, cut);
    const CPReport cp = is_cp(data.N, P, policy);
    rep.cp_found = cp.is_cp && cp.is_ideal;
    rep.cp_dim = P.dim();
    rep.certified = rep.certified && cp.certified;
    if (!*rep.cp_found) rep.failures.push_back("upper-right block is not a CP-ideal");
    if (!rep.cp_expected || rep.cp_dim != rep.expected.m) rep.failures.push_back("CP dimension differs from m");
  } else if (rep.cp_expected) {
    rep.failures.push_back("(dim N + i(N)) / 2 equals m, contrary to the absence of a CP");
  }
  return rep;
}

LieAlgebra sl_n(std::size_t n) {
  std::vector<QMatrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(e_label("E", i, j));
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      basis.push_back(unit_matrix(n, i, j));
      labels.push_back(e_label("E", i, j));
    }
  }
  return matrix_lie_algebra(basis, labels, "sl" + std::to_string(n));
}

PrincipalNilpotentReport principal_nilpotent_normalizer(std::size_t n, const RankPolicy& policy) {
  if (n < 2 || n > 6) throw Error(ErrorKind::PreconditionViolated, "principal nilpotent check needs 2 <= n <= 6");
  const LieAlgebra L = sl_n(n);
  QVector x = zero_vector(L.dim());
  for (std::size_t i = 1; i < n; ++i) x[*L.index_of(e_label("E", i, i + 1))] = 1;
  const Subspace C = centralizer(L, x);
  const Restriction F = restrict_to(L, normalizer(L, C));
  PrincipalNilpotentReport rep;
  rep.n = n;
  rep.F = F.algebra.renamed("F(sl" + std::to_string(n) + ")");
  rep.C_in_F = F.to_sub(C);
  rep.dim_C = C.dim();
  rep.C_abelian = is_abelian(L, C);
  rep.dim_F = F.algebra.dim();
  const IndexReport ir = index(rep.F, policy);
  rep.index_F = ir.index;
  const CPReport cp = is_cp(rep.F, rep.C_in_F, policy);
  rep.cp_ideal = cp.is_cp && cp.is_ideal;
  rep.certified = ir.certified && cp.certified;
  if (rep.dim_C != n - 1) rep.failures.push_back("dim C(x) != n - 1");
  if (!rep.C_abelian) rep.failures.push_back("C(x) is not abelian");
  if (rep.dim_F != 2 * (n - 1)) rep.failures.push_back("dim F != 2(n - 1)");
  if (rep.index_F != 0) rep.failures.push_back("F is not Frobenius");
  if (!rep.cp_ideal) rep.failures.push_back("C(x) is not a CP-ideal of F");
  return rep;
}

}  // namespace liecp
