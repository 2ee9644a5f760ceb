#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liecp/exactla/rank.hpp"
#include "liecp/liealg/lie_algebra.hpp"
#include "liecp/liealg/subspace.hpp"

namespace liecp {

/// "2,3,1" -> {2, 3, 1}. Throws Error{InvalidComposition}.
std::vector<std::size_t> parse_composition(std::string_view text);
std::string format_composition(const std::vector<std::size_t>& parts);

/// Block sizes (p_1, ..., p_m) of a parabolic subalgebra of sl_n.
class CompositionA {
 public:
  /// Throws Error{InvalidComposition} on an empty list or a zero part.
  explicit CompositionA(std::vector<std::size_t> parts);
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t n() const noexcept { return n_; }
  /// p = p_1 + ... + p_l with |p - n/2| minimal, ties going to p <= n/2.
  std::size_t cut() const noexcept { return cut_; }

 private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
  std::size_t cut_ = 0;
};

/// Palindromic block sizes summing to 2r, for a parabolic subalgebra of sp_2r.
class CompositionC {
 public:
  /// Throws Error{InvalidComposition} unless palindromic with an even middle part.
  explicit CompositionC(std::vector<std::size_t> parts);
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t ell() const noexcept { return parts_.size() / 2; }
  /// Half the middle part when the length is odd, else 0.
  std::size_t r1() const noexcept { return r1_; }

 private:
  std::vector<std::size_t> parts_;
  std::size_t r_ = 0;
  std::size_t r1_ = 0;
};

/// Every composition of n, every palindromic composition of 2r with even middle part.
std::vector<CompositionA> compositions_A(std::size_t n);
std::vector<CompositionC> compositions_C(std::size_t r);

/// Strictly block upper triangular n x n matrices; basis E{i}_{j}.
LieAlgebra nilradical_A(const CompositionA& c);
/// Nilradical inside sp_2r (Witt basis e_1..e_r, e_-r..e_-1, e_-j at position
/// 2r+1-j); basis Xm{i}_{j} = E_ij - E_-j,-i, Xp{i}_{j} = E_i,-j + E_j,-i and
/// X2e{i} = E_i,-i, in that order.
LieAlgebra nilradical_C(const CompositionC& c);

std::size_t dim_formula_A(const CompositionA& c);
std::size_t dim_formula_C(const CompositionC& c);
std::size_t index_formula_A(const CompositionA& c);
std::size_t index_formula_C(const CompositionC& c);

/// Span of E_ij with i <= p < j, and f = Σ_{i <= min(p, n-p)} E*_{i,n+1-i}.
Subspace cp_ideal_A(const CompositionA& c);
Functional regular_f_A(const CompositionA& c);
/// Span of X_{e_i+e_j} with i <= r - r1, i <= j, and f = Σ_{i <= r-r1} X*_{2e_i}.
Subspace cp_ideal_C(const CompositionC& c);
Functional regular_f_C(const CompositionC& c);

struct ParabolicReport {
  char type = 'A';
  std::vector<std::size_t> parts;
  LieAlgebra N;
  std::size_t dim_N = 0;
  std::size_t dim_formula = 0;
  std::size_t index = 0;
  std::size_t index_formula = 0;
  bool certified = false;
  Subspace P;
  Functional f;
  bool cp = false;       // P is a CP of N
  bool ideal = false;    // P is an ideal of N
  bool witness = false;  // P^f = P, exactly
  bool regular = false;  // dim N(f) = index
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};
/// Builds N, P and f and checks all of the above against the closed forms.
/// type is 'A' or 'C' (Error{UnsupportedType} otherwise).
ParabolicReport verify_parabolic(char type, const std::vector<std::size_t>& parts, const RankPolicy& policy);

/// Nilradical N and Borel B = N + Cartan of sl_{r+1}, so_{2r+1}, sp_2r or
/// so_2r, the orthogonal and symplectic forms being anti-diagonal so that N
/// is strictly upper triangular. N's basis is labelled E{a}_{b} after its
/// first nonzero entry; B lists H1..Hr first.
struct BorelData {
  char type = 'A';
  std::size_t rank = 0;
  LieAlgebra N;
  LieAlgebra B;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // (a, b) of each basis vector of N, 1-based
};
/// Supported: A 1..7, B 2..5, C 1..5, D 3..5. Throws Error{UnsupportedType}.
BorelData borel_data_classical(char type, std::size_t rank);

struct Table1Row {
  std::size_t dim_N = 0;
  std::size_t index_N = 0;
  std::size_t index_B = 0;
  std::size_t m = 0;  // maximal dimension of an abelian subalgebra of N (recorded constant)
  std::size_t half() const { return (dim_N + index_N) / 2; }
};
/// Recorded row for A_r (r >= 1), B_r (r >= 3), C_r (r >= 2), D_r (r >= 4),
/// E6, E7, E8, F4 and G2. Throws Error{UnsupportedType} otherwise.
Table1Row table1_row(char type, std::size_t rank);

struct Table1Report {
  char type = 'A';
  std::size_t rank = 0;
  Table1Row expected;
  Table1Row computed;  // m copied from the recorded row
  bool certified = false;
  bool sum_ok = false;  // i(N) + i(B) = r
  bool cp_expected = false;  // (dim N + i(N)) / 2 == m
  std::optional<bool> cp_found;  // A and C: the upper-right block span is a CP-ideal of N
  std::size_t cp_dim = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};
/// Classical types within the borel_data_classical caps that have a recorded row.
Table1Report table1_check(char type, std::size_t rank, const RankPolicy& policy);

struct PrincipalNilpotentReport {
  std::size_t n = 0;
  LieAlgebra F;        // normalizer of C(x) in sl_n
  Subspace C_in_F;     // C(x) in F's coordinates
  std::size_t dim_C = 0;
  bool C_abelian = false;
  std::size_t dim_F = 0;
  std::size_t index_F = 0;
  bool certified = false;
  bool cp_ideal = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};
/// x = Σ E_{i,i+1} in sl_n, 2 <= n <= 6 (Error{PreconditionViolated}).
PrincipalNilpotentReport principal_nilpotent_normalizer(std::size_t n, const RankPolicy& policy);

/// sl_n with basis E{i}_{j} (i < j), H1..H{n-1}, E{i}_{j} (i > j).
LieAlgebra sl_n(std::size_t n);

}  // namespace liecp
