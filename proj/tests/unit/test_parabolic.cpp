#include <doctest.h>

#include "liecp/cp/cp.hpp"
#include "liecp/error.hpp"
#include "liecp/liealg/structure.hpp"
#include "liecp/parabolic/parabolic.hpp"
#include "support.hpp"

using namespace liecp;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::NotExact;
}

}  // namespace

TEST_SUITE("parabolic") {

TEST_CASE("composition parsing") {
  CHECK(parse_composition("2,3,1") == std::vector<std::size_t>{2, 3, 1});
  CHECK(parse_composition(" 4 ") == std::vector<std::size_t>{4});
  CHECK(format_composition({1, 2}) == "1,2");
  CHECK(kind_of([] { parse_composition(""); }) == ErrorKind::InvalidComposition);
  CHECK(kind_of([] { parse_composition("2,,1"); }) == ErrorKind::InvalidComposition);
  CHECK(kind_of([] { parse_composition("2,x"); }) == ErrorKind::InvalidComposition);
  CHECK(kind_of([] { CompositionA({2, 0}); }) == ErrorKind::InvalidComposition);
  CHECK(kind_of([] { CompositionC({1, 2}); }) == ErrorKind::InvalidComposition);
  CHECK(kind_of([] { CompositionC({1, 3, 1}); }) == ErrorKind::InvalidComposition);
  CHECK_NOTHROW(CompositionC({1, 2, 1}));
}

TEST_CASE("composition data") {
  const CompositionA a({2, 2, 3});
  CHECK(a.n() == 7);
  CHECK(a.cut() == 4);
  CHECK(CompositionA({1, 1, 1}).cut() == 1);
  CHECK(CompositionA({3}).cut() == 0);
  const CompositionC c({1, 2, 2, 1});
  CHECK(c.r() == 3);
  CHECK(c.ell() == 2);
  CHECK(c.r1() == 0);
  const CompositionC d({1, 4, 1});
  CHECK(d.r() == 3);
  CHECK(d.r1() == 2);
}

TEST_CASE("enumeration counts") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(compositions_A(n).size() == (std::size_t{1} << (n - 1)));
  // palindromes of 2r with even middle part: 2^r
  for (std::size_t r = 1; r <= 4; ++r) CHECK(compositions_C(r).size() == (std::size_t{1} << r));
}

TEST_CASE("nilradicals match the closed forms") {
  const auto p = testing::test_policy();
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& c : compositions_A(n)) {
      CAPTURE(format_composition(c.parts()));
      const LieAlgebra N = nilradical_A(c);
      CHECK(N.dim() == dim_formula_A(c));
      CHECK(is_nilpotent(N));
      CHECK(index(N, p).index == index_formula_A(c));
      const Subspace P = cp_ideal_A(c);
      CHECK(is_ideal(N, P));
      CHECK(is_witness(N, P, regular_f_A(c)));
    }
  }
  for (std::size_t r = 1; r <= 3; ++r) {
    for (const auto& c : compositions_C(r)) {
      CAPTURE(format_composition(c.parts()));
      const LieAlgebra N = nilradical_C(c);
      CHECK(N.dim() == dim_formula_C(c));
      CHECK(index(N, p).index == index_formula_C(c));
      CHECK(is_witness(N, cp_ideal_C(c), regular_f_C(c)));
    }
  }
}

TEST_CASE("verify_parabolic reports") {
  const auto p = testing::test_policy();
  const ParabolicReport a = verify_parabolic('A', {2, 3}, p);
  CHECK(a.ok());
  CHECK(a.dim_N == 6);
  CHECK(a.index == 6);
  CHECK(a.cp);
  CHECK(a.ideal);
  CHECK(a.witness);
  CHECK(a.regular);
  const ParabolicReport c = verify_parabolic('C', {1, 1, 1, 1}, p);
  CHECK(c.ok());
  CHECK(c.dim_N == 4);
  CHECK(c.index == 2);
  CHECK(c.N.label(0).rfind("Xm", 0) == 0);
  CHECK(kind_of([&] { verify_parabolic('B', {1, 1}, p); }) == ErrorKind::UnsupportedType);
}

TEST_CASE("Borel data") {
  const BorelData a3 = borel_data_classical('A', 3);
  CHECK(a3.N.dim() == 6);
  CHECK(a3.B.dim() == 9);
  CHECK(a3.B.label(0) == "H1");
  CHECK(a3.positions.size() == 6);
  CHECK(borel_data_classical('B', 3).N.dim() == 9);
  CHECK(borel_data_classical('C', 3).N.dim() == 9);
  CHECK(borel_data_classical('D', 4).N.dim() == 12);
  CHECK(kind_of([] { borel_data_classical('E', 6); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { borel_data_classical('A', 9); }) == ErrorKind::UnsupportedType);
}

TEST_CASE("recorded classical Borel rows") {
  CHECK(table1_row('A', 3).dim_N == 6);
  CHECK(table1_row('A', 3).index_N == 2);
  CHECK(table1_row('A', 3).index_B == 1);
  CHECK(table1_row('E', 8).dim_N == 120);
  CHECK(table1_row('G', 2).dim_N == 6);
  CHECK(kind_of([] { table1_row('B', 2); }) == ErrorKind::UnsupportedType);
  const auto p = testing::test_policy();
  const Table1Report r = table1_check('B', 3, p);
  CHECK(r.ok());
  CHECK_FALSE(r.cp_expected);
  CHECK(r.sum_ok);
  const Table1Report c = table1_check('C', 2, p);
  CHECK(c.ok());
  REQUIRE(c.cp_found.has_value());
  CHECK(*c.cp_found);
}

TEST_CASE("sl_n and the principal nilpotent") {
  CHECK(sl_n(3).dim() == 8);
  CHECK(sl_n(3).label(3) == "H1");
  const auto p = testing::test_policy();
  for (std::size_t n = 2; n <= 4; ++n) {
    const PrincipalNilpotentReport r = principal_nilpotent_normalizer(n, p);
    CHECK(r.ok());
    CHECK(r.dim_C == n - 1);
    CHECK(r.dim_F == 2 * (n - 1));
    CHECK(r.index_F == 0);
    CHECK(r.cp_ideal);
  }
  CHECK(kind_of([&] { principal_nilpotent_normalizer(1, p); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { principal_nilpotent_normalizer(7, p); }) == ErrorKind::PreconditionViolated);
}

}  // TEST_SUITE
