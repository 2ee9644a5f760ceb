#include <doctest.h>

#include "liecp/catalog/builders.hpp"
#include "liecp/error.hpp"
#include "liecp/liealg/assoc.hpp"
#include "liecp/liealg/constructors.hpp"
#include "liecp/liealg/io.hpp"
#include "liecp/liealg/structure.hpp"
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

QVector v(std::initializer_list<int> xs) {
  QVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("algebra files round-trip for every catalog instance") {
  for (const auto& inst : testing::catalog_instances()) {
    CAPTURE(inst.name);
    const std::string text = serialize_algebra(inst.algebra);
    const LieAlgebra back = parse_algebra(text);
    CHECK(back == inst.algebra);
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("algebra file errors carry their kind") {
  CHECK(kind_of([] { parse_algebra("{"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_algebra(R"({"basis": ["x"]})"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "x"], "brackets": []})");
        }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 3, "basis": ["x", "y"], "brackets": []})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "y"],
            "brackets": [{"lhs": "x", "rhs": "q", "terms": {"y": "1"}}]})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "y"],
            "brackets": [{"lhs": "x", "rhs": "y", "terms": {"y": "1"}},
                         {"lhs": "x", "rhs": "y", "terms": {"y": "2"}}]})");
        }) == ErrorKind::DuplicatePair);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "y"],
            "brackets": [{"lhs": "y", "rhs": "x", "terms": {"y": "-1"}}]})");
        }) == ErrorKind::InvalidPair);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "y"],
            "brackets": [{"lhs": "x", "rhs": "x", "terms": {"y": "1"}}]})");
        }) == ErrorKind::InvalidPair);
  CHECK(kind_of([] {
          parse_algebra(R"({"name": "a", "dim": 2, "basis": ["x", "y"],
            "brackets": [{"lhs": "x", "rhs": "y", "terms": {"y": "1/0"}}]})");
        }) == ErrorKind::ParseError);
}

TEST_CASE("Jacobi violations name the triple") {
  // [x,y]=y, [x,z]=y, [y,z]=x fails Jacobi
  std::vector<BracketTerm> bad{{0, 1, {{1, Rat(1)}}}, {0, 2, {{1, Rat(1)}}}, {1, 2, {{0, Rat(1)}}}};
  try {
    LieAlgebra({"x", "y", "z"}, bad);
    FAIL("accepted");
  } catch (const JacobiViolation& e) {
    CHECK(e.kind() == ErrorKind::JacobiViolation);
    CHECK(e.i() < e.j());
    CHECK(e.j() < e.k());
    CHECK_FALSE(e.defect().empty());
  }
  CHECK(kind_of([] { LieAlgebra({"x", "y"}, {{0, 5, {}}}); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("brackets are antisymmetric and bilinear") {
  const LieAlgebra L = algebras::diamond();
  Rng rng(testing::test_seed(), 201);
  for (int trial = 0; trial < 30; ++trial) {
    const QVector a = rng.integer_point(4, 5), b = rng.integer_point(4, 5), c = rng.integer_point(4, 5);
    CHECK(L.bracket(a, b) == scale(Rat(-1), L.bracket(b, a)));
    CHECK(L.bracket(add(a, c), b) == add(L.bracket(a, b), L.bracket(c, b)));
    // Jacobi on random vectors
    QVector j = add(L.bracket(a, L.bracket(b, c)), L.bracket(b, L.bracket(c, a)));
    j = add(j, L.bracket(c, L.bracket(a, b)));
    CHECK(is_zero(j));
    CHECK(L.ad(a).apply(b) == L.bracket(a, b));
  }
}

TEST_CASE("label combinations round-trip") {
  const std::vector<std::string> labels{"a", "b", "x1", "x2"};
  CHECK(parse_combination("a-b", labels) == v({1, -1, 0, 0}));
  CHECK(parse_combination("2x1+1/2*x2", labels) == QVector{0, 0, 2, Rat(1, 2)});
  CHECK(format_combination(zero_vector(4), labels) == "0");
  CHECK(kind_of([&] { parse_combination("c", labels); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_combination("2*", labels); }) == ErrorKind::ParseError);
  Rng rng(testing::test_seed(), 202);
  for (int trial = 0; trial < 50; ++trial) {
    QVector w(4);
    for (auto& x : w) x = testing::random_rational(rng);
    CHECK(parse_combination(format_combination(w, labels), labels) == w);
  }
}

TEST_CASE("subspace lattice identities") {
  Rng rng(testing::test_seed(), 203);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5;
    std::vector<QVector> us, ws;
    for (int k = rng.uniform(0, 3); k > 0; --k) us.push_back(rng.integer_point(n, 2));
    for (int k = rng.uniform(0, 3); k > 0; --k) ws.push_back(rng.integer_point(n, 2));
    const Subspace U = Subspace::span(n, us), W = Subspace::span(n, ws);
    CHECK((U + W).dim() + U.intersect(W).dim() == U.dim() + W.dim());
    CHECK((U + W).contains(U));
    CHECK(U.contains(U.intersect(W)));
    for (const auto& u : us) CHECK(U.contains(u));
    for (const auto& b : U.basis_vectors()) CHECK(U.from_coordinates(U.coordinates(b)) == b);
    // canonical representation
    std::vector<QVector> rev(us.rbegin(), us.rend());
    CHECK(Subspace::span(n, rev) == U);
  }
  CHECK(Subspace::coordinate(3, {0, 2}).contains(v({4, 0, -1})));
  CHECK_FALSE(Subspace::coordinate(3, {0, 2}).contains(v({0, 1, 0})));
  CHECK(Functional(v({1, 0, 0})).vanishes_on(Subspace::coordinate(3, {1, 2})));
}

TEST_CASE("structure of the Heisenberg algebra") {
  const LieAlgebra h = algebras::heisenberg(1);
  CHECK(center(h) == Subspace::coordinate(3, {2}));
  CHECK(derived_subalgebra(h) == Subspace::coordinate(3, {2}));
  CHECK(is_nilpotent(h));
  CHECK(is_solvable(h));
  CHECK(centralizer(h, v({1, 0, 0})) == Subspace::coordinate(3, {0, 2}));
  CHECK(normalizer(h, Subspace::coordinate(3, {0})) == Subspace::coordinate(3, {0, 2}));
  CHECK(is_ideal(h, Subspace::coordinate(3, {0, 2})));
  CHECK_FALSE(is_abelian(h, Subspace::coordinate(3, {0, 1})));
  const Quotient q = quotient(h, center(h));
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.is_abelian());
  CHECK(kind_of([&] { quotient(h, Subspace::coordinate(3, {0})); }) == ErrorKind::NotAnIdeal);
  CHECK(kind_of([&] { restrict_to(h, Subspace::coordinate(3, {0, 1})); }) == ErrorKind::NotASubalgebra);
  CHECK(kind_of([&] { center(h) + Subspace(4); }) == ErrorKind::AmbientMismatch);
  const Restriction r = restrict_to(h, Subspace::coordinate(3, {0, 2}));
  CHECK(r.algebra.dim() == 2);
  CHECK(r.algebra.is_abelian());
}

TEST_CASE("sl2 is not solvable") {
  const LieAlgebra s = algebras::sl2();
  CHECK_FALSE(is_solvable(s));
  CHECK(center(s).dim() == 0);
  CHECK(derived_subalgebra(s).dim() == 3);
}

TEST_CASE("quotient projection and preimage") {
  Rng rng(testing::test_seed(), 204);
  for (int trial = 0; trial < 20; ++trial) {
    const LieAlgebra L = testing::random_perturbation(rng, 8);
    const Subspace Z = center(L);
    if (Z.dim() == 0 || Z.dim() == L.dim()) continue;
    const Quotient Q = quotient(L, Z);
    const QVector a = rng.integer_point(L.dim(), 3), b = rng.integer_point(L.dim(), 3);
    const auto& pr = Q.projection;
    CHECK(pr.apply(L.bracket(a, b)) == Q.algebra.bracket(pr.apply(a), pr.apply(b)));
    CHECK(pr.preimage(Subspace(Q.algebra.dim())) == Z);
    CHECK(Z.contains(sub(pr.lift(pr.apply(a)), a)));
  }
}

TEST_CASE("direct and semidirect products") {
  const LieAlgebra h = algebras::heisenberg(1);
  const LieAlgebra hh = direct_product(h, h);
  CHECK(hh.dim() == 6);
  CHECK(hh.label(3) == "x'");
  CHECK(center(hh).dim() == 2);

  const LieAlgebra two = algebras::twodim_nonabelian();
  const LieAlgebra sd = semidirect_product(two, adjoint_action(two), 2);
  CHECK(sd.dim() == 4);
  std::vector<QMatrix> bad = adjoint_action(two);
  bad[0] = QMatrix::identity(2);
  CHECK(kind_of([&] { semidirect_product(two, bad, 2); }) == ErrorKind::NotARepresentation);
  CHECK(kind_of([&] { semidirect_product(two, {QMatrix::identity(2)}, 2); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("derivation and Heisenberg extensions validate their input") {
  const LieAlgebra h = algebras::heisenberg(1);
  QMatrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 2) = 2;
  CHECK(is_derivation(h, d));
  CHECK(derivation_extend(h, d).dim() == 4);
  d(2, 2) = 1;
  CHECK_FALSE(is_derivation(h, d));
  CHECK(kind_of([&] { derivation_extend(h, d); }) == ErrorKind::NotADerivation);

  const LieAlgebra e = heisenberg_extend(h, v({0, 0, 1}), 2);
  CHECK(e.dim() == 7);
  CHECK(e.bracket(unit_vector(7, 3), unit_vector(7, 5)) == unit_vector(7, 2));
  CHECK(kind_of([&] { heisenberg_extend(h, v({1, 0, 0}), 1); }) == ErrorKind::NotCentral);
  CHECK(kind_of([&] { heisenberg_extend(h, v({0, 0, 0}), 1); }) == ErrorKind::ZeroVector);
}

TEST_CASE("tensor with a commutative algebra") {
  const LieAlgebra h = algebras::heisenberg(1);
  const LieAlgebra t = tensor_commutative(truncated_polynomial(2), h);
  CHECK(t.dim() == 6);
  CHECK(center(t).dim() == 2);
  CHECK(kind_of([&] { tensor_commutative(matrix_algebra(2), h); }) == ErrorKind::NotCommutative);
  CHECK(tensor_commutative(truncated_polynomial(1), h).table() == h.table());
}

TEST_CASE("matrix Lie algebras") {
  QMatrix a(2, 2), b(2, 2);
  a(0, 1) = 1;
  b(1, 0) = 1;
  CHECK(kind_of([&] { matrix_lie_algebra({a, b}, {"a", "b"}); }) == ErrorKind::NotASubalgebra);
  CHECK(kind_of([&] { matrix_lie_algebra({a, a}, {"a", "b"}); }) == ErrorKind::PreconditionViolated);
  CHECK(matrix_lie_algebra({a, a * b - b * a, b}, {"e", "h", "f"}).dim() == 3);
}

TEST_CASE("associative and left-symmetric algebras") {
  const AssocAlgebra k2 = truncated_polynomial(2);
  REQUIRE(k2.unit().has_value());
  CHECK(*k2.unit() == v({1, 0}));
  CHECK(k2.is_commutative());
  CHECK(matrix_algebra(2).unit().has_value());
  CHECK_FALSE(matrix_algebra(2).is_commutative());
  CHECK_FALSE(AssocAlgebra({"a"}, {}).unit().has_value());
  // a*a = b, b*a = a is not associative
  CHECK(kind_of([] {
          AssocAlgebra({"a", "b"}, {{0, 0, {{1, Rat(1)}}}, {1, 0, {{0, Rat(1)}}}});
        }) == ErrorKind::NotAssociative);
  CHECK(kind_of([] { AssocAlgebra({"a"}, {{0, 0, {{0, Rat(1)}}}}, "", v({2})); }) == ErrorKind::NoUnit);
  CHECK(kind_of([] {
          AssocAlgebra({"a"}, {{0, 0, {{0, Rat(1)}}}, {0, 0, {{0, Rat(1)}}}});
        }) == ErrorKind::DuplicatePair);
  // every associative algebra is left-symmetric
  CHECK(LSAAlgebra::from(matrix_algebra(2)).dim() == 4);
  CHECK(kind_of([] {
          LSAAlgebra({"a", "b"}, {{0, 0, {{1, Rat(1)}}}, {1, 0, {{0, Rat(1)}}}});
        }) == ErrorKind::NotLeftSymmetric);
  const LieAlgebra gl2 = lie_of_associative(matrix_algebra(2));
  CHECK(center(gl2).dim() == 1);
  const LSAData d = lie_of_lsa(zero_product(3));
  CHECK(d.g.is_abelian());
  CHECK(d.action.size() == 3);
}

TEST_CASE("random perturbations are valid Lie algebras with stable invariants under basis change") {
  Rng rng(testing::test_seed(), 205);
  for (int trial = 0; trial < 25; ++trial) {
    const LieAlgebra L = testing::random_perturbation(rng, 10);
    const LieAlgebra M = testing::change_basis(L, testing::random_sparse_invertible(rng, L.dim()), "w");
    CHECK(center(M).dim() == center(L).dim());
    CHECK(derived_subalgebra(M).dim() == derived_subalgebra(L).dim());
    CHECK(is_nilpotent(M) == is_nilpotent(L));
  }
}

}  // TEST_SUITE
