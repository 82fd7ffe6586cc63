#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/module.hpp"
#include "support.hpp"

using namespace cellkit;
using namespace testing_support;

TEST_CASE("matrix units, triangular and group algebras are associative and unital") {
  for (const auto& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(2)}) {
    CHECK(validate_algebra(matrix_units(ring, 2)).ok());
    CHECK(validate_algebra(matrix_units(ring, 3)).ok());
    CHECK(validate_algebra(upper_triangular(ring)).ok());
    CHECK(validate_algebra(cyclic_group(ring, 4)).ok());
  }
}

TEST_CASE("a perturbed constant breaks associativity") {
  const auto Z = RingSpec::integers();
  Algebra a = perturb(matrix_units(Z, 2), 1, 2, 0, Scalar(Z, 1L));  // E12 E21 = E11 + E11
  AlgebraReport r = validate_algebra(a);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.front().kind == AlgebraViolation::Kind::Associativity);
}

TEST_CASE("a wrong unit is reported on the failing side") {
  const auto Z = RingSpec::integers();
  Algebra good = upper_triangular(Z);
  Algebra bad(Z, good.labels(), {good.product(0, 0), good.product(0, 1), good.product(0, 2), good.product(1, 0),
                                 good.product(1, 1), good.product(1, 2), good.product(2, 0), good.product(2, 1),
                                 good.product(2, 2)},
              unit_vector(Z, 3, 0));
  AlgebraReport r = validate_algebra(bad);
  CHECK_FALSE(r.ok());
  bool unit_failure = false;
  for (const auto& v : r.violations) {
    unit_failure = unit_failure || v.kind == AlgebraViolation::Kind::LeftUnit ||
                   v.kind == AlgebraViolation::Kind::RightUnit;
  }
  CHECK(unit_failure);
}

TEST_CASE("the golden-ratio algebra u^2 = u + 1 is associative") {
  // commutative and two dimensional: every such unital table is associative
  const auto Z = RingSpec::integers();
  const Scalar one = Scalar::one(Z);
  std::vector<SparseVector> p{{{0, one}}, {{1, one}}, {{1, one}}, {{0, one}, {1, one}}};
  CHECK(validate_algebra(Algebra(Z, {"1", "u"}, p, unit_vector(Z, 2, 0))).ok());
}

TEST_CASE("base change reduces every constant") {
  const auto Z = RingSpec::integers();
  Algebra a = perturb(cyclic_group(Z, 3), 1, 1, 2, Scalar(Z, 2L));  // g1 g1 = 3 g2
  CHECK(base_change(a, RingSpec::prime_field(3)).product(1, 1).empty());
  CHECK(base_change(a, RingSpec::prime_field(2)).product(1, 1) ==
        SparseVector{{2, Scalar::one(RingSpec::prime_field(2))}});
  CHECK_THROWS_AS(base_change(base_change(a, RingSpec::rationals()), RingSpec::prime_field(2)), Error);
}

TEST_CASE("quotients by basis ideals") {
  const auto Q = RingSpec::rationals();
  Algebra t = upper_triangular(Q);
  Algebra q = quotient_by_basis_ideal(t, {1});
  CHECK(q.dim() == 2);
  CHECK(validate_algebra(q).ok());
  CHECK_THROWS_AS(quotient_by_basis_ideal(t, {0}), Error);
}

TEST_CASE("opposite algebra") {
  const auto Z = RingSpec::integers();
  Algebra t = upper_triangular(Z);
  Algebra op = opposite(t);
  CHECK(validate_algebra(op).ok());
  CHECK(op.product(1, 0) == t.product(0, 1));
  CHECK(opposite(op) == t);
}

TEST_CASE("left multiplication matrices form a representation") {
  const auto Z = RingSpec::integers();
  Algebra m = matrix_units(Z, 2);
  AlgebraModule reg = regular_module(m);
  CHECK_FALSE(representation_defect(reg).has_value());
  Vector x = unit_vector(Z, 4, 1);
  Vector y = unit_vector(Z, 4, 2);
  CHECK(left_multiplication(m, x).apply(y) == m.multiply(x, y));
}
