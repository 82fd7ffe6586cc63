#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/module.hpp"
#include "support.hpp"

using namespace cellkit;
using namespace testing_support;

namespace {

// Column vectors for M_2: E_ij e_k = δ_jk e_i.
AlgebraModule natural_module(const Algebra& m2) {
  const RingSpec& r = m2.ring();
  AlgebraModule v{m2, 2, {}};
  for (std::size_t a = 0; a < 4; ++a) {
    Matrix act(r, 2, 2);
    act(a / 2, a % 2) = Scalar::one(r);
    v.action.push_back(act);
  }
  return v;
}

}  // namespace

TEST_CASE("natural module of M_2") {
  const auto Q = RingSpec::rationals();
  Algebra m2 = matrix_units(Q, 2);
  AlgebraModule v = natural_module(m2);
  CHECK_FALSE(representation_defect(v).has_value());
  // Hom(A, V) ≅ V and End(V) is the scalars
  CHECK(hom_space(regular_module(m2), v).size() == 2);
  CHECK(hom_space(v, v).size() == 1);
  CHECK(hom_space(v, regular_module(m2)).size() == 2);
}

TEST_CASE("a broken action is reported") {
  const auto Q = RingSpec::rationals();
  AlgebraModule v = natural_module(matrix_units(Q, 2));
  v.action[1](0, 1) = Scalar(Q, 2L);
  CHECK(representation_defect(v).has_value());
}

TEST_CASE("submodules and quotients of the triangular algebra") {
  const auto F2 = RingSpec::prime_field(2);
  Algebra t = upper_triangular(F2);
  AlgebraModule reg = regular_module(t);
  // A·E12 = span{E12} is a left ideal
  AlgebraModule sub = submodule(reg, {unit_vector(F2, 3, 1)});
  CHECK(sub.rank == 1);
  CHECK_FALSE(representation_defect(sub).has_value());
  AlgebraModule quo = quotient_module(reg, {unit_vector(F2, 3, 1)});
  CHECK(quo.rank == 2);
  CHECK_FALSE(representation_defect(quo).has_value());
  // span{E22} is not: E12 · E22 = E12
  CHECK_THROWS_AS(submodule(reg, {unit_vector(F2, 3, 2)}), Error);
}

TEST_CASE("Loewy layers of the triangular algebra") {
  const auto Q = RingSpec::rationals();
  Algebra t = upper_triangular(Q);
  auto layers = radical_filtration(regular_module(t), {unit_vector(Q, 3, 1)});
  REQUIRE(layers.size() == 2);
  CHECK(layers[0].rank == 2);
  CHECK(layers[1].rank == 1);
}

TEST_CASE("hom spaces between indecomposable projectives of the triangular algebra") {
  // P1 = A e11 = span{E11}, P2 = A e22 = span{E12, E22}; Hom(P_i, P_j) ≅ e_i A e_j
  const auto Q = RingSpec::rationals();
  AlgebraModule reg = regular_module(upper_triangular(Q));
  AlgebraModule p1 = submodule(reg, {unit_vector(Q, 3, 0)});
  AlgebraModule p2 = submodule(reg, {unit_vector(Q, 3, 1), unit_vector(Q, 3, 2)});
  CHECK(hom_space(p1, p1).size() == 1);
  CHECK(hom_space(p1, p2).size() == 1);
  CHECK(hom_space(p2, p1).size() == 0);
  CHECK(hom_space(p2, p2).size() == 1);
}

TEST_CASE("hom spaces need a field") {
  AlgebraModule reg = regular_module(upper_triangular(RingSpec::integers()));
  CHECK_THROWS_AS(hom_space(reg, reg), Error);
}
