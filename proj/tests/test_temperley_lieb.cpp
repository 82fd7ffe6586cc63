#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/temperley_lieb.hpp"

using namespace cellkit;

namespace {

// C_0 = 1, C_{n+1} = Σ C_i C_{n-i}
std::size_t catalan_rec(int n) {
  std::vector<std::size_t> c{1};
  for (int m = 1; m <= n; ++m) {
    std::size_t s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

Vector basis(const TLData& tl, std::size_t i) { return unit_vector(tl.algebra.ring(), tl.algebra.dim(), i); }

}  // namespace

TEST_CASE("dimension is Catalan") {
  for (int n = 1; n <= 6; ++n) CHECK(tl_algebra(RingSpec::integers(), n, 1L).algebra.dim() == catalan_rec(n));
}

TEST_CASE("generator relations") {
  const auto Z = RingSpec::integers();
  for (long delta : {0L, 1L, 2L, -3L}) {
    TLData tl = tl_algebra(Z, 4, delta);
    const Algebra& a = tl.algebra;
    for (int i = 1; i < 4; ++i) {
      const Vector u = basis(tl, tl_generator_index(tl, i));
      Vector want = u;
      for (auto& x : want) x *= Scalar(Z, delta);
      CHECK(a.multiply(u, u) == want);
      if (i + 1 < 4) {
        const Vector v = basis(tl, tl_generator_index(tl, i + 1));
        CHECK(a.multiply(a.multiply(u, v), u) == u);
        CHECK(a.multiply(a.multiply(v, u), v) == v);
      }
    }
    const Vector u1 = basis(tl, tl_generator_index(tl, 1)), u3 = basis(tl, tl_generator_index(tl, 3));
    CHECK(a.multiply(u1, u3) == a.multiply(u3, u1));
    CHECK(a.unit() == basis(tl, tl_identity_index(tl)));
  }
}

TEST_CASE("composition counts loops") {
  TLData tl = tl_algebra(RingSpec::integers(), 2, 0L);
  const Diagram& u = tl.diagrams[tl_generator_index(tl, 1)];
  auto [d, loops] = compose(u, u);
  CHECK(d == u);
  CHECK(loops == 1);
  const Diagram& id = tl.diagrams[tl_identity_index(tl)];
  CHECK(compose(id, u).second == 0);
  CHECK_THROWS_AS(compose(u, Diagram(6, 0)), Error);
}

TEST_CASE("cell datum of TL_3") {
  TLData tl = tl_algebra(RingSpec::integers(), 3, 2L);
  CHECK(tl.datum.labels == std::vector<std::string>{"1", "3"});
  CHECK(tl.datum.tableaux[0] == std::vector<std::string>{"()|", "|()"});
  CHECK(tl.datum.tableaux[1] == std::vector<std::string>{"|||"});
  CHECK(tl.datum.less(0, 1));
  CHECK(validate_cell_datum(tl.algebra, tl.datum).ok());
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(tl_algebra(RingSpec::integers(), 0, 1L), Error);
  CHECK_THROWS_AS(tl_algebra(RingSpec::integers(), 2, Scalar(RingSpec::rationals(), 1L)), Error);
  TLData tl = tl_algebra(RingSpec::integers(), 2, 1L);
  CHECK_THROWS_AS(tl_generator_index(tl, 2), Error);
}
