#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cellkit;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

// Leibniz expansion; independent of any elimination.
Integer leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) sign *= perm[i] > perm[j] ? -1 : 1;
    }
    Integer term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]).integer();
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_int(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> draw(lo, hi);
  Matrix m(Z, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Z, static_cast<long>(draw(rng)));
  }
  return m;
}

// gcd of all k×k minors
Integer determinantal_divisor(const Matrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
    do {
      Matrix sub(Z, k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (csel[j]) sub(a, b++) = m(i, j);
        }
        ++a;
      }
      g = gcd(g, leibniz(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

}  // namespace

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      Matrix m = random_int(rng, n, n, -9, 9);
      CHECK(determinant(m).integer() == leibniz(m));
      CHECK(determinant(reduce(m, Q)).rational() == Rational(leibniz(m)));
      Integer p7 = leibniz(m) % 7;
      if (p7 < 0) p7 += 7;
      CHECK(determinant(reduce(m, RingSpec::prime_field(7))).residue() == p7.get_si());
    }
  }
}

TEST_CASE("rank, kernel and solve") {
  Matrix m = Matrix::from_rows(Z, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  Matrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(rank(reduce(m, RingSpec::prime_field(2))) == 1);  // rows 1 and 3 agree mod 2
  CHECK_THROWS_AS(rank(reduce(m, RingSpec::integers_mod(6))), Error);

  Matrix a = Matrix::from_rows(Z, {{2, 0}, {0, 3}});
  CHECK(solve(a, Matrix::from_rows(Z, {{4}, {9}})).has_value());
  CHECK_FALSE(solve(a, Matrix::from_rows(Z, {{1}, {0}})).has_value());
  CHECK(solve(reduce(a, Q), Matrix::from_rows(Q, {{1}, {0}})).has_value());
}

TEST_CASE("inverse over fields and of unimodular integer matrices") {
  Matrix u = Matrix::from_rows(Z, {{2, 1}, {1, 1}});
  CHECK(u * inverse(u) == Matrix::identity(Z, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_rows(Z, {{2, 0}, {0, 1}})), Error);
  Matrix f = reduce(Matrix::from_rows(Z, {{1, 2}, {3, 4}}), RingSpec::prime_field(5));
  CHECK(f * inverse(f) == Matrix::identity(f.ring(), 2));
}

TEST_CASE("Smith form invariant factors equal ratios of determinantal divisors") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = random_int(rng, r, c, -6, 6);
    SmithForm f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.S);
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      const Integer dk = determinantal_divisor(m, k);
      if (dk == 0) {
        CHECK(f.S(k - 1, k - 1).integer() == 0);
        continue;
      }
      CHECK(f.S(k - 1, k - 1).integer() == dk / prev);
      prev = dk;
    }
  }
}

TEST_CASE("Smith form of a known matrix") {
  Matrix m = Matrix::from_rows(Z, {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm f = smith_normal_form(m);
  CHECK(f.S == Matrix::from_rows(Z, {{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  CHECK(content_gcd(m) == 2);
  CHECK(content_gcd(Matrix(Z, 2, 2)) == 0);
}

TEST_CASE("echelon coordinates reconstruct the input") {
  const auto F3 = RingSpec::prime_field(3);
  Echelon e(F3, 3);
  CHECK(e.insert({Scalar(F3, 1L), Scalar(F3, 2L), Scalar(F3, 0L)}));
  CHECK(e.insert({Scalar(F3, 0L), Scalar(F3, 1L), Scalar(F3, 1L)}));
  CHECK_FALSE(e.insert({Scalar(F3, 1L), Scalar(F3, 0L), Scalar(F3, 1L)}));
  Vector v{Scalar(F3, 2L), Scalar(F3, 2L), Scalar(F3, 1L)};
  const Vector original = v;
  Vector coords;
  e.reduce(v, &coords);
  Vector back = v;
  for (std::size_t r = 0; r < e.dim(); ++r) {
    for (std::size_t j = 0; j < 3; ++j) back[j].add_product(coords[r], e.rows()[r][j]);
  }
  CHECK(back == original);
}
