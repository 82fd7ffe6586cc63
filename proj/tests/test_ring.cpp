#include <doctest.h>

#include "cellkit/errors.hpp"
#include "cellkit/ring.hpp"

#include <random>

using namespace cellkit;

TEST_CASE("ring descriptors round trip") {
  for (const char* s : {"Z", "Q", "Fp:5", "Zm:6"}) CHECK(RingSpec::parse(s).to_string() == s);
  CHECK(RingSpec::parse("F2") == RingSpec::prime_field(2));
  CHECK_THROWS_AS(RingSpec::parse("R"), Error);
  CHECK_THROWS_AS(RingSpec::prime_field(4), Error);
  CHECK_THROWS_AS(RingSpec::integers_mod(1), Error);
}

TEST_CASE("field predicate") {
  CHECK(RingSpec::rationals().is_field());
  CHECK(RingSpec::prime_field(7).is_field());
  CHECK(RingSpec::integers_mod(7).is_field());
  CHECK_FALSE(RingSpec::integers_mod(6).is_field());
  CHECK_FALSE(RingSpec::integers().is_field());
}

TEST_CASE("canonical forms") {
  const auto Q = RingSpec::rationals();
  Scalar x(Q, Integer(6), Integer(-4));
  CHECK(x.to_string() == "-3/2");
  CHECK(x.denominator() == 2);
  const auto F5 = RingSpec::prime_field(5);
  CHECK(Scalar(F5, -1L).residue() == 4);
  CHECK(Scalar(F5, Integer(1), Integer(2)).residue() == 3);
  CHECK_THROWS_AS(Scalar(RingSpec::integers(), Integer(1), Integer(2)), Error);
  CHECK_THROWS_AS(Scalar(RingSpec::integers_mod(6), Integer(1), Integer(2)), Error);
}

TEST_CASE("units and inverses") {
  const auto Z6 = RingSpec::integers_mod(6);
  CHECK(Scalar(Z6, 5L).is_unit());
  CHECK_FALSE(Scalar(Z6, 2L).is_unit());
  CHECK((Scalar(Z6, 5L) * Scalar(Z6, 5L).inverse()).is_one());
  CHECK_THROWS_AS(Scalar(Z6, 3L).inverse(), Error);
  CHECK(Scalar(RingSpec::integers(), -1L).is_unit());
  CHECK_FALSE(Scalar(RingSpec::integers(), 2L).is_unit());
}

TEST_CASE("mixing rings is refused") {
  CHECK_THROWS_AS(Scalar(RingSpec::integers(), 1L) + Scalar(RingSpec::rationals(), 1L), Error);
}

TEST_CASE("modular arithmetic agrees with big integers") {
  // oracle: the same expression evaluated in mpz and reduced at the end
  std::mt19937_64 rng(7);
  for (std::int64_t m : {2LL, 3LL, 6LL, 97LL, (1LL << 61) - 1, 4611686018427387847LL}) {
    const auto R = RingSpec::integers_mod(m);
    std::uniform_int_distribution<std::int64_t> draw(-(1LL << 62), 1LL << 62);
    for (int k = 0; k < 200; ++k) {
      const Integer a(std::to_string(draw(rng))), b(std::to_string(draw(rng))), c(std::to_string(draw(rng)));
      Scalar s = Scalar(R, a) * Scalar(R, b) - Scalar(R, c);
      s.add_product(Scalar(R, b), Scalar(R, c));
      Integer want = a * b - c + b * c;
      want %= Integer(std::to_string(m));
      if (want < 0) want += Integer(std::to_string(m));
      CHECK(s.numerator() == want);
    }
  }
}

TEST_CASE("rational arithmetic agrees with mpq") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> draw(-50, 50);
  const auto Q = RingSpec::rationals();
  for (int k = 0; k < 300; ++k) {
    int n1 = draw(rng), d1 = draw(rng), n2 = draw(rng), d2 = draw(rng);
    if (d1 == 0) d1 = 1;
    if (d2 == 0) d2 = 3;
    Rational a(n1, d1), b(n2, d2);
    a.canonicalize();
    b.canonicalize();
    Scalar x(Q, Integer(n1), Integer(d1)), y(Q, Integer(n2), Integer(d2));
    CHECK((x * y).rational() == a * b);
    CHECK((x - y).rational() == a - b);
    if (n2 != 0) CHECK((x / y).rational() == a / b);
  }
}

TEST_CASE("canonical reductions") {
  const auto Z = RingSpec::integers();
  CHECK(reduce(Scalar(Z, -7L), RingSpec::prime_field(3)).residue() == 2);
  CHECK(reduce(Scalar(RingSpec::integers_mod(6), 5L), RingSpec::prime_field(3)).residue() == 2);
  CHECK(has_canonical_map(Z, RingSpec::rationals()));
  CHECK_FALSE(has_canonical_map(RingSpec::rationals(), RingSpec::prime_field(2)));
  CHECK_FALSE(has_canonical_map(RingSpec::integers_mod(6), RingSpec::prime_field(5)));
  CHECK_THROWS_AS(reduce(Scalar(RingSpec::rationals(), 1L), Z), Error);
}

TEST_CASE("number theory helpers") {
  // oracle: naive divisor scans
  for (std::int64_t n = 1; n < 400; ++n) {
    int divisors = 0;
    for (std::int64_t k = 1; k <= n; ++k) divisors += n % k == 0;
    CHECK(is_prime(n) == (divisors == 2));
    bool sqf = true;
    for (std::int64_t k = 2; k * k <= n; ++k) sqf = sqf && n % (k * k) != 0;
    CHECK(is_squarefree(n) == sqf);
  }
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(is_prime(4611686018427387847LL));
}
