#include <doctest.h>

#include "cellkit/combinatorics.hpp"
#include "cellkit/errors.hpp"

#include <algorithm>

using namespace cellkit;

namespace {

// s_λ(1^n) by the hook-content formula.
Integer hook_content(const Partition& lambda, int n) {
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
      num *= n + j - static_cast<int>(i);
      den *= arm + leg + 1;
    }
  }
  return num / den;
}

std::int64_t digit_sum(std::int64_t d, std::int64_t p) {
  std::int64_t s = 0;
  for (; d > 0; d /= p) s += d % p;
  return s;
}

}  // namespace

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int d = 0; d < 10; ++d) CHECK(partitions(d, d).size() == static_cast<std::size_t>(p[d]));
  CHECK(partitions(4, 2).size() == 3);
  CHECK(partitions(3, 3).front() == Partition{1, 1, 1});
  CHECK(partitions(3, 3).back() == Partition{3});
}

TEST_CASE("ascending lexicographic order extends dominance") {
  for (int d = 1; d <= 8; ++d) {
    auto ps = partitions(d, d);
    for (std::size_t a = 0; a < ps.size(); ++a) {
      for (std::size_t b = 0; b < ps.size(); ++b) {
        if (a != b && dominance_leq(ps[a], ps[b])) CHECK(a < b);
      }
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq({2, 1}, {3}));
  CHECK(dominance_leq({1, 1, 1}, {2, 1}));
  CHECK_FALSE(dominance_leq({3}, {2, 1}));
  // (3,1,1,1) and (2,2,2) are incomparable
  CHECK_FALSE(dominance_leq({3, 1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(dominance_leq({2, 2, 2}, {3, 1, 1, 1}));
  CHECK_THROWS_AS(dominance_leq({2}, {1, 1, 1}), Error);
}

TEST_CASE("compositions") {
  auto cs = compositions(2, 2);
  CHECK(cs == std::vector<Composition>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(compositions(3, 3).size() == 10);
}

TEST_CASE("semistandard tableaux") {
  auto t = semistandard_tableaux({2}, 2);
  REQUIRE(t.size() == 3);
  CHECK(t[0].to_string() == "11");
  CHECK(t[1].to_string() == "12");
  CHECK(t[2].to_string() == "22");
  auto col = semistandard_tableaux({1, 1}, 2);
  REQUIRE(col.size() == 1);
  CHECK(col[0].to_string() == "1/2");
  CHECK(semistandard_tableaux({1}, 3).size() == 3);
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 5; ++d) {
      for (const auto& lambda : partitions(d, n)) {
        CHECK(Integer(semistandard_tableaux(lambda, n).size()) == hook_content(lambda, n));
      }
    }
  }
}

TEST_CASE("alpha is the base-p digit sum") {
  CHECK(alpha_p(2, 2) == 1);
  CHECK(alpha_p(5, 2) == 2);
  CHECK(alpha_p(5, 3) == 3);
  for (std::int64_t d = 0; d < 50; ++d) {
    CHECK(alpha_p(d, 0) == d);
    for (std::int64_t p : {2, 3, 5, 7}) CHECK(alpha_p(d, p) == digit_sum(d, p));
  }
  CHECK_THROWS_AS(alpha_p(5, 4), Error);
}

TEST_CASE("binomials and Catalan numbers") {
  CHECK(binomial(6, 3) == 20);
  const int c[] = {1, 1, 2, 5, 14, 42, 132};
  for (unsigned long n = 0; n < 7; ++n) CHECK(catalan(n) == c[n]);
}
