#include <doctest.h>

#include "cellkit/linalg.hpp"
#include "cellkit/qh.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/temperley_lieb.hpp"

using namespace cellkit;

namespace {

struct Case {
  std::string name;
  Algebra algebra;
  CellDatum datum;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (auto [n, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    CellularPresentation p = codeterminant_cell_datum(schur_algebra(RingSpec::integers(), n, d));
    out.push_back({"S(" + std::to_string(n) + "," + std::to_string(d) + ")", p.algebra, p.datum});
  }
  for (int n = 2; n <= 5; ++n) {
    for (long delta : {0L, 1L, 2L, 3L}) {
      TLData tl = tl_algebra(RingSpec::integers(), n, delta);
      out.push_back({"TL_" + std::to_string(n) + "(" + std::to_string(delta) + ")", tl.algebra, tl.datum});
    }
  }
  return out;
}

const std::int64_t kPrimes[] = {2, 3, 5, 7};

}  // namespace

TEST_CASE("cell modules count the dimension") {
  for (const auto& c : cases()) {
    std::size_t total = 0;
    for (const auto& m : c.datum.tableaux) total += m.size() * m.size();
    CHECK(total == c.algebra.dim());
  }
}

TEST_CASE("bad primes are exactly the failing residue fields") {
  for (const auto& c : cases()) {
    CAPTURE(c.name);
    QHReport z = bad_primes_over_Z(c.algebra, c.datum);
    for (std::int64_t p : kPrimes) {
      const bool reported = std::find(z.bad_primes.begin(), z.bad_primes.end(), Integer(p)) != z.bad_primes.end();
      const bool fails = !qh_check_field(c.algebra, c.datum, RingSpec::prime_field(p)).verdict;
      CHECK(fails == (reported || z.fatal));
    }
    // QH over Z forces QH over every residue field and over Q
    if (z.verdict) CHECK(qh_check_field(c.algebra, c.datum, RingSpec::rationals()).verdict);
  }
}

TEST_CASE("radical dimension and kernels of the cell forms") {
  for (const auto& c : cases()) {
    for (std::int64_t p : {2, 3}) {
      CAPTURE(c.name);
      CAPTURE(p);
      FieldAnalysis fa(c.algebra, c.datum, RingSpec::prime_field(p));
      std::size_t squares = 0;
      for (const auto& s : fa.simples()) squares += s.module.rank * s.module.rank;
      CHECK(fa.radical().size() + squares == c.algebra.dim());
      for (std::size_t l = 0; l < c.datum.size(); ++l) {
        // the radical of φ_λ is stable under the action
        const Matrix& g = fa.gram(l).gram;
        CHECK(g.is_symmetric());
        Matrix k = kernel_basis(g);
        const AlgebraModule& m = fa.cell(l).module;
        for (const auto& a : m.action) CHECK((g * (a * k)).is_zero());
      }
    }
  }
}

TEST_CASE("reductions compose") {
  const auto Z = RingSpec::integers();
  TLData tl = tl_algebra(Z, 4, 6L);
  for (std::int64_t p : {2, 3}) {
    const auto f = RingSpec::prime_field(p);
    CHECK(base_change(base_change(tl.algebra, RingSpec::integers_mod(6)), f) == base_change(tl.algebra, f));
  }
}

TEST_CASE("Schur closed form stays under the chain bound") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = d; n <= d + 1; ++n) {
      const std::size_t t = partitions(d, n).size();
      for (std::int64_t p : kPrimes) {
        const auto f = RingSpec::prime_field(p);
        CHECK(*gldim_schur(f, n, d).gldim_exact <= *gldim_bound(t, f));
      }
      CHECK(*gldim_schur(RingSpec::integers(), n, d).gldim_exact <= *gldim_bound(t, RingSpec::integers()));
    }
  }
}
