#include "cellkit/combinatorics.hpp"

#include "cellkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cellkit {

std::vector<Partition> partitions(int d, int max_parts) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "partitions of a negative number");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int part = 1; part <= std::min(remaining, cap); ++part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions(int d, int n) {
  if (d < 0 || n < 0) throw Error(ErrorCode::InvalidArgument, "compositions need d, n >= 0");
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (static_cast<int>(cur.size()) == n - 1) {
      cur.push_back(remaining);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int part = 0; part <= remaining; ++part) {
      cur.push_back(part);
      rec(remaining - part);
      cur.pop_back();
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(d);
  return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  const int a = std::accumulate(lambda.begin(), lambda.end(), 0);
  const int b = std::accumulate(mu.begin(), mu.end(), 0);
  if (a != b) throw Error(ErrorCode::SizeMismatch, "dominance needs partitions of the same size");
  int sa = 0, sb = 0;
  for (std::size_t j = 0; j < std::max(lambda.size(), mu.size()); ++j) {
    sa += j < lambda.size() ? lambda[j] : 0;
    sb += j < mu.size() ? mu[j] : 0;
    if (sa > sb) return false;
  }
  return true;
}

std::string partition_label(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string Tableau::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += "/";
    for (int x : rows[r]) s += std::to_string(x);
  }
  return s;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int n) {
  std::vector<Tableau> out;
  Tableau t;
  for (int len : lambda) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  // fill cells in reading order; each cell is bounded below by its left and
  // upper neighbours, which are already placed
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t.rows[r][c] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::int64_t alpha_p(std::int64_t d, std::int64_t p) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "alpha_p needs d >= 0");
  if (p == 0) return d;
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::int64_t s = 0;
  for (; d > 0; d /= p) s += d % p;
  return s;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace cellkit
