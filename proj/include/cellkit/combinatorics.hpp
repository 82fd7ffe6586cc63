#pragma once

#include "cellkit/ring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cellkit {

using Partition = std::vector<int>;
using Composition = std::vector<int>;

/// Partitions of d with at most `max_parts` parts, in ascending
/// lexicographic order. This order extends dominance.
std::vector<Partition> partitions(int d, int max_parts);

/// Compositions of d into exactly n nonnegative parts, lexicographic order.
std::vector<Composition> compositions(int d, int n);

/// λ ⊴ μ: every prefix sum of λ is at most that of μ. Throws SizeMismatch
/// when |λ| ≠ |μ|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// "(2,1)"
std::string partition_label(const Partition& p);

struct Tableau {
  std::vector<std::vector<int>> rows;

  /// Rows concatenated, separated by '/': "11/2".
  std::string to_string() const;
  /// Entries read row by row.
  std::vector<int> reading_word() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Semistandard tableaux of shape λ with entries in 1..n, ordered
/// lexicographically by reading word.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int n);

/// Digit sum of d in base p; α_0(d) = d. Throws NotPrime for other p.
std::int64_t alpha_p(std::int64_t d, std::int64_t p);

Integer binomial(unsigned long n, unsigned long k);
Integer catalan(unsigned long n);

}  // namespace cellkit
