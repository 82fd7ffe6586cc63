#pragma once

#include "cellkit/cellular.hpp"
#include "cellkit/combinatorics.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cellkit {

/// Multi-index pair (i, j) in I(n,d)², entries 1..n.
using IndexPair = std::pair<std::vector<int>, std::vector<int>>;

struct SchurData {
  int n = 0, d = 0;
  std::vector<IndexPair> orbit_reps;            ///< ξ basis, lexicographically least representatives
  Algebra algebra;
  std::vector<Composition> weights;             ///< Λ(n,d)
  std::vector<std::size_t> weight_index;        ///< basis index of ξ_λ per weight
  std::vector<Partition> partitions;            ///< Λ⁺(n,d), increasing for dominance
  std::vector<Vector> chain_idempotents;        ///< e^1, ..., e^t
  std::vector<std::size_t> involution;          ///< ξ_{i,j} -> ξ_{j,i}

  /// Index of the orbit of (i, j).
  std::size_t orbit_index(const std::vector<int>& i, const std::vector<int>& j) const;
};

inline constexpr std::int64_t kDefaultSchurLimit = 10000;

/// S_R(n, d) in the ξ basis. Throws SizeLimit if n^d exceeds `limit`.
SchurData schur_algebra(const RingSpec& ring, int n, int d, std::int64_t limit = kDefaultSchurLimit);

struct HeredityIdeal {
  std::size_t k;                  ///< 1-based position in the chain
  Partition partition;            ///< λ^k
  std::vector<Vector> basis;      ///< echelon basis of S e^k S
  bool iota_stable;
};

/// J_k = S e^k S for k = 1..t, spans computed over `field` (ℚ when the
/// algebra's own ring is not a field). Throws ChainNotIncreasing.
std::vector<HeredityIdeal> heredity_chain(const SchurData& sd);

struct CellularPresentation {
  Algebra algebra;           ///< same algebra, cellular basis
  CellDatum datum;
  Matrix change_of_basis;    ///< over ℤ; column c holds the cellular basis element c in ξ coordinates
};

/// Codeterminants Y_{S,T} = ξ_{i(S),ℓ(λ)} ξ_{ℓ(λ),i(T)} as a cellular basis,
/// with reversed dominance as the cell order. Throws CandidateNotBasis or
/// CandidateNotCellular.
CellularPresentation codeterminant_cell_datum(const SchurData& sd);

}  // namespace cellkit
