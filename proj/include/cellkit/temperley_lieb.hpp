#pragma once

#include "cellkit/cellular.hpp"

#include <string>
#include <vector>

namespace cellkit {

/// A planar pairing of 2n points: top points 0..n-1 left to right, bottom
/// points n..2n-1 left to right. partner[p] is the point joined to p.
using Diagram = std::vector<int>;

struct TLData {
  int n = 0;
  Scalar delta;
  std::vector<Diagram> diagrams;  ///< basis order
  Algebra algebra;
  CellDatum datum;                ///< λ = through strands, M(λ) = half diagrams
};

/// TL_n(δ) with the diagram basis C^λ_{S,T}. The cell datum is validated
/// before returning (throws DatumInvalid if it ever fails).
TLData tl_algebra(const RingSpec& ring, int n, const Scalar& delta);
TLData tl_algebra(const RingSpec& ring, int n, long delta);

/// a·b with a stacked above b; returns the diagram and the number of loops.
std::pair<Diagram, int> compose(const Diagram& a, const Diagram& b);

/// Basis index of u_i (1 ≤ i < n) and of the identity.
std::size_t tl_generator_index(const TLData& tl, int i);
std::size_t tl_identity_index(const TLData& tl);

}  // namespace cellkit
