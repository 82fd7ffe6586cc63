#pragma once

#include "cellkit/algebra.hpp"

#include <string>
#include <vector>

namespace testing_support {

using namespace cellkit;

// Full matrix algebra M_n(R) on the units E_ij, E_ij E_kl = δ_jk E_il.
inline Algebra matrix_units(const RingSpec& ring, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (a % n == b / n) products[a * dim + b].push_back({(a / n) * n + b % n, Scalar::one(ring)});
    }
  }
  Vector unit = zero_vector(ring, dim);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = Scalar::one(ring);
  return Algebra(ring, labels, products, unit);
}

// Upper triangular 2×2 matrices on E11, E12, E22.
inline Algebra upper_triangular(const RingSpec& ring) {
  const Scalar one = Scalar::one(ring);
  std::vector<SparseVector> p(9);
  p[0 * 3 + 0] = {{0, one}};
  p[0 * 3 + 1] = {{1, one}};
  p[1 * 3 + 2] = {{1, one}};
  p[2 * 3 + 2] = {{2, one}};
  Vector unit{one, Scalar::zero(ring), one};
  return Algebra(ring, {"E11", "E12", "E22"}, p, unit);
}

// Group algebra of the cyclic group of order n on g^0..g^{n-1}.
inline Algebra cyclic_group(const RingSpec& ring, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<SparseVector> p(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) p[a * n + b] = {{(a + b) % n, Scalar::one(ring)}};
  }
  return Algebra(ring, labels, p, unit_vector(ring, n, 0));
}

// Copy of `a` with one structure constant replaced.
inline Algebra perturb(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  const std::size_t dim = a.dim();
  std::vector<SparseVector> p(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) p[x * dim + y] = a.product(x, y);
  }
  Vector v = to_dense(p[i * dim + j], a.ring(), dim);
  v[k] += c;
  p[i * dim + j] = to_sparse(v);
  return Algebra(a.ring(), a.labels(), p, a.unit());
}

}  // namespace testing_support
