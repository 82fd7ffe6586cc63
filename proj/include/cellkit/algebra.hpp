#pragma once

#include "cellkit/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cellkit {

struct Term {
  std::size_t index;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Nonzero terms sorted by ascending basis index.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, const RingSpec& ring, std::size_t dim);

/// A finite free algebra over a RingSpec, presented by structure constants
/// b_i b_j = Σ_k γ^k_ij b_k. Immutable; copies share the underlying table.
class Algebra {
 public:
  Algebra();
  /// `products` has dim*dim entries, row-major in (i, j).
  Algebra(const RingSpec& ring, std::vector<std::string> labels,
          std::vector<SparseVector> products, Vector unit);

  const RingSpec& ring() const noexcept { return data_->ring; }
  std::size_t dim() const noexcept { return data_->labels.size(); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const SparseVector& product(std::size_t i, std::size_t j) const {
    return data_->products[i * dim() + j];
  }
  const Vector& unit() const noexcept { return data_->unit; }

  /// Product of two elements given by coefficient vectors.
  Vector multiply(const Vector& x, const Vector& y) const;
  /// x · b_j
  Vector multiply_basis_right(const Vector& x, std::size_t j) const;
  /// b_i · y
  Vector multiply_basis_left(std::size_t i, const Vector& y) const;

  bool same_table(const Algebra& other) const noexcept { return data_ == other.data_; }
  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    RingSpec ring;
    std::vector<std::string> labels;
    std::vector<SparseVector> products;
    Vector unit;
  };
  std::shared_ptr<const Data> data_;
};

struct AlgebraViolation {
  enum class Kind { Associativity, LeftUnit, RightUnit, Malformed };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string message;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;  ///< first `kMaxRecorded` found
  std::size_t total = 0;                     ///< number found overall
  bool ok() const noexcept { return total == 0; }

  static constexpr std::size_t kMaxRecorded = 256;
};

/// Checks (b_i b_j) b_k = b_i (b_j b_k) for every basis triple and the unit
/// law on both sides.
AlgebraReport validate_algebra(const Algebra& a);

/// Same basis, every constant pushed through the canonical reduction.
Algebra base_change(const Algebra& a, const RingSpec& target);

/// A / span{b_i : i ∈ ideal}. Throws NotAnIdeal with a witness product.
Algebra quotient_by_basis_ideal(const Algebra& a, const std::vector<std::size_t>& ideal);

/// b_i ∘ b_j := b_j b_i
Algebra opposite(const Algebra& a);

/// Left multiplication by x as a dim × dim matrix.
Matrix left_multiplication(const Algebra& a, const Vector& x);

}  // namespace cellkit
