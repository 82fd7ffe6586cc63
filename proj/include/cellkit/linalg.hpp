#pragma once

#include "cellkit/matrix.hpp"

#include <optional>
#include <vector>

namespace cellkit {

/// Row rank over the fraction field. Integer matrices are embedded in ℚ and
/// eliminated fraction-free (Bareiss); ℤ/m with composite m is refused.
std::size_t rank(const Matrix& m);

/// Columns span {v : M v = 0}. Over ℤ the kernel is taken over ℚ and each
/// column scaled to a primitive integer vector.
Matrix kernel_basis(const Matrix& m);

/// Exact determinant: Bareiss over ℤ and ℚ, inverse pivots over fields,
/// integer lift for composite ℤ/m.
Scalar determinant(const Matrix& m);

struct SmithForm {
  Matrix U;  ///< unimodular, rows × rows
  Matrix S;  ///< diagonal, d1 | d2 | ... , all >= 0
  Matrix V;  ///< unimodular, cols × cols
};

/// U·M·V = S. The pivot at each stage is the entry of smallest nonzero
/// absolute value in the remaining block, first in row-major order on ties.
SmithForm smith_normal_form(const Matrix& m);

/// gcd of all entries of an integer matrix (0 for the zero matrix).
Integer content_gcd(const Matrix& m);

/// Some x with A x = b, or nullopt. Over ℤ only integral solutions count.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix over a field, or of a unimodular integer matrix.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form over a field. Returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);

/// Incrementally built subspace of K^n kept in row echelon form with unit
/// pivots. Reducing a vector against it also yields its coordinates in the
/// stored rows, which is how submodule and quotient actions are read off.
class Echelon {
 public:
  Echelon(const RingSpec& field, std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v in place; if `coords` is given it receives the coefficient of
  /// each stored row (v_original = Σ coords[r] rows[r] + v_reduced).
  void reduce(Vector& v, Vector* coords = nullptr) const;
  bool contains(Vector v) const;
  /// Returns true if v was independent of the current rows.
  bool insert(Vector v);

 private:
  RingSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;  // ascending, parallel to rows_
};

}  // namespace cellkit
