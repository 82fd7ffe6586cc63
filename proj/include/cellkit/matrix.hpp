#pragma once

#include "cellkit/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cellkit {

/// Dense row-major matrix whose entries all live in one RingSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const RingSpec& ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingSpec& ring, std::size_t n);
  static Matrix from_rows(const RingSpec& ring,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const RingSpec& ring, const std::vector<std::vector<long>>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const RingSpec& ring, std::size_t rows,
                             const std::vector<Vector>& columns);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;

  /// y = M x
  Vector apply(const Vector& x) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  /// this += c * other
  void add_scaled(const Scalar& c, const Matrix& other);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Entrywise image under the canonical reduction to `target`.
Matrix reduce(const Matrix& m, const RingSpec& target);

}  // namespace cellkit
