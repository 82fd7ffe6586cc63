#include "cellkit/matrix.hpp"

#include "cellkit/errors.hpp"

#include <ostream>
#include <sstream>

namespace cellkit {

Matrix::Matrix(const RingSpec& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::identity(const RingSpec& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
  return m;
}

Matrix Matrix::from_rows(const RingSpec& ring,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(ring, copy);
}

Matrix Matrix::from_rows(const RingSpec& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t n = rows.size();
  std::size_t m = n == 0 ? 0 : rows.front().size();
  Matrix result(ring, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m; ++j) result(i, j) = Scalar(ring, rows[i][j]);
  }
  return result;
}

Matrix Matrix::from_columns(const RingSpec& ring, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix result(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) result.set_column(j, columns[j]);
  return result;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply: vector length");
  Vector y = zero_vector(ring_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) y[i].add_product(a, x[j]);
    }
  }
  return y;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

void Matrix::add_scaled(const Scalar& c, const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix add_scaled");
  }
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!other.data_[k].is_zero()) data_[k].add_product(c, other.data_[k]);
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  if (a.ring_ != b.ring_) throw Error(ErrorCode::RingMismatch, "matrix product");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

Matrix operator*(const Scalar& c, Matrix m) {
  for (auto& x : m.data_) x *= c;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

Matrix reduce(const Matrix& m, const RingSpec& target) {
  Matrix result(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) result(i, j) = reduce(m(i, j), target);
  }
  return result;
}

}  // namespace cellkit
