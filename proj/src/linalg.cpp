#include "cellkit/linalg.hpp"

#include "cellkit/errors.hpp"

#include <algorithm>
#include <utility>

namespace cellkit {

namespace {

/// Dense integer matrix used by the fraction-free kernels.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Integer& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
};

void require_not_composite(const RingSpec& ring, const char* what) {
  if (ring.kind() == RingKind::IntegersMod && !ring.is_field()) {
    throw Error(ErrorCode::CompositeModulusRank,
                std::string(what) + " is undefined over " + ring.to_string());
  }
}

/// Integer lift of a ℤ, ℚ or ℤ/m matrix. Rows of a rational matrix are
/// scaled by the lcm of their denominators; `row_scale` receives the
/// product of those factors.
IntMatrix integer_lift(const Matrix& m, Integer* row_scale = nullptr) {
  IntMatrix out(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.ring().kind() == RingKind::Rationals) {
      Integer l = 1;
      for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& q = m(i, j).rational();
        out(i, j) = q.get_num() * (l / q.get_den());
      }
      scale *= l;
    } else {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).numerator();
    }
  }
  if (row_scale) *row_scale = scale;
  return out;
}

std::size_t bareiss_rank(IntMatrix m) {
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Integer& x = m(i, j);
        x *= m(r, c);
        mpz_submul(x.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Integer bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m(i, j);
        x *= m(k, k);
        mpz_submul(x.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Matrix to_matrix(const RingSpec& ring, const IntMatrix& m) {
  Matrix out(ring, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = Scalar(ring, m(i, j));
  }
  return out;
}

Matrix to_rationals(const Matrix& m) {
  if (m.ring().kind() == RingKind::Rationals) return m;
  return reduce(m, RingSpec::rationals());
}

// Truncated quotient, as used for Euclidean steps in the Smith reduction.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<std::size_t> rref_in_place(Matrix& m) {
  if (!m.ring().is_field()) {
    require_not_composite(m.ring(), "row reduction");
    throw Error(ErrorCode::WrongRing, "row reduction needs a field, got " + m.ring().to_string());
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j).sub_product(f, m(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  const RingSpec& ring = m.ring();
  require_not_composite(ring, "rank");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (ring.kind() == RingKind::Integers || ring.kind() == RingKind::Rationals) {
    return bareiss_rank(integer_lift(m));
  }
  Matrix copy = m;
  return rref_in_place(copy).size();
}

Matrix kernel_basis(const Matrix& m) {
  const RingSpec& ring = m.ring();
  require_not_composite(ring, "kernel");
  if (ring.kind() == RingKind::Integers) {
    Matrix rational = kernel_basis(to_rationals(m));
    Matrix out(ring, rational.rows(), rational.cols());
    for (std::size_t j = 0; j < rational.cols(); ++j) {
      Integer l = 1, g = 0;
      for (std::size_t i = 0; i < rational.rows(); ++i) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rational(i, j).rational().get_den_mpz_t());
      }
      std::vector<Integer> col(rational.rows());
      for (std::size_t i = 0; i < rational.rows(); ++i) {
        const Rational& q = rational(i, j).rational();
        col[i] = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), col[i].get_mpz_t());
      }
      for (std::size_t i = 0; i < rational.rows(); ++i) out(i, j) = Scalar(ring, Integer(col[i] / g));
    }
    return out;
  }
  Matrix r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(ring, m.cols(), m.cols() - pivots.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = Scalar::one(ring);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], col) = -r(i, f);
    ++col;
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const RingSpec& ring = m.ring();
  switch (ring.kind()) {
    case RingKind::Integers: return Scalar(ring, bareiss_det(integer_lift(m)));
    case RingKind::Rationals: {
      Integer scale;
      Integer d = bareiss_det(integer_lift(m, &scale));
      return Scalar(ring, d, scale);
    }
    default: break;
  }
  if (!ring.is_field()) return Scalar(ring, bareiss_det(integer_lift(m)));
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(ring);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Scalar::zero(ring);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det.negate();
    }
    det *= a(k, k);
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j).sub_product(f, a(k, j));
    }
  }
  return det;
}

SmithForm smith_normal_form(const Matrix& m) {
  if (m.ring().kind() != RingKind::Integers) {
    throw Error(ErrorCode::WrongRing, "Smith normal form needs an integer matrix");
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = integer_lift(m);
  IntMatrix u(rows, rows), v(cols, cols);
  for (std::size_t i = 0; i < rows; ++i) u(i, i) = 1;
  for (std::size_t j = 0; j < cols; ++j) v(j, j) = 1;

  auto row_axpy = [](IntMatrix& x, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < x.cols; ++j) mpz_submul(x(dst, j).get_mpz_t(), q.get_mpz_t(), x(src, j).get_mpz_t());
  };
  auto col_axpy = [](IntMatrix& x, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < x.rows; ++i) mpz_submul(x(i, dst).get_mpz_t(), q.get_mpz_t(), x(i, src).get_mpz_t());
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool block_empty = false;
    while (true) {
      // Pivot: smallest nonzero |entry| in the block, first in row-major order.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        block_empty = true;
        break;
      }
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = tdiv(a(i, t), a(t, t));
        row_axpy(a, i, t, q);
        row_axpy(u, i, t, q);
        if (a(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = tdiv(a(t, j), a(t, t));
        col_axpy(a, j, t, q);
        col_axpy(v, j, t, q);
        if (a(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Divisibility: fold a non-divisible row into the pivot row and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      Integer minus_one = -1;
      row_axpy(a, t, bad, minus_one);
      row_axpy(u, t, bad, minus_one);
    }
    if (block_empty) break;
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  const RingSpec z = RingSpec::integers();
  return {to_matrix(z, u), to_matrix(z, a), to_matrix(z, v)};
}

Integer content_gcd(const Matrix& m) {
  if (m.ring().kind() != RingKind::Integers) {
    throw Error(ErrorCode::WrongRing, "content gcd needs an integer matrix");
  }
  Integer g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& x : m.row(i)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.integer().get_mpz_t());
  }
  return g;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "solve: A has " + std::to_string(a.rows()) +
                                                  " rows, b has " + std::to_string(b.rows()));
  }
  if (a.ring() != b.ring()) throw Error(ErrorCode::RingMismatch, "solve");
  const RingSpec& ring = a.ring();
  if (ring.kind() == RingKind::Integers) {
    SmithForm snf = smith_normal_form(a);
    Matrix c = snf.U * b;
    Matrix y(ring, a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Scalar d = i < a.cols() ? snf.S(i, i) : Scalar::zero(ring);
      for (std::size_t k = 0; k < b.cols(); ++k) {
        if (d.is_zero()) {
          if (!c(i, k).is_zero()) return std::nullopt;
        } else {
          if (!mpz_divisible_p(c(i, k).integer().get_mpz_t(), d.integer().get_mpz_t())) {
            return std::nullopt;
          }
          y(i, k) = c(i, k) / d;
        }
      }
    }
    return snf.V * y;
  }
  if (!ring.is_field()) {
    throw Error(ErrorCode::WrongRing, "solve needs a field or the integers, got " + ring.to_string());
  }
  const std::size_t n = a.cols();
  Matrix aug(ring, a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t k = 0; k < b.cols(); ++k) aug(i, n + k) = b(i, k);
  }
  // Eliminate only on the coefficient columns so that consistency can be
  // read from the augmented part.
  Matrix coeffs(ring, a.rows(), n);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
    std::size_t p = r;
    while (p < aug.rows() && aug(p, c).is_zero()) ++p;
    if (p == aug.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(r, j));
    }
    Scalar inv = aug(r, c).inverse();
    for (std::size_t j = c; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      Scalar f = aug(i, c);
      for (std::size_t j = c; j < aug.cols(); ++j) {
        if (!aug(r, j).is_zero()) aug(i, j).sub_product(f, aug(r, j));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < aug.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (!aug(i, n + k).is_zero()) return std::nullopt;
    }
  }
  Matrix x(ring, n, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) x(pivots[i], k) = aug(i, n + k);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (m.ring().kind() == RingKind::Integers) {
    Matrix q = inverse(to_rationals(m));
    Matrix out(m.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& x = q(i, j).rational();
        if (x.get_den() != 1) throw Error(ErrorCode::NotInvertible, "matrix is not unimodular");
        out(i, j) = Scalar(m.ring(), x.get_num());
      }
    }
    return out;
  }
  auto x = solve(m, Matrix::identity(m.ring(), n));
  if (!x || rank(m) != n) throw Error(ErrorCode::NotInvertible, "singular matrix");
  return *x;
}

Echelon::Echelon(const RingSpec& field, std::size_t ambient) : field_(field), ambient_(ambient) {
  if (!field.is_field()) {
    throw Error(ErrorCode::WrongRing, "subspace arithmetic needs a field, got " + field.to_string());
  }
}

void Echelon::reduce(Vector& v, Vector* coords) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "echelon reduce");
  if (coords) *coords = zero_vector(field_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    const Vector& row = rows_[r];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j].sub_product(f, row[j]);
    }
    if (coords) (*coords)[r] = f;
  }
}

bool Echelon::contains(Vector v) const {
  reduce(v);
  return is_zero(v);
}

bool Echelon::insert(Vector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && v[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

}  // namespace cellkit
