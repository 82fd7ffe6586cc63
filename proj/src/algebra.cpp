#include "cellkit/algebra.hpp"

#include "cellkit/errors.hpp"

#include <algorithm>
#include <set>

namespace cellkit {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

Vector to_dense(const SparseVector& v, const RingSpec& ring, std::size_t dim) {
  Vector out = zero_vector(ring, dim);
  for (const auto& t : v) out.at(t.index) += t.coeff;
  return out;
}

Algebra::Algebra() : Algebra(RingSpec::integers(), {}, {}, {}) {}

Algebra::Algebra(const RingSpec& ring, std::vector<std::string> labels,
                 std::vector<SparseVector> products, Vector unit) {
  const std::size_t n = labels.size();
  if (products.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "structure constant table must have dim^2 entries");
  }
  if (unit.size() != n) throw Error(ErrorCode::DimensionMismatch, "unit vector length");
  for (auto& p : products) {
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVector merged;
    for (auto& t : p) {
      if (t.index >= n) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
      if (t.coeff.ring() != ring) throw Error(ErrorCode::RingMismatch, "structure constant ring");
      if (!merged.empty() && merged.back().index == t.index) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    p = std::move(merged);
  }
  for (const auto& u : unit) {
    if (u.ring() != ring) throw Error(ErrorCode::RingMismatch, "unit ring");
  }
  data_ = std::make_shared<const Data>(Data{ring, std::move(labels), std::move(products), std::move(unit)});
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out = zero_vector(ring(), n);
  std::vector<std::size_t> ys;
  for (std::size_t j = 0; j < n; ++j) {
    if (!y[j].is_zero()) ys.push_back(j);
  }
  Scalar c = Scalar::zero(ring());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j : ys) {
      const SparseVector& p = product(i, j);
      if (p.empty()) continue;
      c = x[i];
      c *= y[j];
      for (const auto& t : p) out[t.index].add_product(c, t.coeff);
    }
  }
  return out;
}

Vector Algebra::multiply_basis_right(const Vector& x, std::size_t j) const {
  Vector out = zero_vector(ring(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : product(i, j)) out[t.index].add_product(x[i], t.coeff);
  }
  return out;
}

Vector Algebra::multiply_basis_left(std::size_t i, const Vector& y) const {
  Vector out = zero_vector(ring(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& t : product(i, j)) out[t.index].add_product(y[j], t.coeff);
  }
  return out;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.data_ == b.data_) return true;
  return a.ring() == b.ring() && a.labels() == b.labels() && a.data_->products == b.data_->products &&
         a.unit() == b.unit();
}

namespace {

void record(AlgebraReport& report, AlgebraViolation v) {
  ++report.total;
  if (report.violations.size() < AlgebraReport::kMaxRecorded) report.violations.push_back(std::move(v));
}

}  // namespace

AlgebraReport validate_algebra(const Algebra& a) {
  AlgebraReport report;
  const std::size_t n = a.dim();
  const RingSpec& ring = a.ring();
  Vector lhs = zero_vector(ring, n), rhs = zero_vector(ring, n);
  std::vector<std::size_t> touched;
  std::vector<bool> mark(n, false);
  auto touch = [&](std::size_t k) {
    if (!mark[k]) {
      mark[k] = true;
      touched.push_back(k);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // (b_i b_j) b_k
        for (const auto& t : ij) {
          for (const auto& s : a.product(t.index, k)) {
            lhs[s.index].add_product(t.coeff, s.coeff);
            touch(s.index);
          }
        }
        // b_i (b_j b_k)
        for (const auto& t : a.product(j, k)) {
          for (const auto& s : a.product(i, t.index)) {
            rhs[s.index].add_product(t.coeff, s.coeff);
            touch(s.index);
          }
        }
        bool equal = true;
        for (std::size_t m : touched) {
          if (lhs[m] != rhs[m]) equal = false;
          lhs[m] = Scalar::zero(ring);
          rhs[m] = Scalar::zero(ring);
          mark[m] = false;
        }
        touched.clear();
        if (!equal) {
          record(report, {AlgebraViolation::Kind::Associativity, i, j, k,
                          "(" + a.labels()[i] + "*" + a.labels()[j] + ")*" + a.labels()[k] + " != " +
                              a.labels()[i] + "*(" + a.labels()[j] + "*" + a.labels()[k] + ")"});
        }
      }
    }
  }
  const SparseVector unit = to_sparse(a.unit());
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = zero_vector(ring, n), right = zero_vector(ring, n);
    for (const auto& u : unit) {
      for (const auto& t : a.product(u.index, i)) left[t.index].add_product(u.coeff, t.coeff);
      for (const auto& t : a.product(i, u.index)) right[t.index].add_product(u.coeff, t.coeff);
    }
    Vector bi = unit_vector(ring, n, i);
    if (left != bi) record(report, {AlgebraViolation::Kind::LeftUnit, i, 0, 0, "1*" + a.labels()[i] + " != " + a.labels()[i]});
    if (right != bi) record(report, {AlgebraViolation::Kind::RightUnit, i, 0, 0, a.labels()[i] + "*1 != " + a.labels()[i]});
  }
  return report;
}

Algebra base_change(const Algebra& a, const RingSpec& target) {
  if (a.ring() == target) return a;
  if (!has_canonical_map(a.ring(), target)) {
    throw Error(ErrorCode::NoCanonicalMap,
                "no canonical map " + a.ring().to_string() + " -> " + target.to_string());
  }
  const std::size_t n = a.dim();
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector& p = products[i * n + j];
      for (const auto& t : a.product(i, j)) {
        Scalar c = reduce(t.coeff, target);
        if (!c.is_zero()) p.push_back({t.index, std::move(c)});
      }
    }
  }
  Vector unit;
  for (const auto& u : a.unit()) unit.push_back(reduce(u, target));
  return Algebra(target, a.labels(), std::move(products), std::move(unit));
}

Algebra quotient_by_basis_ideal(const Algebra& a, const std::vector<std::size_t>& ideal) {
  const std::size_t n = a.dim();
  std::vector<bool> in_ideal(n, false);
  for (auto i : ideal) {
    if (i >= n) throw Error(ErrorCode::DimensionMismatch, "ideal index out of range");
    in_ideal[i] = true;
  }
  auto check = [&](std::size_t x, std::size_t y) {
    for (const auto& t : a.product(x, y)) {
      if (!in_ideal[t.index]) {
        throw Error(ErrorCode::NotAnIdeal, a.labels()[x] + "*" + a.labels()[y] + " has a nonzero " +
                                               a.labels()[t.index] + " component");
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_ideal[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      check(i, j);
      check(j, i);
    }
  }
  std::vector<std::size_t> keep, position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_ideal[i]) {
      position[i] = keep.size();
      keep.push_back(i);
    }
  }
  const std::size_t m = keep.size();
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(a.labels()[i]);
  std::vector<SparseVector> products(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (const auto& t : a.product(keep[x], keep[y])) {
        if (!in_ideal[t.index]) products[x * m + y].push_back({position[t.index], t.coeff});
      }
    }
  }
  Vector unit;
  for (auto i : keep) unit.push_back(a.unit()[i]);
  return Algebra(a.ring(), std::move(labels), std::move(products), std::move(unit));
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = a.product(j, i);
  }
  return Algebra(a.ring(), a.labels(), std::move(products), a.unit());
}

Matrix left_multiplication(const Algebra& a, const Vector& x) {
  const std::size_t n = a.dim();
  Matrix m(a.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& t : a.product(i, k)) m(t.index, k).add_product(x[i], t.coeff);
    }
  }
  return m;
}

}  // namespace cellkit
