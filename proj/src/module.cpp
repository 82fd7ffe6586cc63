#include "cellkit/module.hpp"

#include "cellkit/errors.hpp"

namespace cellkit {

Matrix action_of(const AlgebraModule& m, const Vector& a) {
  Matrix out(m.algebra.ring(), m.rank, m.rank);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out.add_scaled(a[i], m.action[i]);
  }
  return out;
}

std::optional<std::string> representation_defect(const AlgebraModule& m) {
  const Algebra& a = m.algebra;
  const std::size_t n = a.dim();
  if (m.action.size() != n) return "expected one action matrix per basis element";
  for (const auto& x : m.action) {
    if (x.rows() != m.rank || x.cols() != m.rank) return "action matrix has the wrong shape";
    if (x.ring() != a.ring()) return "action matrix over the wrong ring";
  }
  if (action_of(m, a.unit()) != Matrix::identity(a.ring(), m.rank)) return "unit does not act as the identity";
  for (std::size_t i = 0; i < n; ++i) {
    if (m.action[i].is_zero()) {
      // the products b_i b_j must then act as zero too
      for (std::size_t j = 0; j < n; ++j) {
        Matrix rhs(a.ring(), m.rank, m.rank);
        for (const auto& t : a.product(i, j)) rhs.add_scaled(t.coeff, m.action[t.index]);
        if (!rhs.is_zero()) return "action(" + a.labels()[i] + ") is zero but its products are not";
      }
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs(a.ring(), m.rank, m.rank);
      for (const auto& t : a.product(i, j)) rhs.add_scaled(t.coeff, m.action[t.index]);
      if (m.action[i] * m.action[j] != rhs) {
        return "action(" + a.labels()[i] + ")action(" + a.labels()[j] + ") != action(" + a.labels()[i] +
               "*" + a.labels()[j] + ")";
      }
    }
  }
  return std::nullopt;
}

AlgebraModule regular_module(const Algebra& a) {
  AlgebraModule m{a, a.dim(), {}};
  m.action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m.action.push_back(left_multiplication(a, unit_vector(a.ring(), a.dim(), i)));
  }
  return m;
}

AlgebraModule subquotient(const AlgebraModule& m, const std::vector<Vector>& upper,
                          const std::vector<Vector>& lower, std::vector<Vector>* lifts) {
  const RingSpec& field = m.algebra.ring();
  Echelon low(field, m.rank);
  for (const auto& v : lower) low.insert(v);
  // Normal forms modulo `low` are canonical, so the rows of `top` are a basis
  // of V/W whose coordinates can be read off by reduction.
  Echelon top(field, m.rank);
  for (Vector v : upper) {
    low.reduce(v);
    top.insert(std::move(v));
  }
  const std::size_t r = top.dim();
  AlgebraModule out{m.algebra, r, {}};
  out.action.reserve(m.action.size());
  Vector coords;
  for (const auto& act : m.action) {
    Matrix x(field, r, r);
    if (!act.is_zero()) {
      for (std::size_t c = 0; c < r; ++c) {
        Vector image = act.apply(top.rows()[c]);
        low.reduce(image);
        top.reduce(image, &coords);
        if (!is_zero(image)) throw Error(ErrorCode::InvalidArgument, "subspace is not stable under the action");
        for (std::size_t k = 0; k < r; ++k) x(k, c) = coords[k];
      }
    }
    out.action.push_back(std::move(x));
  }
  if (lifts) *lifts = top.rows();
  return out;
}

AlgebraModule submodule(const AlgebraModule& m, const std::vector<Vector>& spanning, std::vector<Vector>* lifts) {
  return subquotient(m, spanning, {}, lifts);
}

AlgebraModule quotient_module(const AlgebraModule& m, const std::vector<Vector>& sub, std::vector<Vector>* lifts) {
  std::vector<Vector> all;
  for (std::size_t i = 0; i < m.rank; ++i) all.push_back(unit_vector(m.algebra.ring(), m.rank, i));
  return subquotient(m, all, sub, lifts);
}

namespace {

void require_field_pair(const AlgebraModule& m, const AlgebraModule& n) {
  const RingSpec& ring = m.algebra.ring();
  if (!ring.is_field()) throw Error(ErrorCode::WrongRing, "hom_space needs a field, got " + ring.to_string());
  if (!(m.algebra == n.algebra)) throw Error(ErrorCode::InvalidArgument, "modules over different algebras");
}

// Generic path: f ρ_M(b) = ρ_N(b) f as one linear system in the entries of f.
std::vector<Matrix> hom_space_generic(const AlgebraModule& m, const AlgebraModule& n) {
  const RingSpec& field = m.algebra.ring();
  const std::size_t rm = m.rank, rn = n.rank, unknowns = rm * rn;
  Echelon eqs(field, unknowns);
  for (std::size_t b = 0; b < m.action.size() && eqs.dim() < unknowns; ++b) {
    const Matrix& am = m.action[b];
    const Matrix& an = n.action[b];
    for (std::size_t p = 0; p < rn; ++p) {
      for (std::size_t q = 0; q < rm; ++q) {
        Vector row = zero_vector(field, unknowns);
        for (std::size_t s = 0; s < rm; ++s) row[p * rm + s] += am(s, q);
        for (std::size_t s = 0; s < rn; ++s) row[s * rm + q] -= an(p, s);
        if (!is_zero(row)) eqs.insert(std::move(row));
      }
    }
  }
  Matrix system(field, eqs.dim(), unknowns);
  for (std::size_t r = 0; r < eqs.dim(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = eqs.rows()[r][c];
  }
  Matrix kernel = kernel_basis(system);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    Matrix f(field, rn, rm);
    for (std::size_t p = 0; p < rn; ++p) {
      for (std::size_t q = 0; q < rm; ++q) f(p, q) = kernel(p * rm + q, k);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<Matrix> hom_space(const AlgebraModule& m, const AlgebraModule& n) {
  require_field_pair(m, n);
  const RingSpec& field = m.algebra.ring();
  const std::size_t rm = m.rank, rn = n.rank, dim = m.algebra.dim();
  if (rm == 0 || rn == 0) return {};

  // Look for a cyclic vector v of M. A map f is then fixed by w = f(v), and
  // w is admissible iff every relation among the b_j v also kills w.
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < rm; ++i) candidates.push_back(unit_vector(field, rm, i));
  Vector all = zero_vector(field, rm);
  for (auto& x : all) x = Scalar::one(field);
  candidates.push_back(all);

  for (const auto& v : candidates) {
    Matrix k(field, rm, dim);
    for (std::size_t j = 0; j < dim; ++j) k.set_column(j, m.action[j].apply(v));
    Matrix r = k;
    std::vector<std::size_t> pivots = rref_in_place(r);
    if (pivots.size() != rm) continue;

    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    Echelon eqs(field, rn);
    for (std::size_t j = 0; j < dim && eqs.dim() < rn; ++j) {
      if (is_pivot[j]) continue;
      Matrix c = n.action[j];
      for (std::size_t i = 0; i < rm; ++i) {
        if (!r(i, j).is_zero()) c.add_scaled(-r(i, j), n.action[pivots[i]]);
      }
      for (std::size_t row = 0; row < rn; ++row) {
        Vector eq = c.row_vector(row);
        if (!is_zero(eq)) eqs.insert(std::move(eq));
      }
    }
    Matrix system(field, eqs.dim(), rn);
    for (std::size_t a = 0; a < eqs.dim(); ++a) {
      for (std::size_t b = 0; b < rn; ++b) system(a, b) = eqs.rows()[a][b];
    }
    Matrix ws = kernel_basis(system);
    if (ws.cols() == 0) return {};

    Matrix basis(field, rm, rm);
    for (std::size_t i = 0; i < rm; ++i) basis.set_column(i, k.column(pivots[i]));
    Matrix basis_inv = inverse(basis);
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < ws.cols(); ++c) {
      Vector w = ws.column(c);
      Matrix x(field, rn, rm);
      for (std::size_t i = 0; i < rm; ++i) x.set_column(i, n.action[pivots[i]].apply(w));
      out.push_back(x * basis_inv);
    }
    return out;
  }
  return hom_space_generic(m, n);
}

std::vector<AlgebraModule> radical_filtration(const AlgebraModule& m, const std::vector<Vector>& rad_ideal) {
  const RingSpec& field = m.algebra.ring();
  if (!field.is_field()) throw Error(ErrorCode::WrongRing, "radical_filtration needs a field");
  std::vector<Matrix> rad_actions;
  for (const auto& r : rad_ideal) {
    Matrix x = action_of(m, r);
    if (!x.is_zero()) rad_actions.push_back(std::move(x));
  }
  std::vector<Vector> current;
  for (std::size_t i = 0; i < m.rank; ++i) current.push_back(unit_vector(field, m.rank, i));

  std::vector<AlgebraModule> layers;
  while (!current.empty()) {
    Echelon next(field, m.rank);
    for (const auto& x : rad_actions) {
      for (const auto& v : current) {
        if (next.dim() == current.size()) break;
        next.insert(x.apply(v));
      }
    }
    if (next.dim() >= current.size()) {
      throw Error(ErrorCode::NonTerminating, "rad^k M stopped decreasing at dimension " +
                                                 std::to_string(current.size()));
    }
    layers.push_back(subquotient(m, current, next.rows()));
    current = next.rows();
  }
  return layers;
}

}  // namespace cellkit
