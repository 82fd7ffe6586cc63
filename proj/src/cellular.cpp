#include "cellkit/cellular.hpp"

#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"

#include <algorithm>

namespace cellkit {

std::size_t CellDatum::find_label(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::InvalidArgument, "no cell label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

namespace {

std::string well_formed(const CellDatum& d) {
  const std::size_t n = d.size();
  if (d.leq.size() != n) return "order relation has the wrong size";
  for (const auto& row : d.leq) {
    if (row.size() != n) return "order relation has the wrong size";
  }
  if (d.tableaux.size() != n || d.index.size() != n) return "one tableau set and index table per label required";
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t m = d.tableaux[l].size();
    if (d.index[l].size() != m) return "index table for " + d.labels[l] + " has the wrong shape";
    for (const auto& row : d.index[l]) {
      if (row.size() != m) return "index table for " + d.labels[l] + " has the wrong shape";
    }
  }
  return {};
}

void record(CellReport& r, std::string axiom, std::string message) {
  ++r.total;
  if (r.violations.size() < CellReport::kMaxRecorded) r.violations.push_back({std::move(axiom), std::move(message)});
}

std::string cell_name(const CellDatum& d, const CellPosition& p) {
  return "C^" + d.labels[p.lambda] + "_{" + d.tableaux[p.lambda][p.s] + "," + d.tableaux[p.lambda][p.t] + "}";
}

SparseVector apply_permutation(const SparseVector& v, const std::vector<std::size_t>& perm) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({perm[t.index], t.coeff});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  return out;
}

const Scalar* coefficient(const SparseVector& v, std::size_t k) {
  auto it = std::lower_bound(v.begin(), v.end(), k, [](const Term& t, std::size_t x) { return t.index < x; });
  return (it != v.end() && it->index == k) ? &it->coeff : nullptr;
}

}  // namespace

std::vector<CellPosition> cell_positions(const CellDatum& d, std::size_t dim) {
  if (auto msg = well_formed(d); !msg.empty()) throw Error(ErrorCode::DatumInvalid, msg);
  std::vector<CellPosition> pos(dim, CellPosition{d.size(), 0, 0});
  std::size_t count = 0;
  for (std::size_t l = 0; l < d.size(); ++l) {
    const std::size_t m = d.tableau_count(l);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        const std::size_t k = d.index[l][s][t];
        if (k >= dim) throw Error(ErrorCode::DatumInvalid, "basis index " + std::to_string(k) + " out of range");
        if (pos[k].lambda != d.size()) {
          throw Error(ErrorCode::DatumInvalid, "basis index " + std::to_string(k) + " used twice");
        }
        pos[k] = {l, s, t};
        ++count;
      }
    }
  }
  if (count != dim) {
    throw Error(ErrorCode::DatumInvalid,
                "sum of |M(λ)|^2 is " + std::to_string(count) + " but dim A is " + std::to_string(dim));
  }
  return pos;
}

CellReport validate_cell_datum(const Algebra& a, const CellDatum& d) {
  CellReport report;
  if (auto msg = well_formed(d); !msg.empty()) {
    record(report, "C1", msg);
    return report;
  }
  const std::size_t n = d.size(), dim = a.dim();

  for (std::size_t x = 0; x < n; ++x) {
    if (!d.leq[x][x]) record(report, "poset", "not reflexive at " + d.labels[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && d.leq[x][y] && d.leq[y][x]) {
        record(report, "poset", "not antisymmetric: " + d.labels[x] + " and " + d.labels[y]);
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (d.leq[x][y] && d.leq[y][z] && !d.leq[x][z]) {
          record(report, "poset", "not transitive: " + d.labels[x] + " <= " + d.labels[y] + " <= " + d.labels[z]);
        }
      }
    }
  }

  std::vector<CellPosition> pos;
  try {
    pos = cell_positions(d, dim);
  } catch (const Error& e) {
    record(report, "C1", e.what());
    return report;
  }

  // (C2)
  bool involution_ok = d.involution.size() == dim;
  if (!involution_ok) {
    record(report, "C2", "involution must permute all " + std::to_string(dim) + " basis elements");
  } else {
    for (std::size_t k = 0; k < dim; ++k) {
      const auto& p = pos[k];
      const std::size_t swapped = d.index[p.lambda][p.t][p.s];
      if (d.involution[k] != swapped) {
        record(report, "C2", "iota(" + cell_name(d, p) + ") is not " + cell_name(d, pos[swapped]));
        involution_ok = false;
      }
    }
    for (std::size_t k = 0; k < dim && involution_ok; ++k) {
      if (d.involution[d.involution[k]] != k) {
        record(report, "C2", "iota is not an involution at " + a.labels()[k]);
        involution_ok = false;
      }
    }
    if (involution_ok) {
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (apply_permutation(a.product(i, j), d.involution) != a.product(d.involution[j], d.involution[i])) {
            record(report, "C2", "iota(" + a.labels()[i] + "*" + a.labels()[j] + ") != iota(" + a.labels()[j] +
                                     ")*iota(" + a.labels()[i] + ")");
          }
        }
      }
    }
  }

  // (C3): a*C^λ_{S,T} ≡ Σ_U r_a(U,S) C^λ_{U,T} mod A(<λ), r_a independent of T.
  const RingSpec& ring = a.ring();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t m = d.tableau_count(l);
      for (std::size_t s = 0; s < m; ++s) {
        Vector first;
        for (std::size_t t = 0; t < m; ++t) {
          Vector r = zero_vector(ring, m);
          const CellPosition target{l, s, t};
          for (const auto& term : a.product(i, d.index[l][s][t])) {
            const auto& q = pos[term.index];
            if (d.less(q.lambda, l)) continue;
            if (q.lambda == l && q.t == t) {
              r[q.s] = term.coeff;
            } else {
              record(report, "C3", a.labels()[i] + "*" + cell_name(d, target) + " has a term " +
                                       cell_name(d, q) + " outside the allowed span");
            }
          }
          if (t == 0) {
            first = std::move(r);
          } else if (r != first) {
            record(report, "C3", "coefficients of " + a.labels()[i] + "*" + cell_name(d, target) +
                                     " depend on the second index");
          }
        }
      }
    }
  }
  return report;
}

CellModule cell_module(const Algebra& a, const CellDatum& d, std::size_t lambda) {
  const std::vector<CellPosition> pos = cell_positions(d, a.dim());
  const std::size_t m = d.tableau_count(lambda);
  const RingSpec& ring = a.ring();
  AlgebraModule mod{a, m, {}};
  mod.action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix x(ring, m, m);
    for (std::size_t s = 0; s < m; ++s) {
      for (const auto& term : a.product(i, d.index[lambda][s][0])) {
        const auto& q = pos[term.index];
        if (q.lambda == lambda && q.t == 0) {
          x(q.s, s) = term.coeff;
        } else if (!d.less(q.lambda, lambda)) {
          throw Error(ErrorCode::DatumInvalid, a.labels()[i] + "*" + cell_name(d, {lambda, s, 0}) +
                                                   " leaves the cell module span");
        }
      }
    }
    mod.action.push_back(std::move(x));
  }
  return {lambda, std::move(mod)};
}

AlgebraModule twist(const AlgebraModule& m, const CellDatum& d) {
  AlgebraModule out{opposite(m.algebra), m.rank, {}};
  out.action.reserve(m.action.size());
  for (std::size_t i = 0; i < m.action.size(); ++i) out.action.push_back(m.action[d.involution.at(i)]);
  return out;
}

AlgebraModule right_cell_module(const Algebra& a, const CellDatum& d, std::size_t lambda) {
  return twist(cell_module(a, d, lambda).module, d);
}

GramData gram_matrix(const Algebra& a, const CellDatum& d, std::size_t lambda, bool strict) {
  const std::vector<CellPosition> pos = cell_positions(d, a.dim());
  const std::size_t m = d.tableau_count(lambda);
  const RingSpec& ring = a.ring();
  const auto& idx = d.index[lambda];
  auto phi = [&](std::size_t u, std::size_t s, std::size_t t, std::size_t v) {
    const SparseVector& prod = a.product(idx[u][s], idx[t][v]);
    const Scalar* c = coefficient(prod, idx[u][v]);
    return c ? *c : Scalar::zero(ring);
  };
  Matrix g(ring, m, m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) g(s, t) = phi(0, s, t, 0);
  }
  if (strict) {
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t s = 0; s < m; ++s) {
          for (std::size_t t = 0; t < m; ++t) {
            if (phi(u, s, t, v) != g(s, t)) {
              throw Error(ErrorCode::WitnessDependence,
                          "phi_" + d.labels[lambda] + "(" + d.tableaux[lambda][s] + "," + d.tableaux[lambda][t] +
                              ") changes with witnesses (" + d.tableaux[lambda][u] + "," + d.tableaux[lambda][v] + ")");
            }
            for (const auto& term : a.product(idx[u][s], idx[t][v])) {
              const auto& q = pos[term.index];
              if (q.lambda == lambda && (q.s != u || q.t != v)) {
                throw Error(ErrorCode::WitnessDependence, "product " + cell_name(d, {lambda, u, s}) + "*" +
                                                              cell_name(d, {lambda, t, v}) + " has a stray " +
                                                              cell_name(d, q) + " term");
              }
            }
          }
        }
      }
    }
  }
  const bool symmetric = g.is_symmetric();
  return {lambda, std::move(g), symmetric};
}

std::size_t gram_rank(const Algebra& a, const CellDatum& d, std::size_t lambda, const RingSpec& field) {
  return FieldAnalysis(a, d, field).gram_rank(lambda);
}

FieldAnalysis::FieldAnalysis(const Algebra& a, const CellDatum& d, const RingSpec& field) : datum_(d) {
  if (!field.is_field()) {
    throw Error(ErrorCode::WrongRing, field.to_string() + " is not a field; base change to a residue field first");
  }
  algebra_ = base_change(a, field);
  cell_positions(d, a.dim());
  grams_.resize(d.size());
  ranks_.resize(d.size());
  cells_.resize(d.size());
}

const GramData& FieldAnalysis::gram(std::size_t lambda) {
  if (!grams_.at(lambda)) grams_[lambda] = gram_matrix(algebra_, datum_, lambda);
  return *grams_[lambda];
}

std::size_t FieldAnalysis::gram_rank(std::size_t lambda) {
  if (!ranks_.at(lambda)) ranks_[lambda] = rank(gram(lambda).gram);
  return *ranks_[lambda];
}

const CellModule& FieldAnalysis::cell(std::size_t lambda) {
  if (!cells_.at(lambda)) cells_[lambda] = cell_module(algebra_, datum_, lambda);
  return *cells_[lambda];
}

const std::vector<SimpleModule>& FieldAnalysis::simples() {
  if (!simples_) {
    std::vector<SimpleModule> out;
    for (std::size_t l = 0; l < datum_.size(); ++l) {
      if (gram_rank(l) == 0) continue;
      const Matrix& g = gram(l).gram;
      // rad(φ_λ) = {x : φ_λ(y, x) = 0 for all y}
      Matrix k = kernel_basis(g);
      std::vector<Vector> rad;
      for (std::size_t c = 0; c < k.cols(); ++c) rad.push_back(k.column(c));
      out.push_back({l, quotient_module(cell(l).module, rad)});
    }
    simples_ = std::move(out);
  }
  return *simples_;
}

namespace {

// Greedy generators of a right ideal I given by a basis: I = Σ g A.
std::vector<Vector> right_ideal_generators(const Algebra& a, const std::vector<Vector>& basis) {
  Echelon span(a.ring(), a.dim());
  std::vector<Vector> gens;
  for (const auto& r : basis) {
    if (span.dim() == basis.size()) break;
    if (span.contains(r)) continue;
    gens.push_back(r);
    for (std::size_t j = 0; j < a.dim(); ++j) span.insert(a.multiply_basis_right(r, j));
  }
  return gens;
}

}  // namespace

void FieldAnalysis::compute_radical() {
  const RingSpec& field = algebra_.ring();
  const std::size_t dim = algebra_.dim();
  const auto& simple = simples();
  std::size_t rows = 0;
  for (const auto& s : simple) rows += s.module.rank * s.module.rank;
  Matrix stacked(field, rows, dim);
  std::size_t r = 0;
  for (const auto& s : simple) {
    const std::size_t k = s.module.rank;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q, ++r) {
        for (std::size_t j = 0; j < dim; ++j) stacked(r, j) = s.module.action[j](p, q);
      }
    }
  }
  Matrix kernel = kernel_basis(stacked);
  std::vector<Vector> rad;
  for (std::size_t c = 0; c < kernel.cols(); ++c) rad.push_back(kernel.column(c));

  // rad^{k+1} = Σ_g g·rad^k for right ideal generators g of rad.
  powers_.clear();
  std::vector<Vector> whole;
  for (std::size_t i = 0; i < dim; ++i) whole.push_back(unit_vector(field, dim, i));
  powers_.push_back(std::move(whole));
  const std::vector<Vector> gens = right_ideal_generators(algebra_, rad);
  std::vector<Vector> current = rad;
  for (std::size_t step = 0; !current.empty(); ++step) {
    if (step > dim) throw Error(ErrorCode::NotNilpotent, "radical powers did not reach zero");
    powers_.push_back(current);
    Echelon next(field, dim);
    for (const auto& g : gens) {
      for (const auto& v : current) {
        if (next.dim() == current.size()) break;
        next.insert(algebra_.multiply(g, v));
      }
    }
    if (next.dim() >= current.size()) {
      throw Error(ErrorCode::NotNilpotent, "rad^k A is stuck at dimension " + std::to_string(current.size()));
    }
    current = next.rows();
  }
  radical_ = std::move(rad);
}

const std::vector<Vector>& FieldAnalysis::radical() {
  if (!radical_) compute_radical();
  return *radical_;
}

const std::vector<std::vector<Vector>>& FieldAnalysis::radical_powers() {
  if (!radical_) compute_radical();
  return powers_;
}

const Decomposition& FieldAnalysis::decomposition() {
  if (decomposition_) return *decomposition_;
  const auto& simple = simples();
  const auto& rad = radical();
  for (const auto& s : simple) {
    // multiplicities are only dimensions of Hom spaces when End L is the field
    if (hom_space(s.module, s.module).size() != 1) {
      throw Error(ErrorCode::InternalError, "End L(" + datum_.labels[s.lambda] + ") is not one-dimensional");
    }
  }
  const RingSpec zz = RingSpec::integers();
  Decomposition dec{Matrix(zz, datum_.size(), simple.size()), {}};
  for (const auto& s : simple) dec.columns.push_back(s.lambda);
  for (std::size_t l = 0; l < datum_.size(); ++l) {
    for (const auto& layer : radical_filtration(cell(l).module, rad)) {
      std::size_t accounted = 0;
      for (std::size_t c = 0; c < simple.size(); ++c) {
        const std::size_t mult = hom_space(simple[c].module, layer).size();
        dec.matrix(l, c) += Scalar(zz, static_cast<long>(mult));
        accounted += mult * simple[c].module.rank;
      }
      if (accounted != layer.rank) {
        throw Error(ErrorCode::InternalError, "a radical layer of theta(" + datum_.labels[l] +
                                                  ") is not accounted for by the simples");
      }
    }
  }
  decomposition_ = std::move(dec);
  return *decomposition_;
}

const Cartan& FieldAnalysis::cartan() {
  if (!cartan_) {
    const Decomposition& dec = decomposition();
    Matrix c = dec.matrix.transpose() * dec.matrix;
    Scalar det = determinant(c);
    cartan_ = Cartan{std::move(c), std::move(det), dec.columns};
  }
  return *cartan_;
}

const std::vector<std::size_t>& FieldAnalysis::regular_multiplicities() {
  if (regular_) return *regular_;
  const RingSpec& field = algebra_.ring();
  const std::size_t dim = algebra_.dim();
  const auto& simple = simples();
  const auto& powers = radical_powers();
  const std::size_t ns = simple.size();

  // Probe x_μ = C^μ_{S,S} with row S of G_μ nonzero: rank one on L(μ) and
  // zero on L(ν) unless ν ≤ μ, so the probe ranks form a unitriangular system.
  std::vector<std::size_t> probes;
  for (const auto& s : simple) {
    const Matrix& g = gram(s.lambda).gram;
    std::size_t row = 0;
    while (row < g.rows() && is_zero(g.row_vector(row))) ++row;
    probes.push_back(datum_.index[s.lambda][row][row]);
  }
  const RingSpec zz = RingSpec::integers();
  Matrix on_simples(zz, ns, ns);
  for (std::size_t p = 0; p < ns; ++p) {
    for (std::size_t c = 0; c < ns; ++c) {
      on_simples(p, c) = Scalar(zz, static_cast<long>(rank(simple[c].module.action[probes[p]])));
    }
  }
  if (determinant(on_simples).is_zero()) throw Error(ErrorCode::InternalError, "probe system is singular");

  std::vector<std::size_t> total(ns, 0);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    Echelon low(field, dim);
    if (k + 1 < powers.size()) {
      for (const auto& v : powers[k + 1]) low.insert(v);
    }
    Echelon top(field, dim);
    for (Vector v : powers[k]) {
      low.reduce(v);
      top.insert(std::move(v));
    }
    const std::size_t r = top.dim();
    Matrix rhs(zz, ns, 1);
    Vector coords;
    for (std::size_t p = 0; p < ns; ++p) {
      Matrix act(field, r, r);
      for (std::size_t c = 0; c < r; ++c) {
        Vector image = algebra_.multiply_basis_left(probes[p], top.rows()[c]);
        low.reduce(image);
        top.reduce(image, &coords);
        for (std::size_t q = 0; q < r; ++q) act(q, c) = coords[q];
      }
      rhs(p, 0) = Scalar(zz, static_cast<long>(rank(act)));
    }
    auto mult = solve(on_simples, rhs);
    if (!mult) throw Error(ErrorCode::InternalError, "radical layer multiplicities are not integral");
    std::size_t accounted = 0;
    for (std::size_t c = 0; c < ns; ++c) {
      const Integer& m = (*mult)(c, 0).integer();
      if (m < 0) throw Error(ErrorCode::InternalError, "negative multiplicity in a radical layer");
      total[c] += m.get_ui();
      accounted += m.get_ui() * simple[c].module.rank;
    }
    if (accounted != r) throw Error(ErrorCode::InternalError, "radical layer of A is not accounted for");
  }
  regular_ = std::move(total);
  return *regular_;
}

std::vector<SimpleModule> simple_modules(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  return FieldAnalysis(a, d, field).simples();
}

std::vector<Vector> radical_of_algebra(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  return FieldAnalysis(a, d, field).radical();
}

Decomposition decomposition_matrix(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  return FieldAnalysis(a, d, field).decomposition();
}

Cartan cartan_matrix(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  return FieldAnalysis(a, d, field).cartan();
}

}  // namespace cellkit
