#include "cellkit/schur.hpp"

#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace cellkit {

namespace {

// I(n,d) enumerated as base-n numbers; digits 0..n-1.
struct TensorIndex {
  int n, d;
  std::size_t count;
  std::vector<int> digits;  // count × d

  TensorIndex(int n_, int d_, std::size_t count_) : n(n_), d(d_), count(count_), digits(count_ * d_) {
    for (std::size_t s = 0; s < count; ++s) {
      std::size_t x = s;
      for (int a = d - 1; a >= 0; --a) {
        digits[s * d + a] = static_cast<int>(x % n);
        x /= n;
      }
    }
  }
  const int* seq(std::size_t s) const { return digits.data() + s * d; }
  std::size_t encode(const std::vector<int>& one_based) const {
    std::size_t s = 0;
    for (int x : one_based) s = s * n + static_cast<std::size_t>(x - 1);
    return s;
  }
};

// Orbit key of the pair (t, s): the sorted pair codes in radix n².
std::uint64_t orbit_key(const TensorIndex& ti, const int* t, const int* s, std::vector<int>& scratch) {
  scratch.resize(ti.d);
  for (int a = 0; a < ti.d; ++a) scratch[a] = t[a] * ti.n + s[a];
  std::sort(scratch.begin(), scratch.end());
  std::uint64_t key = 0;
  const std::uint64_t radix = static_cast<std::uint64_t>(ti.n) * ti.n;
  for (int c : scratch) key = key * radix + static_cast<std::uint64_t>(c);
  return key;
}

IndexPair canonical(const std::vector<int>& i, const std::vector<int>& j) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < i.size(); ++a) pairs.emplace_back(i[a], j[a]);
  std::sort(pairs.begin(), pairs.end());
  IndexPair out;
  for (auto [x, y] : pairs) {
    out.first.push_back(x);
    out.second.push_back(y);
  }
  return out;
}

std::string word(const std::vector<int>& w, int n) {
  std::string s;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (n >= 10 && a) s += ",";
    s += std::to_string(w[a]);
  }
  return s;
}

std::vector<int> weight_word(const Composition& lambda) {
  std::vector<int> w;
  for (std::size_t k = 0; k < lambda.size(); ++k) w.insert(w.end(), static_cast<std::size_t>(lambda[k]), static_cast<int>(k) + 1);
  return w;
}

Composition weight_of(const std::vector<int>& w, int n) {
  Composition c(static_cast<std::size_t>(n), 0);
  for (int x : w) ++c[static_cast<std::size_t>(x - 1)];
  return c;
}

// Multisets of size d from {0..m-1} in lexicographic order of sorted lists.
void multisets(int m, int d, std::vector<int>& cur, int start, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < m; ++c) {
    cur.push_back(c);
    multisets(m, d, cur, c, out);
    cur.pop_back();
  }
}

constexpr std::uint64_t kFaithfulCheckBudget = 20'000'000;

}  // namespace

std::size_t SchurData::orbit_index(const std::vector<int>& i, const std::vector<int>& j) const {
  if (i.size() != static_cast<std::size_t>(d) || j.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::DimensionMismatch, "multi-index of the wrong length");
  }
  IndexPair key = canonical(i, j);
  auto it = std::lower_bound(orbit_reps.begin(), orbit_reps.end(), key);
  if (it == orbit_reps.end() || *it != key) throw Error(ErrorCode::InvalidArgument, "entries out of range");
  return static_cast<std::size_t>(it - orbit_reps.begin());
}

SchurData schur_algebra(const RingSpec& ring, int n, int d, std::int64_t limit) {
  if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "Schur algebra needs n, d >= 1");
  std::int64_t tensor = 1;
  for (int a = 0; a < d; ++a) {
    tensor *= n;
    if (tensor > limit) {
      throw Error(ErrorCode::SizeLimit, "n^d exceeds the limit " + std::to_string(limit));
    }
  }
  const TensorIndex ti(n, d, static_cast<std::size_t>(tensor));
  const RingSpec zz = RingSpec::integers();

  SchurData sd;
  sd.n = n;
  sd.d = d;
  {
    std::vector<std::vector<int>> codes;
    std::vector<int> cur;
    multisets(n * n, d, cur, 0, codes);
    for (const auto& c : codes) {
      IndexPair p;
      for (int x : c) {
        p.first.push_back(x / n + 1);
        p.second.push_back(x % n + 1);
      }
      sd.orbit_reps.push_back(std::move(p));
    }
    std::sort(sd.orbit_reps.begin(), sd.orbit_reps.end());
  }
  const std::size_t dim = sd.orbit_reps.size();
  if (Integer(static_cast<unsigned long>(dim)) != binomial(static_cast<unsigned long>(n * n + d - 1), static_cast<unsigned long>(d))) {
    throw Error(ErrorCode::InternalError, "orbit count differs from binomial(n^2+d-1, d)");
  }

  std::unordered_map<std::uint64_t, std::size_t> lookup;
  std::vector<int> scratch;
  std::vector<std::size_t> rep_left(dim), rep_right(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    rep_left[c] = ti.encode(sd.orbit_reps[c].first);
    rep_right[c] = ti.encode(sd.orbit_reps[c].second);
    lookup.emplace(orbit_key(ti, ti.seq(rep_left[c]), ti.seq(rep_right[c]), scratch), c);
  }
  auto orb = [&](std::size_t t, std::size_t s) {
    return lookup.at(orbit_key(ti, ti.seq(t), ti.seq(s), scratch));
  };

  // γ^c_ab = #{u : (l_c, u) ∈ a, (u, s_c) ∈ b}: the entry of ξ_a ξ_b at the
  // representative position of c.
  std::vector<std::vector<std::pair<std::size_t, long>>> counts(dim * dim);
  std::vector<std::vector<std::size_t>> histogram(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    auto& h = histogram[c];
    h.reserve(ti.count);
    for (std::size_t u = 0; u < ti.count; ++u) h.push_back(orb(rep_left[c], u) * dim + orb(u, rep_right[c]));
    std::sort(h.begin(), h.end());
    for (std::size_t x = 0; x < h.size();) {
      std::size_t y = x;
      while (y < h.size() && h[y] == h[x]) ++y;
      counts[h[x]].emplace_back(c, static_cast<long>(y - x));
      x = y;
    }
  }

  std::vector<std::string> labels;
  for (const auto& [i, j] : sd.orbit_reps) labels.push_back("x[" + word(i, n) + "|" + word(j, n) + "]");
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t ab = 0; ab < dim * dim; ++ab) {
    for (auto [c, k] : counts[ab]) products[ab].push_back({c, Scalar(zz, k)});
  }
  Vector unit = zero_vector(zz, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    if (sd.orbit_reps[c].first == sd.orbit_reps[c].second) unit[c] = Scalar::one(zz);
  }
  Algebra integral(zz, std::move(labels), std::move(products), std::move(unit));

  // ξ_a ξ_b must be constant on every orbit, i.e. lie in the span of the ξ_c.
  // Since the ξ_c are independent endomorphisms this makes the table that of
  // a faithful representation, hence associative and unital.
  const std::uint64_t cube = static_cast<std::uint64_t>(ti.count) * ti.count * ti.count;
  if (cube <= kFaithfulCheckBudget) {
    std::vector<std::size_t> h;
    for (std::size_t t = 0; t < ti.count; ++t) {
      for (std::size_t s = 0; s < ti.count; ++s) {
        h.clear();
        for (std::size_t u = 0; u < ti.count; ++u) h.push_back(orb(t, u) * dim + orb(u, s));
        std::sort(h.begin(), h.end());
        if (h != histogram[orb(t, s)]) {
          throw Error(ErrorCode::InternalError, "a product of orbit sums is not constant on an orbit");
        }
      }
    }
  } else {
    AlgebraReport report = validate_algebra(integral);
    if (!report.ok()) throw Error(ErrorCode::InternalError, "Schur table fails: " + report.violations[0].message);
  }

  sd.weights = compositions(d, n);
  for (const auto& w : sd.weights) {
    const auto word_ = weight_word(w);
    sd.weight_index.push_back(sd.orbit_index(word_, word_));
  }
  sd.partitions = partitions(d, n);
  const std::size_t t = sd.partitions.size();
  for (std::size_t k = 0; k < t; ++k) {
    Vector e = zero_vector(ring, dim);
    for (std::size_t l = k; l < t; ++l) {
      const auto word_ = weight_word(sd.partitions[l]);
      e[sd.orbit_index(word_, word_)] = Scalar::one(ring);
    }
    sd.chain_idempotents.push_back(std::move(e));
  }
  for (const auto& [i, j] : sd.orbit_reps) sd.involution.push_back(sd.orbit_index(j, i));
  sd.algebra = base_change(integral, ring);
  return sd;
}

std::vector<HeredityIdeal> heredity_chain(const SchurData& sd) {
  const Algebra a = sd.algebra.ring().is_field()
                        ? sd.algebra
                        : (sd.algebra.ring().kind() == RingKind::Integers
                               ? base_change(sd.algebra, RingSpec::rationals())
                               : schur_algebra(RingSpec::rationals(), sd.n, sd.d, INT64_MAX).algebra);
  const RingSpec& field = a.ring();
  const std::size_t dim = a.dim();
  const std::size_t t = sd.partitions.size();

  // S ξ_λ S is spanned by the products ξ_{i,ℓ} ξ_{ℓ',j} with ℓ, ℓ' of weight λ.
  std::vector<Composition> left_weight(dim), right_weight(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    left_weight[c] = weight_of(sd.orbit_reps[c].first, sd.n);
    right_weight[c] = weight_of(sd.orbit_reps[c].second, sd.n);
  }
  Echelon span(field, dim);
  std::vector<std::size_t> dims(t);
  std::vector<std::vector<Vector>> bases(t);
  for (std::size_t k = t; k-- > 0;) {
    Composition lambda = sd.partitions[k];
    lambda.resize(static_cast<std::size_t>(sd.n), 0);
    std::vector<std::size_t> ending, starting;
    for (std::size_t c = 0; c < dim; ++c) {
      if (right_weight[c] == lambda) ending.push_back(c);
      if (left_weight[c] == lambda) starting.push_back(c);
    }
    for (std::size_t x : ending) {
      for (std::size_t y : starting) {
        const SparseVector& p = a.product(x, y);
        if (!p.empty()) span.insert(to_dense(p, field, dim));
      }
    }
    dims[k] = span.dim();
    bases[k] = span.rows();
  }
  if (dims[0] != dim) throw Error(ErrorCode::ChainNotIncreasing, "J_1 is not the whole algebra");
  for (std::size_t k = 0; k + 1 < t; ++k) {
    if (dims[k + 1] >= dims[k]) {
      throw Error(ErrorCode::ChainNotIncreasing, "J_" + std::to_string(k + 2) + " is not properly inside J_" +
                                                     std::to_string(k + 1));
    }
  }
  std::vector<HeredityIdeal> chain;
  for (std::size_t k = 0; k < t; ++k) {
    Echelon check(field, dim);
    for (const auto& v : bases[k]) check.insert(v);
    bool stable = true;
    for (const auto& v : bases[k]) {
      Vector w = zero_vector(field, dim);
      for (std::size_t c = 0; c < dim; ++c) w[sd.involution[c]] = v[c];
      if (!check.contains(std::move(w))) {
        stable = false;
        break;
      }
    }
    chain.push_back({k + 1, sd.partitions[k], std::move(bases[k]), stable});
  }
  return chain;
}

CellularPresentation codeterminant_cell_datum(const SchurData& sd) {
  const RingSpec zz = RingSpec::integers();
  const Algebra xi = sd.algebra.ring() == zz ? sd.algebra : schur_algebra(zz, sd.n, sd.d, INT64_MAX).algebra;
  const std::size_t dim = xi.dim();

  // labels bottom first in the cell order (reversed dominance)
  std::vector<Partition> parts = sd.partitions;
  std::reverse(parts.begin(), parts.end());

  CellDatum datum;
  std::vector<SparseVector> columns;
  std::vector<std::string> labels;
  for (const auto& lambda : parts) {
    const std::size_t l = datum.labels.size();
    datum.labels.push_back(partition_label(lambda));
    const auto tabs = semistandard_tableaux(lambda, sd.n);
    const auto ell = weight_word(lambda);
    datum.tableaux.emplace_back();
    for (const auto& s : tabs) datum.tableaux[l].push_back(s.to_string());
    datum.index.emplace_back(tabs.size(), std::vector<std::size_t>(tabs.size()));
    for (std::size_t s = 0; s < tabs.size(); ++s) {
      const std::size_t a = sd.orbit_index(tabs[s].reading_word(), ell);
      for (std::size_t t = 0; t < tabs.size(); ++t) {
        const std::size_t b = sd.orbit_index(ell, tabs[t].reading_word());
        datum.index[l][s][t] = columns.size();
        columns.push_back(xi.product(a, b));
        labels.push_back("Y" + datum.labels[l] + "[" + datum.tableaux[l][s] + "," + datum.tableaux[l][t] + "]");
      }
    }
  }
  if (columns.size() != dim) {
    throw Error(ErrorCode::CandidateNotBasis, std::to_string(columns.size()) + " codeterminants for dimension " +
                                                  std::to_string(dim));
  }
  const std::size_t nl = parts.size();
  datum.leq.assign(nl, std::vector<bool>(nl, false));
  for (std::size_t x = 0; x < nl; ++x) {
    for (std::size_t y = 0; y < nl; ++y) datum.leq[x][y] = dominance_leq(parts[y], parts[x]);
  }
  datum.involution.resize(dim);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t s = 0; s < datum.index[l].size(); ++s) {
      for (std::size_t t = 0; t < datum.index[l].size(); ++t) datum.involution[datum.index[l][s][t]] = datum.index[l][t][s];
    }
  }

  Matrix p(zz, dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (const auto& term : columns[c]) p(term.index, c) = term.coeff;
  }
  const Scalar det = determinant(p);
  if (!det.is_unit()) {
    throw Error(ErrorCode::CandidateNotBasis, "change of basis from the xi basis has determinant " + det.to_string());
  }
  const Matrix pinv = inverse(p);
  std::vector<SparseVector> pinv_cols(dim);
  for (std::size_t c = 0; c < dim; ++c) pinv_cols[c] = to_sparse(pinv.column(c));

  // Y_a Y_b computed in ξ coordinates, then rewritten with P^{-1}.
  std::vector<SparseVector> products(dim * dim);
  Vector acc = zero_vector(zz, dim), out = zero_vector(zz, dim);
  std::vector<std::size_t> touched, touched_out;
  std::vector<bool> mark(dim, false), mark_out(dim, false);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      for (const auto& x : columns[a]) {
        for (const auto& y : columns[b]) {
          const SparseVector& prod = xi.product(x.index, y.index);
          if (prod.empty()) continue;
          Scalar c = x.coeff * y.coeff;
          for (const auto& term : prod) {
            acc[term.index].add_product(c, term.coeff);
            if (!mark[term.index]) {
              mark[term.index] = true;
              touched.push_back(term.index);
            }
          }
        }
      }
      for (std::size_t k : touched) {
        if (!acc[k].is_zero()) {
          for (const auto& term : pinv_cols[k]) {
            out[term.index].add_product(acc[k], term.coeff);
            if (!mark_out[term.index]) {
              mark_out[term.index] = true;
              touched_out.push_back(term.index);
            }
          }
        }
        acc[k] = Scalar::zero(zz);
        mark[k] = false;
      }
      touched.clear();
      std::sort(touched_out.begin(), touched_out.end());
      SparseVector& dest = products[a * dim + b];
      for (std::size_t k : touched_out) {
        if (!out[k].is_zero()) dest.push_back({k, out[k]});
        out[k] = Scalar::zero(zz);
        mark_out[k] = false;
      }
      touched_out.clear();
    }
  }
  Vector unit = pinv.apply(xi.unit());
  Algebra cellular(zz, std::move(labels), std::move(products), std::move(unit));

  CellReport report = validate_cell_datum(cellular, datum);
  if (!report.ok()) {
    std::string msg = std::to_string(report.total) + " violation(s)";
    for (std::size_t k = 0; k < std::min<std::size_t>(3, report.violations.size()); ++k) {
      msg += "; " + report.violations[k].axiom + ": " + report.violations[k].message;
    }
    throw Error(ErrorCode::CandidateNotCellular, msg);
  }
  return {base_change(cellular, sd.algebra.ring()), std::move(datum), std::move(p)};
}

}  // namespace cellkit
