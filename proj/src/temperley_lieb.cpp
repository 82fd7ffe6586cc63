#include "cellkit/temperley_lieb.hpp"

#include "cellkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cellkit {

std::pair<Diagram, int> compose(const Diagram& a, const Diagram& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "diagram sizes differ");
  const int n = static_cast<int>(a.size() / 2);
  Diagram r(a.size(), -1);
  std::vector<bool> middle(static_cast<std::size_t>(n), false);
  // side 0 is a (top half of the stack), side 1 is b
  auto walk = [&](int side, int p) {
    for (;;) {
      const int q = side == 0 ? a[p] : b[p];
      if (side == 0) {
        if (q < n) return q;
        middle[q - n] = true;
        side = 1;
        p = q - n;
      } else {
        if (q >= n) return q;
        middle[q] = true;
        side = 0;
        p = n + q;
      }
    }
  };
  for (int p = 0; p < 2 * n; ++p) {
    if (r[p] != -1) continue;
    const int e = p < n ? walk(0, p) : walk(1, p);
    r[p] = e;
    r[e] = p;
  }
  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (middle[j]) continue;
    ++loops;
    int m = j;
    do {
      middle[m] = true;
      const int k = a[n + m] - n;
      middle[k] = true;
      m = b[k];
    } while (m != j);
  }
  return {r, loops};
}

namespace {

void half_diagrams(int n, std::string& cur, int depth, std::map<int, std::vector<std::string>>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (depth == 0) out[static_cast<int>(std::count(cur.begin(), cur.end(), '|'))].push_back(cur);
    return;
  }
  if (depth == 0) {
    cur.push_back('|');
    half_diagrams(n, cur, depth, out);
    cur.pop_back();
  }
  if (depth + 1 <= n - pos - 1) {
    cur.push_back('(');
    half_diagrams(n, cur, depth + 1, out);
    cur.pop_back();
  }
  if (depth > 0) {
    cur.push_back(')');
    half_diagrams(n, cur, depth - 1, out);
    cur.pop_back();
  }
}

// Arcs of a half diagram placed on points offset..offset+n-1; returns defects.
std::vector<int> place(const std::string& half, int offset, Diagram& d) {
  std::vector<int> open, defects;
  for (int p = 0; p < static_cast<int>(half.size()); ++p) {
    if (half[p] == '(') {
      open.push_back(p);
    } else if (half[p] == ')') {
      const int q = open.back();
      open.pop_back();
      d[offset + p] = offset + q;
      d[offset + q] = offset + p;
    } else {
      defects.push_back(offset + p);
    }
  }
  return defects;
}

Diagram glue(const std::string& s, const std::string& t) {
  const int n = static_cast<int>(s.size());
  Diagram d(static_cast<std::size_t>(2 * n), -1);
  const auto top = place(s, 0, d);
  const auto bottom = place(t, n, d);
  for (std::size_t k = 0; k < top.size(); ++k) {
    d[top[k]] = bottom[k];
    d[bottom[k]] = top[k];
  }
  return d;
}

Scalar power(const Scalar& x, int e) {
  Scalar r = Scalar::one(x.ring());
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

TLData tl_algebra(const RingSpec& ring, int n, const Scalar& delta) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "TL_n needs n >= 1");
  if (delta.ring() != ring) throw Error(ErrorCode::RingMismatch, "delta must lie in " + ring.to_string());
  std::map<int, std::vector<std::string>> halves;
  std::string cur;
  half_diagrams(n, cur, 0, halves);

  TLData tl;
  tl.n = n;
  tl.delta = delta;
  CellDatum& datum = tl.datum;
  std::vector<std::string> labels;
  for (auto& [lambda, list] : halves) {  // ascending: fewest strands is lowest
    std::sort(list.begin(), list.end());
    const std::size_t l = datum.labels.size();
    datum.labels.push_back(std::to_string(lambda));
    datum.tableaux.push_back(list);
    datum.index.emplace_back(list.size(), std::vector<std::size_t>(list.size()));
    for (std::size_t s = 0; s < list.size(); ++s) {
      for (std::size_t t = 0; t < list.size(); ++t) {
        datum.index[l][s][t] = tl.diagrams.size();
        tl.diagrams.push_back(glue(list[s], list[t]));
        labels.push_back(list[s] + "/" + list[t]);
      }
    }
  }
  const std::size_t nl = datum.labels.size();
  datum.leq.assign(nl, std::vector<bool>(nl, false));
  for (std::size_t x = 0; x < nl; ++x) {
    for (std::size_t y = 0; y < nl; ++y) datum.leq[x][y] = x <= y;
  }
  const std::size_t dim = tl.diagrams.size();
  datum.involution.resize(dim);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t s = 0; s < datum.index[l].size(); ++s) {
      for (std::size_t t = 0; t < datum.index[l].size(); ++t) datum.involution[datum.index[l][s][t]] = datum.index[l][t][s];
    }
  }

  std::map<Diagram, std::size_t> lookup;
  for (std::size_t k = 0; k < dim; ++k) lookup.emplace(tl.diagrams[k], k);
  std::vector<Scalar> powers;
  for (int e = 0; e <= n; ++e) powers.push_back(power(delta, e));
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      auto [d, loops] = compose(tl.diagrams[a], tl.diagrams[b]);
      const Scalar& c = powers[static_cast<std::size_t>(loops)];
      if (!c.is_zero()) products[a * dim + b].push_back({lookup.at(d), c});
    }
  }
  Diagram id(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    id[p] = n + p;
    id[n + p] = p;
  }
  tl.algebra = Algebra(ring, std::move(labels), std::move(products), unit_vector(ring, dim, lookup.at(id)));

  CellReport report = validate_cell_datum(tl.algebra, datum);
  if (!report.ok()) throw Error(ErrorCode::DatumInvalid, "diagram datum fails: " + report.violations[0].message);
  return tl;
}

TLData tl_algebra(const RingSpec& ring, int n, long delta) { return tl_algebra(ring, n, Scalar(ring, delta)); }

std::size_t tl_generator_index(const TLData& tl, int i) {
  const int n = tl.n;
  if (i < 1 || i >= n) throw Error(ErrorCode::InvalidArgument, "u_i needs 1 <= i < n");
  Diagram u(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    u[p] = n + p;
    u[n + p] = p;
  }
  u[i - 1] = i;
  u[i] = i - 1;
  u[n + i - 1] = n + i;
  u[n + i] = n + i - 1;
  auto it = std::find(tl.diagrams.begin(), tl.diagrams.end(), u);
  return static_cast<std::size_t>(it - tl.diagrams.begin());
}

std::size_t tl_identity_index(const TLData& tl) {
  const int n = tl.n;
  Diagram id(static_cast<std::size_t>(2 * n));
  for (int p = 0; p < n; ++p) {
    id[p] = n + p;
    id[n + p] = p;
  }
  auto it = std::find(tl.diagrams.begin(), tl.diagrams.end(), id);
  return static_cast<std::size_t>(it - tl.diagrams.begin());
}

}  // namespace cellkit
