#include "cellkit/qh.hpp"

#include "cellkit/combinatorics.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/linalg.hpp"

#include <algorithm>

namespace cellkit {

std::vector<std::size_t> linear_extension(const CellDatum& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    bool progress = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y) {
        if (!placed[y] && d.less(y, x)) minimal = false;
      }
      if (minimal) {
        placed[x] = true;
        order.push_back(x);
        progress = true;
        break;
      }
    }
    if (!progress) throw Error(ErrorCode::DatumInvalid, "cell order has a cycle");
  }
  return order;
}

std::vector<bool> heredity_layer_check(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  if (!field.is_field()) throw Error(ErrorCode::WrongRing, "heredity_layer_check needs a field");
  const Algebra af = base_change(a, field);
  const std::size_t dim = af.dim();
  const std::vector<CellPosition> pos = cell_positions(d, dim);
  std::vector<bool> result(d.size(), false);
  std::vector<bool> below(d.size(), false);
  for (std::size_t lambda : linear_extension(d)) {
    std::vector<std::size_t> ideal, position(dim, dim), layer;
    std::size_t kept = 0;
    for (std::size_t k = 0; k < dim; ++k) {
      if (below[pos[k].lambda]) {
        ideal.push_back(k);
      } else {
        position[k] = kept++;
        if (pos[k].lambda == lambda) layer.push_back(position[k]);
      }
    }
    const Algebra quotient = quotient_by_basis_ideal(af, ideal);
    bool nonzero = false;
    for (std::size_t x : layer) {
      for (std::size_t y : layer) {
        if (!quotient.product(x, y).empty()) {
          nonzero = true;
          break;
        }
      }
      if (nonzero) break;
    }
    result[lambda] = nonzero;
    below[lambda] = true;
  }
  return result;
}

QHReport qh_check_field(FieldAnalysis& fa) {
  const CellDatum& d = fa.datum();
  QHReport r;
  r.ring = fa.field();
  r.labels = d.labels;
  r.chain_length = d.size();
  bool all_nonzero = true;
  for (std::size_t l = 0; l < d.size(); ++l) {
    const bool nz = fa.gram_rank(l) > 0;
    r.gram_nonzero.push_back(nz);
    if (!nz) {
      all_nonzero = false;
      r.notes.push_back("phi_" + d.labels[l] + " vanishes over " + r.ring.to_string());
    }
  }
  r.n_simples = fa.simples().size();
  const Cartan& c = fa.cartan();
  r.cartan_det = c.determinant;
  r.layer_nonzero = heredity_layer_check(fa.algebra(), d, fa.field());

  const bool by_count = r.n_simples == d.size();
  const bool by_det = c.determinant.is_one();
  if (all_nonzero != by_count || all_nonzero != by_det || r.layer_nonzero != r.gram_nonzero) {
    throw Error(ErrorCode::CriteriaDisagree,
                "over " + r.ring.to_string() + ": gram nonzero " + (all_nonzero ? "yes" : "no") + ", simples " +
                    std::to_string(r.n_simples) + "/" + std::to_string(d.size()) + ", det C " +
                    c.determinant.to_string() + ", layer check " +
                    (r.layer_nonzero == r.gram_nonzero ? "agrees" : "differs"));
  }
  r.verdict = all_nonzero;
  r.notes.push_back(kOrderConvention);
  return r;
}

QHReport qh_check_field(const Algebra& a, const CellDatum& d, const RingSpec& field) {
  FieldAnalysis fa(a, d, field);
  return qh_check_field(fa);
}

namespace {

std::vector<Integer> integer_prime_factors(Integer n) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

QHReport bad_primes_over_Z(const Algebra& a, const CellDatum& d) {
  if (a.ring().kind() != RingKind::Integers) {
    throw Error(ErrorCode::WrongRing, "bad primes need an algebra over Z, got " + a.ring().to_string());
  }
  QHReport r;
  r.ring = a.ring();
  r.labels = d.labels;
  r.chain_length = d.size();
  std::vector<Integer> primes;
  for (std::size_t l = 0; l < d.size(); ++l) {
    const Integer c = content_gcd(gram_matrix(a, d, l).gram);
    r.gram_content.push_back(c);
    if (c == 0) {
      r.fatal = true;
      r.notes.push_back("phi_" + d.labels[l] + " is identically zero; no residue field works");
      continue;
    }
    for (const auto& p : integer_prime_factors(c)) {
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!p.fits_slong_p() || p.get_si() >= (std::int64_t{1} << 62)) {
      r.notes.push_back("prime " + p.get_str() + " is too large to confirm over its residue field");
      continue;
    }
    QHReport field = qh_check_field(a, d, RingSpec::prime_field(p.get_si()));
    if (field.verdict) {
      throw Error(ErrorCode::InternalError, "prime " + p.get_str() + " divides a Gram content but F_p passes");
    }
    r.per_prime.push_back(std::move(field));
  }
  r.bad_primes = std::move(primes);
  r.verdict = r.bad_primes.empty() && !r.fatal;
  r.notes.push_back(kOrderConvention);
  return r;
}

QHReport qh_check_ring(const Algebra& a, const CellDatum& d, const RingSpec& ring) {
  if (ring.is_field()) return qh_check_field(a, d, ring);
  if (ring.kind() == RingKind::Integers) {
    if (a.ring() != ring) throw Error(ErrorCode::NoCanonicalMap, "no map " + a.ring().to_string() + " -> Z");
    return bad_primes_over_Z(a, d);
  }
  // ℤ/m with m composite: decided over each residue field F_p, p | m
  QHReport r;
  r.ring = ring;
  r.labels = d.labels;
  r.chain_length = d.size();
  r.verdict = true;
  for (std::int64_t p : prime_factors(ring.modulus())) {
    QHReport field = qh_check_field(a, d, RingSpec::prime_field(p));
    if (!field.verdict) {
      r.verdict = false;
      r.bad_primes.emplace_back(static_cast<long>(p));
    }
    r.per_prime.push_back(std::move(field));
  }
  if (!is_squarefree(ring.modulus())) {
    r.notes.push_back(ring.to_string() + " is not regular; the verdict is taken over every residue field F_p, p | " +
                      std::to_string(ring.modulus()));
  }
  r.notes.push_back(kOrderConvention);
  return r;
}

std::optional<std::int64_t> ring_gldim(const RingSpec& ring) {
  switch (ring.kind()) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return 0;
    case RingKind::Integers:
      return 1;
    case RingKind::IntegersMod:
      if (is_squarefree(ring.modulus())) return 0;
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::int64_t> gldim_bound(std::size_t chain_length, const RingSpec& ring) {
  if (chain_length < 1) throw Error(ErrorCode::InvalidArgument, "chain length must be at least 1");
  auto g = ring_gldim(ring);
  if (!g) return std::nullopt;
  return 2 * (static_cast<std::int64_t>(chain_length) - 1) + *g;
}

namespace {

void require_schur_hypothesis(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "n and d must be positive");
  if (n < d) {
    const auto t = partitions(d, n).size();
    throw Error(ErrorCode::HypothesisViolated, "closed form needs n >= d; only the bound 2(t-1) = " +
                                                   std::to_string(2 * (t - 1)) + " + gldim R applies");
  }
}

std::int64_t field_value(int d, std::int64_t p) { return 2 * d - 2 * alpha_p(d, p); }

}  // namespace

DimensionReport gldim_schur(const RingSpec& ring, int n, int d) {
  require_schur_hypothesis(n, d);
  DimensionReport r;
  r.gldim_upper_bound = gldim_bound(partitions(d, n).size(), ring);
  std::vector<std::int64_t> values;
  switch (ring.kind()) {
    case RingKind::Rationals:
      r.per_residue_field["Q"] = 0;
      values.push_back(0);
      r.gldim_exact = 0;
      break;
    case RingKind::PrimeField: {
      const std::int64_t v = field_value(d, ring.modulus());
      r.per_residue_field["F" + std::to_string(ring.modulus())] = v;
      values.push_back(v);
      r.gldim_exact = v;
      break;
    }
    case RingKind::Integers: {
      // α_p(d) = d for every p > d, so only p <= d can lower the minimum
      std::int64_t best = 0;
      for (std::int64_t p = 2; p <= d; ++p) {
        if (!is_prime(p)) continue;
        const std::int64_t v = field_value(d, p);
        r.per_residue_field["F" + std::to_string(p)] = v;
        values.push_back(v);
        best = std::max(best, v);
      }
      r.per_residue_field["F_p, p>" + std::to_string(d)] = 0;
      values.push_back(0);
      r.gldim_exact = 1 + best;
      r.notes.push_back("Krull dimension of Z is 1");
      break;
    }
    case RingKind::IntegersMod: {
      std::int64_t best = 0;
      for (std::int64_t p : prime_factors(ring.modulus())) {
        const std::int64_t v = field_value(d, p);
        r.per_residue_field["F" + std::to_string(p)] = v;
        values.push_back(v);
        best = std::max(best, v);
      }
      if (is_squarefree(ring.modulus())) {
        r.gldim_exact = best;
      } else {
        r.notes.push_back(ring.to_string() + " has infinite global dimension; no gldim is claimed");
      }
      break;
    }
  }
  auto [lo, hi] = findim_bounds(values, ring);
  r.findim_lower = lo;
  r.findim_upper = hi;
  return r;
}

std::int64_t findim_schur_mod_m(int n, int d, std::int64_t m) {
  require_schur_hypothesis(n, d);
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  std::int64_t best = 0;
  for (std::int64_t p : prime_factors(m)) best = std::max(best, field_value(d, p));
  return best;
}

std::pair<std::int64_t, std::int64_t> findim_bounds(const std::vector<std::int64_t>& per_field,
                                                    const RingSpec& ring) {
  if (per_field.empty()) throw Error(ErrorCode::EmptyInput, "no residue field values supplied");
  const std::int64_t lower = *std::max_element(per_field.begin(), per_field.end());
  const std::int64_t findim_r = ring.kind() == RingKind::Integers ? 1 : 0;
  return {lower, lower + findim_r};
}

}  // namespace cellkit
