#pragma once

#include "cellkit/cellular.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cellkit {

/// Wording used in every report about which order is meant.
inline constexpr const char* kOrderConvention =
    "labels listed in cell order (bottom first); the quasi-hereditary order is its reverse";

struct QHReport {
  RingSpec ring;
  std::vector<std::string> labels;
  std::vector<bool> gram_nonzero;           ///< per λ, over the field (empty for ℤ, ℤ/m)
  std::vector<bool> layer_nonzero;          ///< J² ≠ 0 per λ
  std::size_t n_simples = 0;
  std::size_t chain_length = 0;
  std::optional<Scalar> cartan_det;
  bool verdict = false;
  std::vector<Integer> bad_primes;
  bool fatal = false;                       ///< some G_λ is identically zero over ℤ
  std::vector<Integer> gram_content;        ///< per λ, over ℤ
  std::vector<QHReport> per_prime;          ///< ℤ/m: one field report per p | m
  std::vector<std::string> notes;
};

/// Bottom-to-top listing of the labels compatible with the cell order.
std::vector<std::size_t> linear_extension(const CellDatum& d);

/// Per λ: whether the layer of λ squares to a nonzero ideal in A/A(<λ).
std::vector<bool> heredity_layer_check(const Algebra& a, const CellDatum& d, const RingSpec& field);

/// Gram nonvanishing, number of simples and det Cartan, which must agree.
/// Throws CriteriaDisagree otherwise.
QHReport qh_check_field(FieldAnalysis& fa);
QHReport qh_check_field(const Algebra& a, const CellDatum& d, const RingSpec& field);

/// Primes dividing the content of some Gram matrix over ℤ; each one is
/// confirmed bad by a field check.
QHReport bad_primes_over_Z(const Algebra& a, const CellDatum& d);

QHReport qh_check_ring(const Algebra& a, const CellDatum& d, const RingSpec& ring);

/// gldim of the base ring; nullopt stands for infinity.
std::optional<std::int64_t> ring_gldim(const RingSpec& ring);

/// 2(t−1) + gldim R, or nullopt (infinite).
std::optional<std::int64_t> gldim_bound(std::size_t chain_length, const RingSpec& ring);

struct DimensionReport {
  std::optional<std::int64_t> gldim_exact;
  std::optional<std::int64_t> gldim_upper_bound;  ///< nullopt = infinite
  std::int64_t findim_lower = 0;
  std::int64_t findim_upper = 0;
  std::map<std::string, std::int64_t> per_residue_field;
  std::vector<std::string> notes;
};

/// Closed forms for S_R(n, d). Throws HypothesisViolated if n < d.
DimensionReport gldim_schur(const RingSpec& ring, int n, int d);

/// 2d − 2 min_{p | m} α_p(d). Throws HypothesisViolated if n < d.
std::int64_t findim_schur_mod_m(int n, int d, std::int64_t m);

/// (sup of the residue field values, findim R + sup). Throws EmptyInput.
std::pair<std::int64_t, std::int64_t> findim_bounds(const std::vector<std::int64_t>& per_field,
                                                    const RingSpec& ring);

}  // namespace cellkit
