#pragma once

#include "cellkit/algebra.hpp"
#include "cellkit/module.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cellkit {

/// Cell datum (Λ, M, C, ι) attached to the basis of an algebra.
///
/// Labels are stored in a fixed order; `leq[a][b]` is the full relation
/// a ≤ b of the cell order. `index[λ][S][T]` is the basis index of C^λ_{S,T}.
struct CellDatum {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::string>> tableaux;
  std::vector<std::vector<std::vector<std::size_t>>> index;
  std::vector<std::size_t> involution;

  std::size_t size() const noexcept { return labels.size(); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq[a][b]; }
  std::size_t tableau_count(std::size_t lambda) const { return tableaux[lambda].size(); }
  /// Position of a label; throws InvalidArgument if absent.
  std::size_t find_label(const std::string& label) const;
};

struct CellPosition {
  std::size_t lambda, s, t;
};

/// Inverse of the index map. Throws DatumInvalid unless it is a bijection
/// onto {0, ..., dim - 1}.
std::vector<CellPosition> cell_positions(const CellDatum& d, std::size_t dim);

struct CellViolation {
  std::string axiom;  ///< "poset", "C1", "C2" or "C3"
  std::string message;
};

struct CellReport {
  std::vector<CellViolation> violations;
  std::size_t total = 0;
  bool ok() const noexcept { return total == 0; }

  static constexpr std::size_t kMaxRecorded = 256;
};

CellReport validate_cell_datum(const Algebra& a, const CellDatum& d);

struct CellModule {
  std::size_t lambda;
  AlgebraModule module;
};

/// θ(λ), with T₀ the first element of M(λ). Throws DatumInvalid if some
/// product leaves the allowed span.
CellModule cell_module(const Algebra& a, const CellDatum& d, std::size_t lambda);

/// A module over A turned into one over A^op by letting b act as ι(b).
AlgebraModule twist(const AlgebraModule& m, const CellDatum& d);
AlgebraModule right_cell_module(const Algebra& a, const CellDatum& d, std::size_t lambda);

struct GramData {
  std::size_t lambda;
  Matrix gram;
  bool symmetric;
};

/// G_λ from the witnesses U₀ = V₀ = first element of M(λ). In strict mode
/// every witness pair is used and any dependence throws WitnessDependence.
GramData gram_matrix(const Algebra& a, const CellDatum& d, std::size_t lambda, bool strict = false);

std::size_t gram_rank(const Algebra& a, const CellDatum& d, std::size_t lambda, const RingSpec& field);

struct SimpleModule {
  std::size_t lambda;
  AlgebraModule module;
};

struct Decomposition {
  Matrix matrix;                       ///< rows: every λ; columns: the simples
  std::vector<std::size_t> columns;    ///< λ index of each column
};

struct Cartan {
  Matrix matrix;
  Scalar determinant;
  std::vector<std::size_t> labels;     ///< λ index of each row/column
};

/// All field computations for one (algebra, datum, field) triple, computed
/// on demand and cached. The algebra is base changed to the field first.
class FieldAnalysis {
 public:
  FieldAnalysis(const Algebra& a, const CellDatum& d, const RingSpec& field);

  const Algebra& algebra() const noexcept { return algebra_; }
  const CellDatum& datum() const noexcept { return datum_; }
  const RingSpec& field() const noexcept { return algebra_.ring(); }

  const GramData& gram(std::size_t lambda);
  std::size_t gram_rank(std::size_t lambda);
  const CellModule& cell(std::size_t lambda);
  const std::vector<SimpleModule>& simples();
  /// Basis of rad A, checked nilpotent.
  const std::vector<Vector>& radical();
  /// Spanning rows of rad^k A for k = 0, 1, ... down to 0.
  const std::vector<std::vector<Vector>>& radical_powers();
  const Decomposition& decomposition();
  const Cartan& cartan();
  /// [A : L(μ)] per simple, read from the radical layers of the regular
  /// module.
  const std::vector<std::size_t>& regular_multiplicities();

 private:
  void compute_radical();

  Algebra algebra_;
  CellDatum datum_;
  std::vector<std::optional<GramData>> grams_;
  std::vector<std::optional<std::size_t>> ranks_;
  std::vector<std::optional<CellModule>> cells_;
  std::optional<std::vector<SimpleModule>> simples_;
  std::optional<std::vector<Vector>> radical_;
  std::vector<std::vector<Vector>> powers_;
  std::optional<Decomposition> decomposition_;
  std::optional<Cartan> cartan_;
  std::optional<std::vector<std::size_t>> regular_;
};

std::vector<SimpleModule> simple_modules(const Algebra& a, const CellDatum& d, const RingSpec& field);
std::vector<Vector> radical_of_algebra(const Algebra& a, const CellDatum& d, const RingSpec& field);
Decomposition decomposition_matrix(const Algebra& a, const CellDatum& d, const RingSpec& field);
Cartan cartan_matrix(const Algebra& a, const CellDatum& d, const RingSpec& field);

}  // namespace cellkit
