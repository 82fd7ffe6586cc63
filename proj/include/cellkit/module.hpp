#pragma once

#include "cellkit/algebra.hpp"
#include "cellkit/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cellkit {

/// A left module presented by one rank × rank action matrix per basis
/// element of the parent algebra. Column j of action[i] is b_i · e_j.
struct AlgebraModule {
  Algebra algebra;
  std::size_t rank = 0;
  std::vector<Matrix> action;
};

/// Σ a_i action[i]
Matrix action_of(const AlgebraModule& m, const Vector& a);

/// Empty if action(b_i) action(b_j) = Σ_k γ^k_ij action(b_k) for all i, j and
/// the unit acts as the identity; otherwise a description of the first
/// failure.
std::optional<std::string> representation_defect(const AlgebraModule& m);

AlgebraModule regular_module(const Algebra& a);

/// V/W for A-stable subspaces W ⊆ V of a module over a field, both given by
/// spanning vectors. The lifts of the chosen basis land in `lifts`.
/// Throws InvalidArgument if either subspace is not stable.
AlgebraModule subquotient(const AlgebraModule& m, const std::vector<Vector>& upper,
                          const std::vector<Vector>& lower, std::vector<Vector>* lifts = nullptr);
AlgebraModule submodule(const AlgebraModule& m, const std::vector<Vector>& spanning,
                        std::vector<Vector>* lifts = nullptr);
AlgebraModule quotient_module(const AlgebraModule& m, const std::vector<Vector>& sub,
                              std::vector<Vector>* lifts = nullptr);

/// Basis of Hom_A(M, N), each map an N.rank × M.rank matrix.
std::vector<Matrix> hom_space(const AlgebraModule& m, const AlgebraModule& n);

/// Layers M/rad M, rad M/rad² M, ... where rad^k M is spanned by the
/// images of `rad_ideal` acting on the previous term.
std::vector<AlgebraModule> radical_filtration(const AlgebraModule& m,
                                              const std::vector<Vector>& rad_ideal);

}  // namespace cellkit
