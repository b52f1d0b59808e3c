#pragma once

#include <optional>
#include <span>
#include <string>

#include "ffsync/matrix.hpp"

namespace ffsync {

/// Outcome of the spectral consensus test on a graph matrix E.
///
/// E admits nontrivial consensus exactly when it is row-stochastic, its
/// characteristic polynomial is λ^N − λ^{N−1}, and the left eigenvector p
/// for eigenvalue 1 has p·1 ≠ 0. The eigenvector is scaled so that its
/// first nonzero entry is 1; the consensus value does not depend on the
/// scaling.
struct AdmissibilityReport {
  bool row_stochastic = false;
  bool charpoly_ok = false;
  /// Nilpotent E gives trivial consensus to zero; reported but never admissible.
  bool nilpotent = false;
  /// Present iff the left null space of E − I is one-dimensional.
  std::optional<Vector> left_eigvec;
  Residue p_dot_one = 0;
  bool admissible = false;
  Matrix laplacian;
  CharPoly char_poly;
  /// Set when E is otherwise admissible but p·1 = 0.
  std::optional<std::string> warning;
};

[[nodiscard]] AdmissibilityReport check_admissible(const Matrix& e);

/// L = I − E.
[[nodiscard]] Matrix laplacian(const Matrix& e);

/// α = (p·x0)(p·1)^{-1}. Throws NotAdmissible unless check_admissible passes.
[[nodiscard]] Residue consensus_alpha(const Matrix& e, std::span<const Residue> x0);

/// T^{-1}·E·T. Throws SingularMatrix for singular T.
[[nodiscard]] Matrix similar_transform(const Matrix& e, const Matrix& t);

/// Admissible N×N matrix Q·J·Q^{-1} built from the Jordan form
/// J = diag(0, …, 0, 1) and Q = [I_{N−1} 1; 0 1], so that Q·e_N = 1_N.
/// Throws ShapeError for n < 2.
[[nodiscard]] Matrix seed_admissible(std::size_t n, Field field);

}  // namespace ffsync
