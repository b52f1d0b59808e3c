#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffsync/matrix.hpp"

namespace ffsync {

/// Identical agents x_i(k+1) = A x_i(k) + B u_i(k) with the cooperative
/// law u_i(k) = −K Σ_j L_ij x_j(k).
struct AgentSystem {
  Matrix a;
  Matrix b;
  std::optional<Matrix> k;

  [[nodiscard]] std::size_t state_dim() const noexcept { return a.rows(); }
  [[nodiscard]] std::size_t input_dim() const noexcept { return b.cols(); }
};

struct StabilizabilityVerdict {
  std::size_t controllable_dim = 0;
  bool stabilizable = false;
  std::string reason;
};

/// Kalman controllability staircase. `basis` is an invertible S whose first
/// controllable_dim columns span the reachable subspace, so S^{-1}·A·S is
/// block upper triangular with the uncontrollable block bottom-right.
struct Staircase {
  StabilizabilityVerdict verdict;
  Matrix basis;
};

[[nodiscard]] Staircase staircase(const Matrix& a, const Matrix& b);

/// Gain K with (A − BK) nilpotent.
///
/// Single input: deadbeat placement on the controllable block (Ackermann's
/// formula for target polynomial λ^r), zero gain on the uncontrollable
/// block, mapped back through the staircase basis. Multiple inputs:
/// exhaustive search over gains when p^{mn} ≤ 10^6, otherwise Unsupported.
/// Throws NotStabilizable when the uncontrollable block is not nilpotent.
[[nodiscard]] Matrix stabilizing_gain(const Matrix& a, const Matrix& b);

inline constexpr std::uint64_t kGainSearchBudget = 1'000'000;

/// Every K ∈ GF(p)^{m×n} with (A − BK)^n = 0, in odometer order.
/// Throws BudgetExceeded when p^{mn} > budget.
[[nodiscard]] std::vector<Matrix> nilpotent_gains(const Matrix& a, const Matrix& b,
                                                  std::uint64_t budget = kGainSearchBudget);

/// I_N ⊗ A − (I_N − E) ⊗ BK. Throws MissingGain when sys.k is empty.
[[nodiscard]] Matrix closed_loop(const Matrix& e, const AgentSystem& sys);

/// char_poly(closed_loop) == char_poly(A)·λ^{(N−1)n}.
[[nodiscard]] bool verify_closed_loop_spectrum(const Matrix& e, const AgentSystem& sys);

/// Exact trajectory of N agents with n-dimensional states.
struct SimulationTrace {
  std::size_t agents = 0;
  std::size_t dim = 1;
  /// states[k] is the stacked vector (x_1(k), …, x_N(k)).
  std::vector<Vector> states;
  /// First k after which every agent holds the same state for the rest of
  /// the trace (scalar runs additionally require the state to stay constant).
  std::optional<std::size_t> sync_step;
  /// α(k) = Σ p_i x_i(k) / Σ p_i; empty when E is not admissible.
  std::vector<Vector> alpha;
  /// α(k+1) = A·α(k) held at every recorded step (vacuous for scalar runs).
  bool alpha_recursion_ok = true;

  [[nodiscard]] std::span<const Residue> state(std::size_t step, std::size_t agent) const {
    return std::span<const Residue>(states[step]).subspan(agent * dim, dim);
  }
  [[nodiscard]] std::size_t steps() const noexcept { return states.size(); }
};

/// Iterates x(k+1) = E x(k) for k = 0..kmax. Throws ShapeError on size
/// mismatch or kmax < N.
[[nodiscard]] SimulationTrace simulate_scalar(const Matrix& e, std::span<const Residue> x0,
                                              std::size_t kmax);

/// Iterates the global closed loop for k = 0..kmax (default N·n + 2).
/// Throws NotAdmissible, MissingGain, BadGain (A − BK not nilpotent) or
/// ShapeError.
[[nodiscard]] SimulationTrace simulate_lti(const Matrix& e, const AgentSystem& sys,
                                           std::span<const Residue> x0,
                                           std::optional<std::size_t> kmax = std::nullopt);

}  // namespace ffsync
