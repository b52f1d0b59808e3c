#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffsync/matrix.hpp"
#include "ffsync/rng.hpp"

namespace ffsync {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Column-permutation equivalence (T1 = T2·P for a permutation P)
// ---------------------------------------------------------------------------

/// Greedy column matching with a used-index set; O(N^3).
/// Throws ShapeError when the shapes differ.
[[nodiscard]] bool perm_equiv_naive(const Matrix& t1, const Matrix& t2);

/// Sorts the columns of both matrices lexicographically and compares; O(N^2 log N).
[[nodiscard]] bool perm_equiv_lex(const Matrix& t1, const Matrix& t2);

/// Row-permutation equivalence T1 = P·T2, decided on transposes.
[[nodiscard]] bool row_perm_equiv(const Matrix& t1, const Matrix& t2);

/// Copy of t with its columns in lexicographic order; the canonical
/// representative of t's left coset under the permutation group.
[[nodiscard]] Matrix sort_columns(const Matrix& t);

/// Keeps the first-seen member of each left coset {T·P}.
[[nodiscard]] std::vector<Matrix> coset_representatives(const std::vector<Matrix>& mats);

// ---------------------------------------------------------------------------
// Randomized generators for row-stochastic invertible T
// ---------------------------------------------------------------------------

enum class GenMethod { Sar, TfUpper, TfLower, Stabilizer };

struct GenConfig {
  std::size_t n = 2;
  Field field{3};
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1'000'000;
  GenMethod method = GenMethod::Sar;
  /// SAR only: reject exact permutation matrices instead of applying the
  /// T^T·T ≠ I test, which also rejects orthogonal non-permutation matrices.
  bool strict_permutation = false;
};

/// One sampling step of Sampling-and-Rejection: draws T uniformly from the
/// row-stochastic matrices and returns it iff it passes the rejection test.
[[nodiscard]] std::optional<Matrix> sar_attempt(std::size_t n, const Field& f, Rng& rng,
                                                bool strict_permutation = false);

/// Sampling and Rejection. Throws ImpossibleConfig for (N, p) = (2, 2) and
/// GenerationExhausted after cfg.max_attempts failed draws.
[[nodiscard]] Matrix gen_sar(const GenConfig& cfg, Rng& rng);

/// Triangular Form: upper (TfUpper) or lower (TfLower) triangular
/// row-stochastic T ≠ I with nonzero diagonal. Invertible by construction.
[[nodiscard]] Matrix gen_tf(const GenConfig& cfg, Rng& rng);

/// T = Q·A·Q^{-1} with A = [A_{N−1} 0; c 1] fixing e_N and Q = [I 1; 0 1].
struct StabilizerConstruction {
  Matrix a_block;
  Vector c_row;
  Matrix q;
  Matrix a;
  Matrix t;
};

/// Deterministic conjugation from explicit parts. Throws SingularMatrix if
/// a_block is singular, ShapeError on size mismatch.
[[nodiscard]] StabilizerConstruction stabilizer_from(const Matrix& a_block, const Vector& c_row);

/// Samples an invertible A_{N−1} by rejection and a free c, then conjugates.
[[nodiscard]] StabilizerConstruction gen_stabilizer(const GenConfig& cfg, Rng& rng);

/// Dispatches on cfg.method; Stabilizer returns the T part.
[[nodiscard]] Matrix generate(const GenConfig& cfg, Rng& rng);

// ---------------------------------------------------------------------------
// Exhaustive enumeration oracles
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumeratedSets {
  std::vector<Matrix> m_rs;          ///< all row-stochastic
  std::vector<Matrix> g_rs;          ///< row-stochastic and invertible
  std::vector<Matrix> g_rs_nonperm;  ///< g_rs minus permutation matrices
  std::vector<Matrix> u_rs_upper;    ///< upper triangular members of g_rs, excluding I
  std::vector<Matrix> u_rs_lower;    ///< lower triangular members of g_rs, excluding I
  std::vector<Matrix> perms;         ///< permutation matrices
  /// Members of g_rs with T^T·T = I (what the SAR rejection test removes).
  std::size_t orthogonal = 0;
};

/// Enumerates M^RS by the N(N−1) free entries in odometer order (last free
/// entry fastest), fixing each row's last entry. Throws BudgetExceeded when
/// p^{N(N−1)} > budget.
[[nodiscard]] EnumeratedSets enumerate_sets(std::size_t n, const Field& f,
                                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Counts invertible matrices among all p^{N^2}. Throws BudgetExceeded.
[[nodiscard]] std::uint64_t count_invertible(std::size_t n, const Field& f,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

// ---------------------------------------------------------------------------
// Closed-form cardinalities
// ---------------------------------------------------------------------------

struct CardinalityReport {
  std::size_t n = 0;
  std::uint32_t p = 0;
  BigInt m_all;   ///< p^{N^2}
  BigInt gl;      ///< ∏_{i=0}^{N−1} (p^N − p^i)
  BigInt m_rs;    ///< p^{N(N−1)}
  BigInt g_rs;    ///< p^{N−1} ∏_{i=0}^{N−2} (p^{N−1} − p^i)
  BigInt u_rs;    ///< (p−1)^{N−1} p^{(N−1)(N−2)/2} − 1
  BigInt perms;   ///< N!
  BigInt delta_numerator;  ///< g_rs − N!, before reduction
  BigRational delta;       ///< (g_rs − N!) / m_rs, reduced
};

[[nodiscard]] CardinalityReport cardinalities(std::size_t n, const Field& f);

/// δ through the product form ∏_{i=1}^{N−1}(1 − p^{−i}) − N!/p^{N(N−1)}.
[[nodiscard]] BigRational delta_product_form(std::size_t n, const Field& f);

}  // namespace ffsync
