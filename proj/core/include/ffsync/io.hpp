#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffsync/admissibility.hpp"
#include "ffsync/dynamics.hpp"
#include "ffsync/generators.hpp"
#include "ffsync/matrix.hpp"

namespace ffsync {

// Matrix text format:
//
//   p ROWS COLS
//   e11 e12 ... e1C
//   ...
//
// Entries are decimal residues in [0, p). Several matrices in one stream
// are separated by blank lines. Malformed input raises Error(ParseError)
// carrying the 1-based line number.

[[nodiscard]] Matrix parse_matrix(std::string_view text);
[[nodiscard]] std::vector<Matrix> parse_matrix_records(std::string_view text);
[[nodiscard]] Matrix read_matrix_file(const std::filesystem::path& path);

[[nodiscard]] std::string format_matrix(const Matrix& m);
[[nodiscard]] std::string format_matrix_records(std::span<const Matrix> mats);

/// Comma- or whitespace-separated residues, e.g. "2,1". Values are reduced mod p.
[[nodiscard]] Vector parse_vector(std::string_view text, const Field& f);

/// Flat `key=value` lines.
[[nodiscard]] std::string format_report(const AdmissibilityReport& rep);
[[nodiscard]] std::string format_cardinalities(const CardinalityReport& rep, bool approx = false);
[[nodiscard]] std::string format_verdict(const StabilizabilityVerdict& v);

/// δ as `num/den` (always both parts), or a decimal with `approx`.
[[nodiscard]] std::string format_rational(const BigRational& r, bool approx = false);

/// CSV `k,agent,dim,value`; α rows use agent id `alpha`. Indices are 0-based.
void write_trace_csv(std::ostream& os, const SimulationTrace& trace);

inline constexpr std::string_view kSweepFormulas[] = {"m_all", "gl",    "m_rs", "g_rs",
                                                      "u_rs",  "perms", "delta"};

/// Cardinality sweep over N ∈ [nmin, nmax] and primes p ∈ [pmin, pmax].
/// With a formula name the CSV is `N,p,value`; without one every formula is
/// emitted as `formula,N,p,value`. Throws InvalidArgument for an unknown name.
[[nodiscard]] std::string format_sweep(std::size_t nmin, std::size_t nmax, std::uint32_t pmin,
                                       std::uint32_t pmax,
                                       std::optional<std::string_view> formula = std::nullopt,
                                       bool approx = false);

}  // namespace ffsync
