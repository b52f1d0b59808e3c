#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffsync {

enum class Errc {
  NotPrime,
  NoInverse,
  ShapeError,
  SingularMatrix,
  FieldMismatch,
  NotAdmissible,
  GenerationExhausted,
  ImpossibleConfig,
  BudgetExceeded,
  NotStabilizable,
  MissingGain,
  BadGain,
  Unsupported,
  ParseError,
  InvalidArgument,
};

/// Stable machine-readable name of an error code, e.g. "SingularMatrix".
std::string_view errc_token(Errc code) noexcept;

/// Every library failure is reported as an ffsync::Error carrying an Errc.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  /// Parse errors carry the 1-based line number of the offending input line.
  Error(Errc code, const std::string& what, std::size_t line)
      : std::runtime_error(what), code_(code), line_(line) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }
  [[nodiscard]] std::string_view token() const noexcept { return errc_token(code_); }
  [[nodiscard]] std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  Errc code_;
  std::optional<std::size_t> line_;
};

}  // namespace ffsync
