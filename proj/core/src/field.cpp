#include "ffsync/field.hpp"

#include <string>
#include <utility>

#include "ffsync/error.hpp"

namespace ffsync {

std::string_view errc_token(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoInverse: return "NoInverse";
    case Errc::ShapeError: return "ShapeError";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::ImpossibleConfig: return "ImpossibleConfig";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotStabilizable: return "NotStabilizable";
    case Errc::MissingGain: return "MissingGain";
    case Errc::BadGain: return "BadGain";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (1U << 31)) {
    throw Error(Errc::Unsupported, "modulus " + std::to_string(p) + " exceeds 2^31");
  }
}

Residue Field::inv(Residue a) const {
  if (a % p_ == 0) throw Error(Errc::NoInverse, "zero has no multiplicative inverse");
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const auto q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return reduce(s0);
}

Residue Field::pow(Residue base, std::uint64_t exp) const noexcept {
  Residue acc = 1 % p_;
  while (exp > 0) {
    if (exp & 1U) acc = mul(acc, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return acc;
}

}  // namespace ffsync
