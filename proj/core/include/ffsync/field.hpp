#pragma once

#include <cstdint>

namespace ffsync {

/// Element of GF(p), always kept in [0, p).
using Residue = std::uint32_t;

/// Trial-division primality test; intended for desk-scale moduli.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Prime field GF(p). Construction rejects composite moduli and p >= 2^31
/// (products of two residues must fit in 64 bits).
class Field {
 public:
  explicit Field(std::uint32_t p);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return p_; }

  [[nodiscard]] Residue reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
  }
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
    const auto s = static_cast<std::uint64_t>(a) + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(static_cast<std::uint64_t>(a) + p_ - b);
  }
  [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  /// Throws Error(NoInverse) for a == 0.
  [[nodiscard]] Residue inv(Residue a) const;

  [[nodiscard]] Residue pow(Residue base, std::uint64_t exp) const noexcept;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace ffsync
