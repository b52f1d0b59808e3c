#pragma once

#include <cstdint>
#include <random>

#include "ffsync/field.hpp"

namespace ffsync {

/// Seeded PRNG handle. Bounded draws use rejection on raw mt19937_64 output
/// rather than std::uniform_int_distribution, whose algorithm is
/// implementation-defined, so equal seeds give equal streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  Residue uniform(const Field& f) { return static_cast<Residue>(below(f.modulus())); }
  Residue nonzero(const Field& f) { return static_cast<Residue>(1 + below(f.modulus() - 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ffsync
