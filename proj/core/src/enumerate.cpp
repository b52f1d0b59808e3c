#include <string>

#include "ffsync/error.hpp"
#include "ffsync/generators.hpp"

namespace ffsync {

namespace {

// p^k, or nullopt once it passes budget.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::uint64_t k, std::uint64_t budget) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (acc > budget / p) return std::nullopt;
    acc *= p;
  }
  return acc;
}

std::uint64_t require_budget(std::uint64_t p, std::uint64_t k, std::uint64_t budget) {
  auto count = bounded_power(p, k, budget);
  if (!count) {
    throw Error(Errc::BudgetExceeded, std::to_string(p) + "^" + std::to_string(k) +
                                          " candidates exceed the budget of " +
                                          std::to_string(budget));
  }
  return *count;
}

// Advances digits (last digit fastest); false after wrapping to all zeros.
bool odometer_step(std::vector<Residue>& digits, Residue base) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return true;
    digits[k] = 0;
  }
  return false;
}

}  // namespace

EnumeratedSets enumerate_sets(std::size_t n, const Field& f, std::uint64_t budget) {
  if (n < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const std::size_t free_per_row = n - 1;
  require_budget(f.modulus(), n * free_per_row, budget);

  EnumeratedSets out;
  std::vector<Residue> digits(n * free_per_row, 0);
  do {
    Matrix t(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Residue sum = 0;
      for (std::size_t j = 0; j < free_per_row; ++j) {
        const Residue v = digits[i * free_per_row + j];
        t.set(i, j, v);
        sum = f.add(sum, v);
      }
      t.set(i, n - 1, f.sub(1, sum));
    }

    out.m_rs.push_back(t);
    if (det(t) == 0) continue;

    out.g_rs.push_back(t);
    if (is_identity(t.transpose() * t)) ++out.orthogonal;
    if (is_permutation(t)) {
      out.perms.push_back(t);
    } else {
      out.g_rs_nonperm.push_back(t);
    }
    if (!is_identity(t)) {
      if (is_upper_triangular(t)) out.u_rs_upper.push_back(t);
      if (is_lower_triangular(t)) out.u_rs_lower.push_back(t);
    }
  } while (odometer_step(digits, f.modulus()));
  return out;
}

std::uint64_t count_invertible(std::size_t n, const Field& f, std::uint64_t budget) {
  require_budget(f.modulus(), n * n, budget);
  std::uint64_t count = 0;
  std::vector<Residue> digits(n * n, 0);
  do {
    if (det(Matrix(f, n, n, digits)) != 0) ++count;
  } while (odometer_step(digits, f.modulus()));
  return count;
}

}  // namespace ffsync
