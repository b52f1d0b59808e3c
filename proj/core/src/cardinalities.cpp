#include "ffsync/generators.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ffsync {

namespace {

BigInt ipow(const BigInt& base, std::size_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt factorial(std::size_t n) {
  BigInt acc = 1;
  for (std::size_t k = 2; k <= n; ++k) acc *= k;
  return acc;
}

}  // namespace

CardinalityReport cardinalities(std::size_t n, const Field& f) {
  const BigInt p = f.modulus();
  CardinalityReport r;
  r.n = n;
  r.p = f.modulus();
  r.m_all = ipow(p, n * n);

  r.gl = 1;
  for (std::size_t i = 0; i < n; ++i) r.gl *= ipow(p, n) - ipow(p, i);

  r.m_rs = n == 0 ? BigInt(1) : ipow(p, n * (n - 1));

  if (n == 0) {
    r.g_rs = 1;
    r.u_rs = 0;
  } else {
    r.g_rs = ipow(p, n - 1);
    for (std::size_t i = 0; i + 2 <= n; ++i) r.g_rs *= ipow(p, n - 1) - ipow(p, i);
    r.u_rs = ipow(p - 1, n - 1) * ipow(p, (n - 1) * (n >= 2 ? n - 2 : 0) / 2) - 1;
  }

  r.perms = factorial(n);
  r.delta_numerator = r.g_rs - r.perms;
  r.delta = BigRational(r.delta_numerator, r.m_rs);
  return r;
}

BigRational delta_product_form(std::size_t n, const Field& f) {
  const BigInt p = f.modulus();
  BigRational prod = 1;
  for (std::size_t i = 1; i + 1 <= n; ++i) prod *= BigRational(1) - BigRational(BigInt(1), ipow(p, i));
  const BigInt den = n == 0 ? BigInt(1) : ipow(p, n * (n - 1));
  return prod - BigRational(factorial(n), den);
}

}  // namespace ffsync
