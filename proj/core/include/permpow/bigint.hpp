#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permpow {

/// Exact arbitrary-precision integer used for every count in the library.
/// Machine words overflow already for modest tableau shapes.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(long long n) {
  BigInt r = 1;
  for (long long j = 2; j <= n; ++j) r *= j;
  return r;
}

inline BigInt big_binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j; // divides exactly: r is binomial(n-k+j, j)
  }
  return r;
}

inline BigInt big_pow(BigInt base, unsigned long long e) {
  BigInt r = 1;
  while (e > 0) {
    if (e & 1ull) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

} // namespace permpow
