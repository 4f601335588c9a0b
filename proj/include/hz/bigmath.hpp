#pragma once

#include "hz/indices.hpp"

namespace hz {

// b^e by repeated squaring. 0^0 = 1 by convention.
inline IndexValue big_pow(IndexValue b, unsigned long long e) {
  IndexValue r = 1;
  while (e > 0) {
    if (e & 1ull) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Binomial coefficient, exact; 0 outside the triangle.
inline IndexValue big_binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  IndexValue r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace hz
