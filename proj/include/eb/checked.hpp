#pragma once

#include <cstdint>
#include <limits>

#include "eb/errors.hpp"

// Checked int64 arithmetic. Rank and cardinality bookkeeping must fail
// loudly instead of wrapping: a silent wrap would corrupt level indices.

namespace eb {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
  return r;
}

inline int64_t checked_pow(int64_t base, int64_t exp) {
  if (exp < 0) throw precondition_error("checked_pow: negative exponent");
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Exact C(n, m) for n >= 0, throwing once the value leaves int64 range.
// Intermediates run in unsigned 128-bit; each partial quotient is exact.
inline int64_t checked_binom(int64_t n, int64_t m) {
  if (m < 0 || n < 0) throw precondition_error("checked_binom: negative argument");
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  unsigned __int128 r = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(std::numeric_limits<int64_t>::max());
  for (int64_t i = 0; i < m; ++i) {
    // After division the partial value equals C(n, i+1), which is
    // nondecreasing for i+1 <= n/2, so an early excess is final.
    r = r * static_cast<unsigned __int128>(n - i);
    r = r / static_cast<unsigned __int128>(i + 1);
    if (r > limit) throw overflow_error("binomial coefficient exceeds integer budget");
  }
  return static_cast<int64_t>(r);
}

}  // namespace eb
