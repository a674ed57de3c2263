// Shared error types and small helpers used across the library.
//
// All computations are exact: 64-bit integers with overflow-checked
// multiplication where intermediate growth is possible, and integer
// polynomials elsewhere.  Floating point is never used.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlrep {

// Malformed or inconsistent input data (JSON files, tables, descriptors).
struct data_error : std::runtime_error {
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A constraint system admits no solution.
struct infeasible_error : std::runtime_error {
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A search bound was reached before the solution set could be certified.
struct cap_exceeded_error : std::runtime_error {
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

using i64 = std::int64_t;
using i128 = __int128;

// Overflow-checked multiply; computations here stay far below these limits
// unless input data is corrupt, in which case we want a loud failure.
inline i64 checked_mul(i64 a, i64 b) {
  i128 p = static_cast<i128>(a) * static_cast<i128>(b);
  if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("checked_mul: 64-bit overflow");
  return static_cast<i64>(p);
}

inline i64 checked_pow(i64 base, unsigned exp) {
  i64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { i64 t = a % b; a = b; b = t; }
  return a;
}

}  // namespace dlrep
