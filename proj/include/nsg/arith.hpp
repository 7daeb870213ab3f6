#pragma once

#include <cstdint>
#include <numeric>
#include <span>

#include "nsg/error.hpp"

namespace nsg {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_pow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline Int gcd_of(std::span<const Int> xs) {
  Int g = 0;
  for (Int x : xs) g = std::gcd(g, x);
  return g;
}

// Floor and ceiling division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Exact integer square root; returns -1 when n is not a perfect square.
inline Int exact_sqrt(Int n) {
  if (n < 0) return -1;
  Int r = static_cast<Int>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<__int128>(r) * r == n ? r : -1;
}

}  // namespace nsg
