#pragma once

#include <cstdint>

#include "scroll/errors.hpp"

namespace scroll {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("64-bit overflow in multiplication");
  return r;
}

}  // namespace scroll
