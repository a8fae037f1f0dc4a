#pragma once

#include <cstdint>

#include "rrw/errors.hpp"

namespace rrw {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

inline int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("exponent overflow");
  return r;
}

}  // namespace rrw
