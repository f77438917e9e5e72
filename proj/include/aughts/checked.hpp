#pragma once

#include <concepts>

#include "aughts/errors.hpp"

namespace aughts {

template <std::integral T>
constexpr T checked_add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("integer overflow in addition");
  return out;
}

template <std::integral T>
constexpr T checked_sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticError("integer overflow in subtraction");
  return out;
}

template <std::integral T>
constexpr T checked_mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("integer overflow in multiplication");
  return out;
}

/// (-1)^k for any integer k, including negative k.
template <std::integral T = long>
constexpr T sign_pow(long k) {
  return (k % 2 == 0) ? T{1} : T{-1};
}

}  // namespace aughts
