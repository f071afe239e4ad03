#pragma once

#include <concepts>

namespace hensel {

/// What the generic polynomial and matrix code needs from a coefficient:
/// ring operations plus constants made from an existing value, since every
/// coefficient type here carries its own runtime context (field, precision,
/// variable count).
template <class R>
concept RingElement = std::copy_constructible<R> && requires(const R& a, const R& b, long k) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
  { a.from_int(k) } -> std::convertible_to<R>;
};

template <RingElement R>
R power(const R& x, unsigned long k) {
  R result = x.one();
  R base = x;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace hensel
