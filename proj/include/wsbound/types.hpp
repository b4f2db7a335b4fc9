#ifndef WSBOUND_TYPES_HPP
#define WSBOUND_TYPES_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "wsbound/errors.hpp"

namespace wsbound {

using Int = std::int64_t;

/// Exponent vector of a monomial x_1^{e_1} ... x_m^{e_m} in the coordinate
/// functions of a model.
using ExponentVector = std::vector<Int>;

/// n-tuple indexing the divisor i_1 P_1 + ... + i_n P_n over the
/// distinguished places of a model.
using DivisorIndex = std::vector<Int>;

inline Int degree(const DivisorIndex& i) {
  return std::accumulate(i.begin(), i.end(), Int{0});
}

// Checked 64-bit arithmetic. Every intermediate value in the library is kept
// below 2^62; inputs that would break this are rejected loudly instead of
// wrapping around.
inline constexpr Int kIntCap = Int{1} << 62;

inline Int checked_add(Int a, Int b) {
  Int r = 0;
  if (__builtin_add_overflow(a, b, &r) || r >= kIntCap || r <= -kIntCap) {
    throw Overflow("integer overflow in addition");
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r >= kIntCap || r <= -kIntCap) {
    throw Overflow("integer overflow in multiplication");
  }
  return r;
}

/// Mathematical floor of num/den (den != 0).
inline Int floor_div(Int num, Int den) {
  Int q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

/// Mathematical ceiling of num/den (den != 0).
inline Int ceil_div(Int num, Int den) {
  Int q = num / den;
  if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
  return q;
}

/// Largest s >= 0 with s*s <= n.
inline Int isqrt(Int n) {
  if (n < 0) throw Error("isqrt of negative value");
  Int s = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace wsbound

#endif  // WSBOUND_TYPES_HPP
