#pragma once

#include <cmath>
#include <cstdint>

namespace dthrot {

/// floor(sqrt(x)), exact for every 64-bit input.
inline std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && (r > x / r)) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

/// ceil(sqrt(x)).
inline std::uint64_t ceil_sqrt(std::uint64_t x) {
  const std::uint64_t r = isqrt(x);
  return r * r == x ? r : r + 1;
}

/// ceil(a / b) for b > 0 and any sign of a.
constexpr long long ceil_div(long long a, long long b) {
  const long long q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

/// ceil(2 sqrt(n) - 1): the least c >= 0 with (c + 1)^2 >= 4n.
inline long long throttling_floor(long long n) {
  if (n <= 0) return 0;
  return static_cast<long long>(ceil_sqrt(4 * static_cast<std::uint64_t>(n))) - 1;
}

}  // namespace dthrot
