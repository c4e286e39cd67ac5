#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "dthrot/vertex_set.hpp"

namespace dthrot::detail {

/// Visits every k-subset of `pool` in colexicographic order of the pool's
/// members. `visit` returns false to stop early; the result reports whether
/// the walk ran to completion.
template <typename Visit>
bool for_each_subset_of_size(VertexSet pool, int k, Visit&& visit) {
  const int m = pool.size();
  if (k < 0 || k > m) return true;
  std::array<int, kMaxVertices> members{};
  int idx = 0;
  for (int v : pool) members[idx++] = v;

  if (k == 0) return visit(VertexSet{});
  const std::uint64_t limit = m >= 64 ? 0 : std::uint64_t{1} << m;
  std::uint64_t comb = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    VertexSet subset;
    for (std::uint64_t rest = comb; rest; rest &= rest - 1)
      subset.insert(members[std::countr_zero(rest)]);
    if (!visit(subset)) return false;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t low = comb & (~comb + 1);
    const std::uint64_t ripple = comb + low;
    if (ripple == 0) return true;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
    if (limit != 0 && comb >= limit) return true;
  }
}

}  // namespace dthrot::detail
