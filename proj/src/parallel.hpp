#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dthrot::detail {

/// Calls body(i) for every i in [begin, end) on up to `threads` workers that
/// pull fixed-size chunks. The first exception thrown is rethrown.
template <typename Body>
void parallel_for(std::uint64_t begin, std::uint64_t end, int threads, Body&& body) {
  if (begin >= end) return;
  const std::uint64_t count = end - begin;
  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), count));
  if (workers == 1) {
    for (std::uint64_t i = begin; i < end; ++i) body(i);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (16 * workers));
  std::atomic<std::uint64_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      while (true) {
        const std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= end) return;
        const std::uint64_t hi = std::min(end, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(end);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace dthrot::detail
