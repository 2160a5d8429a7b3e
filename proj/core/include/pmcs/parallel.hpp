#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace pmcs {

// Static partition of [begin, end) over `threads` workers. threads <= 1 runs
// inline. The first worker exception is rethrown after all threads join.
// Callers that need bit-stable reductions must write to disjoint slots and
// combine in index order afterwards.
inline void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                         const std::function<void(std::uint64_t)>& body) {
  const std::uint64_t count = end > begin ? end - begin : 0;
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::uint64_t i = begin; i < end; ++i) body(i);
    return;
  }
  if (threads > count) threads = static_cast<unsigned>(count);

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + count * t / threads;
    const std::uint64_t hi = begin + count * (t + 1) / threads;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pmcs
