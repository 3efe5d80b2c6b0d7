#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypertree {

/// Worker count: HYPERTREE_THREADS if set, else hardware concurrency.
inline unsigned default_parallelism() {
  if (const char* env = std::getenv("HYPERTREE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(worker, begin, end). Exceptions from workers are rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body) {
  if (workers == 0) workers = default_parallelism();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    body(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * chunk);
    const std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hypertree
