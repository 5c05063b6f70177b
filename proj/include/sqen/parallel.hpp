#pragma once

// Deterministic data-parallel map: f(i) is called exactly once for every
// i < count, each writing only its own output slot, so results never depend
// on the number of workers.  The first exception thrown by any worker is
// rethrown after all workers join.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sqen {

template <class F>
void parallel_for(std::size_t count, int threads, F&& f) {
  if (threads < 1) threads = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1))
          f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sqen
