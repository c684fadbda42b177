#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace twopath {

// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out dynamically; the first exception thrown is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace twopath
