#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace closure::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(worker, worker_count) on `threads` workers and rethrows the first
// exception raised by any of them.
template <typename Fn>
void run_workers(unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (threads == 1) {
    fn(0u, 1u);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          fn(w, threads);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

// Calls fn(begin, end) over contiguous chunks of [0, n).
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  const std::size_t workers = std::min<std::size_t>(threads, n);
  run_workers(static_cast<unsigned>(workers), [&](unsigned w, unsigned count) {
    const std::size_t begin = n * w / count;
    const std::size_t end = n * (w + 1) / count;
    if (begin < end) fn(begin, end);
  });
}

}  // namespace closure::detail
