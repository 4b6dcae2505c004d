#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace orthospec {

// Thread cap from VERIFY_THREADS, default 1.
unsigned thread_count();

// Runs body(i) for i in [0, n). Contiguous blocks per thread; results are
// expected to be written to slot i so the caller can fold in index order.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  const unsigned t = thread_count();
  if (t <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex mu;
  const std::size_t block = (n + t - 1) / t;
  for (unsigned k = 0; k < t; ++k) {
    const std::size_t lo = k * block, hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace orthospec
