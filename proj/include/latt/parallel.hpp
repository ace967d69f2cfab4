#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace latt {

// Worker count: LATT_THREADS if set (>= 1), else hardware concurrency.
inline int thread_count() {
  if (const char* s = std::getenv("LATT_THREADS")) {
    int t = std::atoi(s);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls f(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any call is rethrown after all workers finish.
template <class F>
void parallel_for(int n, F&& f) {
  const int t = std::min(thread_count(), n);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace latt
