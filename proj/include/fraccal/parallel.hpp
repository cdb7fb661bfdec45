#ifndef FRACCAL_PARALLEL_HPP
#define FRACCAL_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fraccal {

// Thread cap from FRACCAL_THREADS (0 or unset = hardware auto).
inline int thread_cap() {
  if (const char* env = std::getenv("FRACCAL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) over a block partition. Workers write results
// into caller-owned slots indexed by i, so reductions stay order-independent.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  int threads = thread_cap();
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  if (threads > n) threads = n;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    int lo = static_cast<int>(static_cast<long long>(n) * t / threads);
    int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace fraccal

#endif
