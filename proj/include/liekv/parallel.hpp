#ifndef LIEKV_PARALLEL_HPP
#define LIEKV_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace liekv {

// Worker cap: LIEKV_THREADS env var when set, hardware concurrency otherwise.
inline int thread_cap() {
  if (const char* env = std::getenv("LIEKV_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(0..n-1) on up to thread_cap() workers. Callers write results into
// preallocated per-index slots, so scheduling cannot affect the output.
template <class F>
void parallel_for(int n, F&& fn) {
  int nt = std::min(thread_cap(), n);
  if (nt <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace liekv

#endif
