#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace stabletool {

inline int thread_budget() {
  if (const char* env = std::getenv("STABLETOOL_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

/// Static block partition of [0, n) across the thread budget.
inline void parallel_for(int n, const std::function<void(int)>& body) {
  const int nt = std::min(thread_budget(), std::max(1, n));
  if (nt == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([=, &body] {
      for (int i = t; i < n; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace stabletool
