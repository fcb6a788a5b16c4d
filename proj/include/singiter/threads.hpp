#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace singiter {

// Worker count for parallel sections; SINGULAR_ITER_THREADS caps it.
inline int resolve_thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SINGULAR_ITER_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

// Runs fn(chunk_index, begin, end) over [0,n) split into contiguous chunks,
// one per worker. Results must not depend on the split; callers get that by
// deriving all per-item state from the item index.
template <class Fn>
void parallel_chunks(std::int64_t n, const Fn& fn) {
  const int workers = std::min<std::int64_t>(resolve_thread_count(), std::max<std::int64_t>(n, 1));
  if (workers <= 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace singiter
