#pragma once
// Thread-count selection and a deterministic block-parallel loop.
//
// Determinism contract: parallel_blocks splits [0, count) into contiguous
// blocks assigned to workers in index order. A caller that (a) computes each
// index's contribution independently of the partition and (b) merges
// per-worker results in worker order with an exact operation (integer sums,
// max with a total-order tie break) obtains results that are byte-identical
// for every thread count.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mf {

// Worker count: the MERIT_THREADS environment variable overrides everything,
// then hardware concurrency, then 1.
inline int thread_count() {
  if (const char* env = std::getenv("MERIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<int>(std::min(v, 64L));
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs body(worker, begin, end) over a partition of [0, count) into at most
// max_workers contiguous blocks. body must be safe to call concurrently on
// disjoint ranges. Worker 0 covers the lowest indices, worker 1 the next
// block, and so on.
template <typename Body>
void parallel_blocks(std::int64_t count, int max_workers, const Body& body) {
  if (count <= 0) return;
  std::int64_t workers =
      std::min<std::int64_t>(std::max(max_workers, 1), count);
  if (workers <= 1) {
    body(0, std::int64_t{0}, count);
    return;
  }
  std::int64_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    std::int64_t b = w * chunk;
    std::int64_t e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&body, w, b, e] { body(static_cast<int>(w), b, e); });
  }
  for (auto& th : pool) th.join();
}

template <typename Body>
void parallel_blocks(std::int64_t count, const Body& body) {
  parallel_blocks(count, thread_count(), body);
}

}  // namespace mf
