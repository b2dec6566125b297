#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qig {

/// Worker count: hardware concurrency capped by the QIG_THREADS environment
/// variable (<=0 or unset means no cap) and by the job count.
inline int worker_count(int jobs) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("QIG_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0 && cap < hw) hw = cap;
  }
  return jobs < hw ? (jobs < 1 ? 1 : jobs) : hw;
}

/// Static block partition of [begin, end); each index is visited exactly once
/// and writes must be disjoint per index. Deterministic regardless of the
/// worker count.
inline void parallel_for(int begin, int end,
                         const std::function<void(int)>& fn) {
  int jobs = end - begin;
  if (jobs <= 0) return;
  int workers = worker_count(jobs);
  if (workers == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (jobs + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = begin + w * chunk;
    int hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qig
