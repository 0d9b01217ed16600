#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qclab {

inline int default_parallelism() {
  if (const char* env = std::getenv("QCLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies f to every element of jobs on a small worker pool. Results land at
// their input index, so the output order is independent of scheduling.
template <typename Job, typename F>
auto parallel_map(const std::vector<Job>& jobs, F&& f, int workers)
    -> std::vector<decltype(f(jobs.front()))> {
  using R = decltype(f(jobs.front()));
  std::vector<R> results(jobs.size());
  if (jobs.empty()) return results;
  workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = f(jobs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        results[i] = f(jobs[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace qclab
