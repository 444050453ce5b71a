#pragma once
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace hcns {

inline int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : (int)n;
}

// Runs fn(i) for i in [0, n) across `jobs` threads with deterministic
// block splitting. Results are merged in index order by the caller.
inline void parallel_for(std::size_t n, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>((std::size_t)jobs, n);
  std::vector<std::future<void>> futs;
  futs.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    futs.push_back(std::async(std::launch::async, [=, &fn]() {
      for (std::size_t i = t; i < n; i += nthreads) fn(i);
    }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace hcns
