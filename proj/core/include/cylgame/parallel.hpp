#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cylgame {

/// Worker count used when a caller passes jobs <= 0. Initialised from
/// CYLGAME_JOBS (default 1); the CLI overrides it with --jobs.
int default_jobs();
void set_default_jobs(int jobs);

/// Runs f(i) for i in [0, n) on up to `jobs` threads. Work is handed out in
/// contiguous chunks; f must only write to per-index state. The first
/// exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  if (jobs <= 0) jobs = default_jobs();
  const auto workers = static_cast<std::size_t>(std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(n, 1)))));
  if (workers == 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(16, n / (workers * 8));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&]() {
    try {
      while (true) {
        const std::size_t lo = next.fetch_add(chunk);
        if (lo >= n) return;
        const std::size_t hi = std::min(n, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) f(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cylgame
