#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bottcert {

/// Worker count resolution: explicit flag > environment variable > hardware.
inline int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BOTTCERT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Apply `f` to 0..count-1 on up to `threads` workers and collect results
/// indexed by input position, so the output (and anything folded from it in
/// order) is independent of scheduling.  The first exception wins and is
/// rethrown after all workers drain.
template <class Out, class F>
std::vector<Out> parallel_map(size_t count, int threads, F&& f) {
  std::vector<Out> results(count);
  if (count == 0) return results;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (size_t i = 0; i < count; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

} // namespace bottcert
