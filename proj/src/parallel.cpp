#include "erasurelab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace erasurelab {

std::size_t worker_count() {
  if (const char* env = std::getenv("ERASURELAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::optional<std::size_t> find_first(std::size_t count, const std::function<bool(std::size_t)>& pred) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, count / 64));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }

  std::atomic<std::size_t> best{kNone};
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace erasurelab
