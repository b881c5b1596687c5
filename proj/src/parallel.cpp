#include "tas/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tas {

int configured_thread_count() {
  const char* env = std::getenv("TAS_THREADS");
  if (!env) return 1;
  int parsed = std::atoi(env);
  if (parsed < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && parsed > static_cast<int>(hw)) parsed = static_cast<int>(hw);
  return parsed;
}

std::optional<size_t> first_hit(size_t count, bool parallel,
                                const std::function<bool(size_t)>& eval) {
  const int workers = parallel ? configured_thread_count() : 1;
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) {
      if (eval(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<size_t> next{0};
  std::atomic<size_t> best{count};
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      // Indices are handed out in increasing order, so once i passes the
      // current best nothing this worker could still claim can win.
      if (i >= count || i > best.load()) return;
      if (eval(i)) {
        size_t seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();

  size_t winner = best.load();
  if (winner == count) return std::nullopt;
  return winner;
}

}  // namespace tas
