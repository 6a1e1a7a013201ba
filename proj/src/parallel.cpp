#include "planelab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace planelab {

namespace {
std::atomic<int> g_override{0};
}

void set_thread_override(int n) { g_override.store(n); }

int effective_threads() {
  int o = g_override.load();
  if (o > 0) return o;
  if (const char* env = std::getenv("PLANELAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int threads = effective_threads();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  std::size_t n = std::min<std::size_t>(threads, count);
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace planelab
