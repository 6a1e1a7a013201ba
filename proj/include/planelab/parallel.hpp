// Deterministic parallel map: results are stored per index and reduced in
// index order, so reports are byte-identical for any thread count.
// PLANELAB_THREADS caps the pool; a programmatic override wins (tests use it
// to compare thread counts in-process).

#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace planelab {

int effective_threads();
void set_thread_override(int n);  // 0 = follow environment

// Runs fn(i) for i in [0, count). fn must be pure per index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace planelab
