#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace matchlab {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(block) for block = 0..num_blocks-1 across at most `threads` workers
// and returns the per-block results in block order. Block boundaries never
// depend on the worker count, so reductions over the returned vector are
// deterministic for any --threads value.
template <class R, class Fn>
std::vector<R> parallel_blocks(std::size_t num_blocks, int threads, Fn&& fn) {
  std::vector<R> results(num_blocks);
  const int workers =
      static_cast<int>(std::min<std::size_t>(num_blocks, static_cast<std::size_t>(resolve_threads(threads))));
  if (workers <= 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = static_cast<std::size_t>(w); b < num_blocks;
           b += static_cast<std::size_t>(workers)) {
        results[b] = fn(b);
      }
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace matchlab
