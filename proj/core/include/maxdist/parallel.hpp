#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace maxdist {

// Chunked index-parallel loop. Results must be written by index so the caller
// can reduce them in a fixed order; output is then independent of `threads`.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t t = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += t) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace maxdist
