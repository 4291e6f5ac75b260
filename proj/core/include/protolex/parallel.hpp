#ifndef PROTOLEX_PARALLEL_HPP
#define PROTOLEX_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace protolex {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Work is split
// into contiguous chunks; results must be written to per-index slots so the
// outcome is identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  std::size_t chunk = (count + nworkers - 1) / nworkers;
  for (std::size_t w = 0; w < nworkers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(begin + chunk, count);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace protolex

#endif
