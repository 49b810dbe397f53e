#pragma once

// Static block partition of [0, count) over worker threads. Callers reduce per-block results
// in block order, so outputs never depend on the worker count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace polar {

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(block, begin, end) for `blocks` contiguous blocks; blocks are distributed
// round-robin over at most `workers` threads. Rethrows the first exception by block index.
template <class Fn>
void parallel_blocks(std::size_t count, std::size_t blocks, unsigned workers, Fn&& fn) {
  if (blocks == 0) return;
  workers = resolve_workers(workers);
  std::vector<std::exception_ptr> errors(blocks);
  auto run = [&](std::size_t w, std::size_t stride) {
    for (std::size_t b = w; b < blocks; b += stride) {
      const std::size_t begin = count * b / blocks;
      const std::size_t end = count * (b + 1) / blocks;
      try {
        fn(b, begin, end);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(workers, blocks);
  if (threads <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(run, w, threads);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace polar
