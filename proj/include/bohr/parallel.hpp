#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace bohr {

// Caps the number of worker threads used by data-parallel loops; 0 restores
// the hardware default.
void set_thread_limit(unsigned n);
unsigned thread_limit();

// Calls body(chunk, begin, end) for fixed-size chunks covering [0, n). Chunk
// boundaries depend only on n and chunk_size, never on the thread count, so
// per-chunk results can be reduced deterministically by the caller.
template <class Body>
void for_each_chunk(std::uint64_t n, std::uint64_t chunk_size, Body&& body) {
  if (n == 0) return;
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  const std::uint64_t chunks = (n + chunk_size - 1) / chunk_size;
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(thread_limit(), chunks));
  auto run = [&](std::uint64_t worker) {
    for (std::uint64_t c = worker; c < chunks; c += workers) {
      const std::uint64_t begin = c * chunk_size;
      body(c, begin, std::min(n, begin + chunk_size));
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
}

}  // namespace bohr
