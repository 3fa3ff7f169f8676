#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "driftmax/error.hpp"
#include "driftmax/montecarlo/estimate.hpp"

namespace driftmax::montecarlo {

/// Runs fn(acc, path_index) for path_index in [0, reps). Paths are grouped in
/// chunks of chunk_size; each chunk owns one accumulator and chunks are handed
/// to workers dynamically. The result is indexed by chunk, so merging it in
/// order gives output independent of the thread count.
template <class Acc, class PathFn>
std::vector<Acc> run_chunks(std::uint64_t reps, const RunOptions& options, PathFn&& fn) {
  if (reps < 1) throw DomainError("run_chunks: reps must be at least 1");
  if (options.chunk_size < 1) throw DomainError("run_chunks: chunk_size must be at least 1");
  const std::uint64_t chunk = options.chunk_size;
  const std::uint64_t n_chunks = reps / chunk + (reps % chunk != 0 ? 1 : 0);
  std::vector<Acc> out(n_chunks);

  auto work = [&](std::uint64_t c) {
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(reps, begin + chunk);
    for (std::uint64_t i = begin; i < end; ++i) fn(out[c], i);
  };

  const auto workers = static_cast<std::uint64_t>(resolve_threads(options.threads));
  const auto n_workers = std::min<std::uint64_t>(workers, n_chunks);
  if (n_workers <= 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) work(c);
    return out;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::uint64_t t = 0; t < n_workers; ++t) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks) break;
            work(c);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(n_chunks);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace driftmax::montecarlo
