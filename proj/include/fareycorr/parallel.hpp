#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fareycorr {

/// Half-open index range [begin, end).
struct Chunk {
  std::size_t begin;
  std::size_t end;
};

/// Splits [0, count) into at most `workers` contiguous chunks of near-equal
/// size. The split depends only on (count, workers).
inline std::vector<Chunk> partition(std::size_t count, unsigned workers) {
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
  std::vector<Chunk> chunks;
  chunks.reserve(parts);
  const std::size_t base = count / parts;
  const std::size_t extra = count % parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    chunks.push_back({begin, begin + len});
    begin += len;
  }
  return chunks;
}

/// Runs body(chunk_index, chunk) for every chunk of [0, count), one thread per
/// chunk. Results must be written to per-chunk slots and reduced by the caller
/// in chunk order so that the outcome is independent of scheduling.
template <typename Body>
void for_each_chunk(std::size_t count, unsigned workers, Body&& body) {
  const auto chunks = partition(count, workers);
  if (chunks.size() <= 1) {
    if (!chunks.empty()) body(std::size_t{0}, chunks.front());
    return;
  }
  std::vector<std::exception_ptr> failures(chunks.size());
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          body(i, chunks[i]);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

}  // namespace fareycorr
