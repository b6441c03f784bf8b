#pragma once

// Chunked map-reduce with a fixed reduction order.  The chunk layout depends
// only on the item count and chunk size, never on the number of threads, and
// partial results are folded left to right in chunk order.  Output is
// therefore identical for any thread count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace lienil {

/// Worker count used by deterministic_reduce.  Defaults to LIENIL_THREADS
/// when set, otherwise std::thread::hardware_concurrency().
std::size_t thread_count();
void set_thread_count(std::size_t n);  // 0 restores the default

namespace detail {
/// Runs task(chunk_index) for every chunk in [0, chunks) on the worker pool.
/// The first exception thrown by a task is rethrown on the caller.
void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& task);
}  // namespace detail

/// Computes combine(...combine(combine(init, r0), r1)..., r_last) where r_c is
/// the left fold of map(i) over the items of chunk c.
template <class T, class Map, class Combine>
T deterministic_reduce(std::size_t count, std::size_t chunk_size, T init, Map map, Combine combine) {
  if (count == 0) return init;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<std::optional<T>> partial(chunks);
  detail::run_chunks(chunks, [&](std::size_t c) {
    const std::size_t lo = c * chunk_size;
    const std::size_t hi = std::min(count, lo + chunk_size);
    T acc = map(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) acc = combine(std::move(acc), map(i));
    partial[c] = std::move(acc);
  });
  for (auto& p : partial) init = combine(std::move(init), std::move(*p));
  return init;
}

}  // namespace lienil
