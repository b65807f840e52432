#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semiflat {

// Chunk width for deterministic reductions. Partial sums are formed per
// fixed-width chunk (left to right within a chunk) and combined in chunk
// order, so the floating-point grouping is independent of the thread count.
inline constexpr std::size_t kReductionChunk = 4096;

template <typename T, typename TermFn>
T chunked_sum(std::size_t count, TermFn&& term) {
  if (count == 0) return T{};
  const std::size_t n_chunks = (count + kReductionChunk - 1) / kReductionChunk;
  std::vector<T> partial(n_chunks, T{});
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t hi = std::min(count, lo + kReductionChunk);
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace semiflat
