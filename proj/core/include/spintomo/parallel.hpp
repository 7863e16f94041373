#pragma once

#include <cstddef>
#include <functional>

namespace spintomo {

/// Worker count for grid loops: the TOMO_THREADS environment variable,
/// clamped to [1, hardware_concurrency]. Defaults to 1.
int thread_count();

/// Runs f(chunk, begin, end) over a static partition of [0, n) into
/// thread_count() contiguous chunks. Chunk boundaries depend only on n and
/// the thread count, so per-chunk partial results combined in chunk order
/// give deterministic reductions.
void parallel_chunks(std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& f);

}  // namespace spintomo
