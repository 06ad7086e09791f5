#pragma once

#include <cstddef>
#include <functional>

namespace hyperlip {

/// Worker count from HYPERLIP_THREADS (unset or 0: hardware concurrency).
std::size_t thread_count();

/// Calls body(begin, end) on contiguous chunks covering [0, count). Chunks
/// are fixed by (count, thread_count()), so callers that write results into
/// per-index or per-chunk slots get output independent of scheduling.
void parallel_for_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hyperlip
