#pragma once

#include <cstddef>
#include <functional>

namespace framecoh {

/// Worker count: FRAMECOH_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Calls body(i) for i in [0, n). Indices are handed out in contiguous chunks;
/// callers write results into per-index slots so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace framecoh
