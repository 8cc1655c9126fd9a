#pragma once

#include <cstddef>
#include <functional>

namespace symdom {

/// Worker count: SYMDOM_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Calls fn(i) for i in [0, count) on up to thread_count() threads. Each index
/// runs exactly once; results must be written to per-index slots. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace symdom
