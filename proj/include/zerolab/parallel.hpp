#pragma once

#include <cstddef>
#include <functional>

namespace zerolab {

// Worker count: ZEROLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Calls body(i) for every i in [0, n) across `workers` threads (0 = worker_count()).
// Iterations must write only to slots they own; callers reduce afterwards in index
// order so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers = 0);

}  // namespace zerolab
