#pragma once

#include <functional>

namespace rydsim {

// Runs fn(0..n-1) on up to `workers` threads (0 = hardware concurrency).
// Work items must be independent; the first exception thrown by any item is
// rethrown on the calling thread after all workers join.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

} // namespace rydsim
