#pragma once

#include <cstddef>
#include <functional>

namespace orbitope {

// Worker count: ORBITOPE_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Calls fn(i) for i in [0, n) on up to thread_count() threads. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace orbitope
