#pragma once

#include <cstddef>
#include <functional>

namespace lvcert {

/// Default worker count: hardware concurrency, at least 1.
int default_jobs();

/// Calls body(i) for every i in [0, count) on up to `jobs` threads. The
/// first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace lvcert
