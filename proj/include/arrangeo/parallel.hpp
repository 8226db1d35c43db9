#pragma once

#include <cstddef>
#include <functional>

namespace arrangeo {

/// Worker count: ARRANGEO_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count). Bodies must write only to their own
/// slot; the first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace arrangeo
