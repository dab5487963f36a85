#pragma once

#include <cstddef>
#include <functional>

namespace multisep {

/// Worker count: MULTISEP_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(k) for k in [0, n) on up to worker_count() threads. Each index
/// is executed exactly once; callers write results into per-index slots so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace multisep
