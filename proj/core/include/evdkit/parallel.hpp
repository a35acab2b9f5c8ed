#pragma once

#include <cstddef>
#include <functional>

namespace evdkit {

/// Worker count: EVDKIT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_threads();

/// Calls body(i) for i in [0, n) on up to `threads` workers (0 means
/// worker_threads()). Work is handed out by an atomic counter, so results
/// must be written to per-index slots. The first exception thrown by any
/// body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

}  // namespace evdkit
