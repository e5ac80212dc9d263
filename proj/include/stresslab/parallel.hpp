/**
 * Minimal fork-join helper.  The worker count is capped by the
 * STRESSLAB_THREADS environment variable.
 */
#ifndef STRESSLAB_PARALLEL_HPP
#define STRESSLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace stresslab {

/** STRESSLAB_THREADS if set and positive, else the hardware concurrency (at least 1). */
unsigned worker_count();

/** Run body(i) for i in [0, n), on up to worker_count() threads; rethrows the first exception. */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}   // namespace stresslab

#endif
