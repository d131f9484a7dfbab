#pragma once

#include <cstddef>
#include <functional>

namespace liepdo {

/// Global cap on worker threads. Defaults to the hardware concurrency;
/// the LIEPDO_THREADS environment variable overrides the default.
int thread_count();
void set_thread_count(int n);

/// Static block partition of [0, n). Each index is processed by exactly one
/// worker, so results do not depend on the thread count as long as the
/// per-index work is self-contained.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace liepdo
