#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace metasir::par {

/// Worker count resolution: explicit request, else METASIR_THREADS, else
/// hardware concurrency.
int thread_count(int requested = 0);

/// Runs body(i) for i in [0,n), statically partitioned. The partition does
/// not affect results; every index writes only its own slot.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace metasir::par
