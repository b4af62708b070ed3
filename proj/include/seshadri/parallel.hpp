#pragma once

#include <cstddef>
#include <functional>

namespace seshadri {

// SESHADRI_THREADS if set to a positive integer, else the hardware count.
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. The first
// exception by index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace seshadri
