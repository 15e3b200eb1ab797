#pragma once

#include <cstddef>
#include <functional>

namespace csfkit {

int default_jobs();

// Runs fn(0..count-1) across up to `jobs` worker threads (0 = default).
// Callers index into preallocated result slots, so output order never depends
// on the worker count.
void parallel_for(int jobs, std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace csfkit
