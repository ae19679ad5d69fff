#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace orthograph {

// Runs fn(i) for i in [0, count) on up to `jobs` threads (jobs <= 0: hardware
// concurrency). Indices are handed out dynamically; callers write results into
// per-index slots so the outcome does not depend on scheduling. The first
// exception thrown by fn is rethrown after all threads stop.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

int resolve_jobs(int jobs);

// SplitMix64 finalizer; used to derive per-trial seeds from (seed, index).
uint64_t splitmix64(uint64_t x);
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace orthograph
