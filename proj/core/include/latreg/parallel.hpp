#ifndef LATREG_PARALLEL_HPP
#define LATREG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace latreg {

/// Worker cap: LATREG_THREADS when set, otherwise hardware concurrency.
int max_threads();

/// Runs fn(0..count-1) across up to max_threads() workers. Each index is
/// visited exactly once; callers keep determinism by writing results into
/// per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace latreg

#endif
