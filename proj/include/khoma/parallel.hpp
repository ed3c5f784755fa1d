#ifndef KHOMA_PARALLEL_HPP
#define KHOMA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace khoma {

// Worker count: KHOMA_THREADS if set (0 or unset = hardware concurrency).
int thread_count();

// Runs fn(i) for i in [0, count).  Work is split into contiguous chunks; the
// callable must only touch state owned by index i, so results are identical
// to the serial loop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace khoma

#endif
