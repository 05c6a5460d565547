#ifndef OACODES_THREADS_HPP
#define OACODES_THREADS_HPP

#include <cstdint>
#include <functional>

namespace oacodes {

/// Worker count for the parallel verification loops. 0 resets to the
/// hardware default. Results never depend on the count.
void set_thread_count(int n);
int thread_count();

/// Runs fn(chunk_begin, chunk_end) over [0, total) split across the
/// configured workers. fn must be safe to run concurrently on disjoint
/// ranges.
void parallel_chunks(int64_t total, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace oacodes

#endif
