#ifndef PLAP_PARALLEL_HPP
#define PLAP_PARALLEL_HPP

#include <functional>

namespace plap {

/// Worker count for multi-run parallelism (sweeps, multi-starts): the
/// PLAP_THREADS environment variable when set, hardware concurrency
/// otherwise. A single solve is always sequential.
int thread_count();

/// Run fn(0..n-1) on up to thread_count() workers. Results must be written
/// to per-index slots; the call returns after every index completed.
void parallel_indices(int n, const std::function<void(int)>& fn);

}  // namespace plap

#endif
