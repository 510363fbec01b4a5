#pragma once

namespace lanesim {

/// Number of worker threads the cell-loop kernels may use.
/// Bounded by the LANESIM_THREADS environment variable when set.
int worker_count();

/// Override the thread cap programmatically (0 restores the environment default).
void set_worker_cap(int cap);

namespace detail {
// Loops shorter than this run serially; OpenMP overhead dominates below it.
inline constexpr int kParallelGrain = 2048;
}  // namespace detail

/// Runs body(i) for i in [0, n). Iterations must be independent: every
/// parallel kernel in this library writes disjoint outputs per index, so the
/// result is identical to the serial loop bit for bit.
template <class F>
void parallel_for(int n, F&& body);

/// Same contract for few-but-heavy iterations (no grain threshold).
template <class F>
void parallel_for_coarse(int n, F&& body);

}  // namespace lanesim

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lanesim {

template <class F>
void parallel_for(int n, F&& body) {
#ifdef _OPENMP
  if (n >= detail::kParallelGrain && worker_count() > 1) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#endif
  for (int i = 0; i < n; ++i) {
    body(i);
  }
}

template <class F>
void parallel_for_coarse(int n, F&& body) {
#ifdef _OPENMP
  if (n > 1 && worker_count() > 1) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#endif
  for (int i = 0; i < n; ++i) {
    body(i);
  }
}

}  // namespace lanesim
