#include "lanesim/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lanesim {

namespace {

std::atomic<int> g_cap{-1};  // -1 = not yet resolved from environment

int env_cap() {
  const char* s = std::getenv("LANESIM_THREADS");
  if (s == nullptr) return 0;
  const int v = std::atoi(s);
  return v > 0 ? v : 1;
}

}  // namespace

void set_worker_cap(int cap) { g_cap.store(cap > 0 ? cap : 0); }

int worker_count() {
  int cap = g_cap.load();
  if (cap < 0) {
    cap = env_cap();
    g_cap.store(cap);
  }
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (cap > 0 && cap < n) n = cap;
  return n > 0 ? n : 1;
}

}  // namespace lanesim
