#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropsvm {

/// True when the library was built with OpenMP.
inline bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// Reference loop: fn(0), ..., fn(count-1) in order.
template <class F>
void serial_for(int count, F&& fn) {
  for (int i = 0; i < count; ++i) fn(i);
}

/// OpenMP work-shared loop over [0, count). Each fn(i) must be independent
/// of the others and write only to slot i of any shared output, which keeps
/// the results identical to serial_for under every schedule.
template <class F>
void parallel_for(int count, F&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) fn(i);
#else
  serial_for(count, fn);
#endif
}

/// Dispatch between the two loops above.
template <class F>
void for_each_trial(int count, bool parallel, F&& fn) {
  if (parallel)
    parallel_for(count, fn);
  else
    serial_for(count, fn);
}

}  // namespace tropsvm
