#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgevrey::par {

// Runs body(0..n-1). The parallel path distributes iterations across OpenMP
// threads; the serial path is the reference implementation and both produce
// identical results because each iteration is independent and any summation
// inside an iteration has a fixed order.
template <class F>
void for_each_index(std::size_t n, bool parallel, F&& body) {
#ifdef _OPENMP
  if (parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        {
          if (!err) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qgevrey::par
