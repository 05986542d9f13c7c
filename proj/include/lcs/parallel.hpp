#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcs {

// Execution mode for the data-parallel kernels. Every kernel writes its
// per-item results into an index-addressed slot and reduces serially, so
// serial and parallel runs produce identical output.
enum class Exec { serial, parallel };

// Exceptions may not cross an OpenMP region; the lowest-index failure is
// captured and rethrown after the loop, which is also the exception a serial
// run would surface.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    std::exception_ptr first_error;
    std::size_t first_index = n;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(lcs_for_each_index_error)
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lcs
