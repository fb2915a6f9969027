#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weylkit::par {

// Execution policy for the data-parallel enumeration kernels (face scans,
// independent-set scans, bracket pair checks). Results are always merged by
// index, so both policies produce identical output; `serial` is the reference
// path kept for testing and benchmarking.
enum class Exec { serial, openmp };

inline Exec default_exec() {
#ifdef _OPENMP
    return Exec::openmp;
#else
    return Exec::serial;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
void for_index(std::size_t n, Exec e, F&& f) {
    if (e == Exec::openmp) {
#ifdef _OPENMP
        std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(weylkit_for_index_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace weylkit::par
