#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qfock {

// Summation kernels used throughout the quadrature and matrix-assembly
// paths.  The parallel variant splits the index range into fixed-size
// blocks, accumulates each block serially, and combines the block results
// in index order.  Because the grouping is independent of the thread
// count, serial and parallel runs produce bit-identical sums, which keeps
// CSV outputs reproducible.  The serial variant is the reference
// implementation the tests and the benchmark compare against.

inline constexpr std::size_t kSumBlock = 1024;

template <class T, class F>
T block_sum_serial(std::size_t n, F&& term) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
}

template <class T, class F>
T block_sum_parallel(std::size_t n, F&& term) {
    const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
    if (nblocks <= 1) return block_sum_serial<T>(n, term);
    std::vector<T> partial(nblocks, T{});
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kSumBlock;
        const std::size_t hi = lo + kSumBlock < n ? lo + kSumBlock : n;
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    T acc{};
    for (const T& p : partial) acc += p;
    return acc;
}

// Default entry point: parallel when OpenMP is available, with the
// deterministic blocking either way.
template <class T, class F>
T block_sum(std::size_t n, F&& term) {
#ifdef _OPENMP
    return block_sum_parallel<T>(n, term);
#else
    return block_sum_serial<T>(n, term);
#endif
}

// Parallel map over independent output cells (matrix entries, probe
// points).  Each cell is computed by one invocation, so ordering does not
// affect the stored values.
template <class F>
void parallel_for_index(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
}

inline double wall_time() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
               .count()) * 1e-6;
#endif
}

}  // namespace qfock
