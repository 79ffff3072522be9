#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "qfock/parallel.hpp"
#include "qfock/quaternion.hpp"

using namespace qfock;

namespace {

// The documented summation order: fold each 1024-block serially, then
// combine the block results in index order.  Any conforming execution,
// whatever the thread count, must reproduce this bit for bit.
template <class T, class F>
T block_reference(std::size_t n, F&& term) {
    T total{};
    for (std::size_t lo = 0; lo < n; lo += kSumBlock) {
        const std::size_t hi = std::min(lo + kSumBlock, n);
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        total += acc;
    }
    return total;
}

double wavy(std::size_t i) { return std::sin(0.001 * static_cast<double>(i)) + 1e-3 * static_cast<double>(i % 31); }

}  // namespace

TEST_CASE("parallel block sum reproduces the fixed blocking bit for bit") {
    for (std::size_t n : {std::size_t{1}, std::size_t{1023}, std::size_t{1024},
                          std::size_t{1025}, std::size_t{4096}, std::size_t{100000}}) {
        const double expect = block_reference<double>(n, wavy);
        const double par = block_sum_parallel<double>(n, wavy);
        CHECK(par == expect);

        // The default entry point is one of the two variants; both must
        // agree exactly with their own definition.
        const double ser = block_sum_serial<double>(n, wavy);
        const double any = block_sum<double>(n, wavy);
        CHECK((any == expect || any == ser));
    }
}

TEST_CASE("single-block inputs take the serial path exactly") {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{512},
                          std::size_t{1024}}) {
        CHECK(block_sum_parallel<double>(n, wavy) == block_sum_serial<double>(n, wavy));
    }
}

TEST_CASE("integer-valued terms sum identically in every order") {
    // All partial sums stay far below 2^53, so no rounding occurs and the
    // serial fold, the block fold, and the parallel fold must coincide.
    auto term = [](std::size_t i) {
        return static_cast<double>(static_cast<long long>(i % 97) - 48);
    };
    const std::size_t n = 100000;
    const double a = block_sum_serial<double>(n, term);
    const double b = block_sum_parallel<double>(n, term);
    const double c = block_sum<double>(n, term);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("quaternion accumulation follows the same blocking contract") {
    auto qterm = [](std::size_t i) {
        const double s = static_cast<double>(i % 7) - 3.0;
        return Quaternion{s, 0.5 * s, -s, 0.25};
    };
    const std::size_t n = 5000;
    const Quaternion expect = block_reference<Quaternion>(n, qterm);
    const Quaternion par = block_sum_parallel<Quaternion>(n, qterm);
    CHECK(approx_equal(par, expect, 0.0));

    // Dyadic components: every order is exact, so serial agrees too.
    const Quaternion ser = block_sum_serial<Quaternion>(n, qterm);
    CHECK(approx_equal(ser, expect, 0.0));
}

TEST_CASE("index map writes every cell once") {
    const std::size_t n = 5000;
    std::vector<double> out(n, -1.0);
    parallel_for_index(n, [&](std::size_t i) {
        out[i] = static_cast<double>(i) * static_cast<double>(i);
    });
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(out[i] == static_cast<double>(i) * static_cast<double>(i));
    }
}

TEST_CASE("wall clock is monotone") {
    const double t0 = wall_time();
    volatile double sink = 0.0;
    for (int i = 0; i < 100000; ++i) sink += std::sqrt(static_cast<double>(i));
    const double t1 = wall_time();
    CHECK(t1 >= t0);
    CHECK(sink > 0.0);
}
