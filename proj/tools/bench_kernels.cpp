// Benchmark: parallel kernels against their serial references.  The two
// implementations must agree bit for bit (the parallel versions combine
// fixed-size blocks in index order), so this doubles as a determinism
// check; any discrepancy exits nonzero.
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/parallel.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/symbols.hpp"
#include "qfock/toeplitz.hpp"

using namespace qfock;

namespace {

struct BenchResult {
    double serial_s = 0.0;
    double parallel_s = 0.0;
    double max_diff = 0.0;
};

void print_row(const char* name, const BenchResult& r) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   max|diff| %g\n",
                name, r.serial_s, r.parallel_s,
                r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0, r.max_diff);
}

BenchResult bench_block_sum(std::size_t n, int reps) {
    BenchResult r;
    const auto term = [](std::size_t k) {
        const double t = 1e-6 * static_cast<double>(k % 10007);
        return t * t - 0.5 * t;
    };
    double serial = 0, parallel = 0;
    double t0 = wall_time();
    for (int i = 0; i < reps; ++i) serial = block_sum_serial<double>(n, term);
    r.serial_s = wall_time() - t0;
    t0 = wall_time();
    for (int i = 0; i < reps; ++i) parallel = block_sum<double>(n, term);
    r.parallel_s = wall_time() - t0;
    // Bit-identical by construction: fail loudly if that ever regresses.
    r.max_diff = (serial == parallel) ? 0.0 : 1.0;
    return r;
}

BenchResult bench_toeplitz(int N, int n_quad) {
    BenchResult r;
    const SliceFunction f = builtin_symbol("step_smooth").fn;
    double t0 = wall_time();
    const QuatMatrix serial = toeplitz_matrix_serial(f, 1.0, N, ImaginaryUnit::i(), n_quad);
    r.serial_s = wall_time() - t0;
    t0 = wall_time();
    const QuatMatrix parallel = toeplitz_matrix(f, 1.0, N, ImaginaryUnit::i(), n_quad);
    r.parallel_s = wall_time() - t0;
    r.max_diff = serial.max_abs_diff(parallel);
    return r;
}

BenchResult bench_volume_norm(int n_plane, int reps) {
    BenchResult r;
    const SliceFunction f = SliceFunction::poly(
        {Quaternion{0.3, 0.1, 0, 0}, Quaternion{0, 0, 1, 0}, Quaternion{0.5, 0, 0, 0.2}});
    const GlobalRule rule = global_rule_gaussian(n_plane, 1.0);
    const auto integrand = [&](const Quaternion& q) {
        const double v = f(q).norm_sq();
        return v * lambda_volume_density(1.0, q);
    };
    double serial = 0, parallel = 0;
    double t0 = wall_time();
    for (int i = 0; i < reps; ++i) {
        const std::size_t np = rule.plane.size();
        serial = 0.5 * block_sum_serial<double>(
                           rule.sphere.nodes.size() * np, [&](std::size_t idx) {
                               const auto& sn = rule.sphere.nodes[idx / np];
                               const std::size_t k = idx % np;
                               const Quaternion q = from_slice(
                                   rule.plane.x[k], rule.plane.y[k], sn.unit);
                               return sn.weight * rule.plane.w[k] * integrand(q);
                           });
    }
    r.serial_s = wall_time() - t0;
    t0 = wall_time();
    for (int i = 0; i < reps; ++i)
        parallel = integrate_volume<double>(rule, integrand);
    r.parallel_s = wall_time() - t0;
    r.max_diff = (serial == parallel) ? 0.0 : std::abs(serial - parallel);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    const std::size_t sum_n = quick ? 2'000'000 : 40'000'000;
    const int sum_reps = quick ? 3 : 5;
    const int toep_N = quick ? 10 : 24;
    const int toep_quad = quick ? 48 : 96;
    const int vol_n = quick ? 48 : 96;
    const int vol_reps = quick ? 4 : 10;

    std::printf("kernel benchmarks (%s mode)\n", quick ? "quick" : "full");

    int bad = 0;
    const BenchResult bs = bench_block_sum(sum_n, sum_reps);
    print_row("block-sum", bs);
    bad += bs.max_diff != 0.0;

    const BenchResult bt = bench_toeplitz(toep_N, toep_quad);
    print_row("toeplitz-matrix", bt);
    bad += bt.max_diff != 0.0;

    const BenchResult bv = bench_volume_norm(vol_n, vol_reps);
    print_row("volume-norm", bv);
    bad += bv.max_diff != 0.0;

    if (bad) {
        std::printf("FAIL: %d kernel(s) disagree with the serial reference\n", bad);
        return 1;
    }
    std::printf("all parallel kernels bit-identical to serial references\n");
    return 0;
}
