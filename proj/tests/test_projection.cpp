#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/projection.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/quaternion.hpp"

using namespace qfock;

namespace {

const ImaginaryUnit kI = ImaginaryUnit::i();
const ImaginaryUnit kJ = ImaginaryUnit::j();

GlobalRule probe_rule(double decay) { return global_rule_gaussian(48, decay); }

}  // namespace

TEST_CASE("projection of the probe family has the closed-form coefficients") {
    const double alpha = 1.0;
    for (double x : {0.5, 1.0, 2.0}) {
        // The integrand decays like e^{-(alpha+x)|w|^2}; hand the rule the
        // true decay so the quadrature converges fast.
        const GlobalRule rule = probe_rule(alpha + x);
        for (int k : {0, 1, 3, 5}) {
            const SliceFunction f = gaussian_monomial(x, k);
            const auto c = project_coeffs(f, alpha, rule, k + 3);
            const double expect = std::pow(alpha / (alpha + x), k + 1);
            for (int n = 0; n < static_cast<int>(c.size()); ++n) {
                const double want = (n == k) ? expect : 0.0;
                CHECK(std::abs(c[n].x0 - want) <= 1e-8);
                CHECK(std::abs(c[n].x1) + std::abs(c[n].x2) + std::abs(c[n].x3) <= 1e-9);
            }
        }
    }
}

TEST_CASE("projection annihilates the conjugate coordinate") {
    const double alpha = 1.0;
    const GlobalRule rule = probe_rule(alpha);
    const SliceFunction fconj = SliceFunction::from_stem(
        Stem{[](double x, double) { return Quaternion{x, 0, 0, 0}; },
             [](double, double y) { return Quaternion{-y, 0, 0, 0}; }});
    const auto c = project_coeffs(fconj, alpha, rule, 4);
    for (const auto& cn : c) CHECK(cn.norm() <= 1e-10);
}

TEST_CASE("applying the projection reproduces entire inputs") {
    const double alpha = 1.0;
    const GlobalRule rule = probe_rule(alpha);
    const SliceFunction f =
        SliceFunction::poly({Quaternion{0.3, 1, 0, 0}, Quaternion::j(),
                             Quaternion{0, 0, 0, 0.5}});
    const SliceFunction pf = apply_projection(f, alpha, rule, 6);
    for (const Quaternion& q :
         {Quaternion{0.5, 0.2, -0.3, 0.1}, Quaternion{-1, 0, 1, 0}}) {
        CHECK(approx_equal(pf(q), f(q), 1e-8));
    }
}

TEST_CASE("modulus operator on the constant gives the gaussian growth factor") {
    // With f = 1 the modulus integral collapses to e^{alpha |z|^2 / 4} at
    // real z (fixed point on the axis).
    const double alpha = 1.0;
    const GlobalRule rule = probe_rule(alpha);
    for (double xr : {0.0, 0.5, 1.2}) {
        const Quaternion z{xr, 0, 0, 0};
        const Quaternion v =
            apply_modulus_operator(SliceFunction::constant(Quaternion::one()),
                                   alpha, z, rule);
        CHECK(v.x0 == doctest::Approx(std::exp(alpha * xr * xr / 4.0)).epsilon(1e-6));
        CHECK(std::abs(v.x1) + std::abs(v.x2) + std::abs(v.x3) <= 1e-9);
    }
}

TEST_CASE("gaussian modulus integral matches its closed form on the real axis") {
    for (double t : {0.5, 1.0, 1.5}) {
        for (double s : {1.0, 2.0}) {
            const GlobalRule rule = probe_rule(s);
            for (double xr : {0.4, 1.0, 1.6}) {
                const Quaternion z{xr, 0, 0, 0};
                const double got = kernel_modulus_integral(t, z, s, rule);
                const double want = std::exp(t * t * xr * xr / (4.0 * s));
                CHECK(got == doctest::Approx(want).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("probe norms and ratios follow the closed forms") {
    // ||f_{x,k}||_{p,beta}^p = beta Gamma(pk/2 + 1) / (p x + beta)^{pk/2+1}.
    const double p = 2.0, beta = 1.0;
    CHECK(probe_norm(0.0, 0, p, beta) == doctest::Approx(1.0).epsilon(1e-12));
    // x = 0.5, k = 1, p = 2: ||.||^p = 1 * Gamma(2) / 2^2 = 0.25.
    CHECK(std::pow(probe_norm(0.5, 1, p, beta), p) ==
          doctest::Approx(0.25).epsilon(1e-12));

    const double alpha = 1.0;
    // Ratio at x=0 is 1 for every k (projection fixes entire functions).
    for (int k : {0, 1, 4}) {
        CHECK(probe_ratio(0.0, k, p, alpha, beta) == doctest::Approx(1.0).epsilon(1e-12));
    }

    // The growth factor is the ratio-of-consecutive-k factor.
    for (double x : {0.5, 1.0, 3.0}) {
        const double g = probe_growth_factor(x, p, alpha, beta);
        const double r4 = probe_ratio(x, 4, p, alpha, beta);
        const double r5 = probe_ratio(x, 5, p, alpha, beta);
        CHECK(r5 / r4 == doctest::Approx(g).epsilon(1e-10));
        // Balance line p*alpha = 2*beta keeps it <= 1.
        CHECK(g <= 1.0 + 1e-12);
    }

    // Off the balance line (p*alpha > 2*beta) some x pushes the factor
    // above 1.
    double worst = 0.0;
    for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        worst = std::max(worst, probe_growth_factor(x, 4.0, 1.0, 1.0));
    }
    CHECK(worst > 1.05);
}

TEST_CASE("threshold probe separates balanced from unbalanced exponent triples") {
    const std::vector<double> xs = {0.25, 0.5, 1.0, 2.0, 4.0};
    const std::vector<int> ks = {0, 1, 2, 3};

    // Balanced and sub-balanced: bounded.
    for (auto [p, a, b] : {std::tuple{2.0, 1.0, 1.0}, std::tuple{1.0, 2.0, 1.0},
                           std::tuple{2.0, 1.0, 2.0}}) {
        const ThresholdReport rep = threshold_probe(p, a, b, xs, ks);
        CHECK(rep.bounded);
        CHECK(rep.max_growth <= rep.threshold);
    }
    // Super-balanced: unbounded growth detected.
    for (auto [p, a, b] : {std::tuple{4.0, 1.0, 1.0}, std::tuple{2.0, 2.0, 1.0},
                           std::tuple{6.0, 1.0, 2.0}}) {
        const ThresholdReport rep = threshold_probe(p, a, b, xs, ks);
        CHECK_FALSE(rep.bounded);
        CHECK(rep.max_growth > rep.threshold);
    }
}

TEST_CASE("adjoint closed form matches quadrature on and off the axis") {
    const double alpha = 1.0, beta = 0.75;
    for (auto [x, k] : {std::pair{0.0, 0}, std::pair{0.5, 1}, std::pair{1.0, 2}}) {
        // The integrand decays like e^{-(beta+x)|w|^2}; tune the rule to it.
        const GlobalRule rule = probe_rule(beta + x);
        const SliceFunction g = gaussian_monomial(x, k);
        for (const Quaternion& z :
             {Quaternion{0.6, 0, 0, 0}, from_slice(0.4, 0.5, kJ)}) {
            const Quaternion got = adjoint_projection_apply(g, alpha, beta, z, rule);
            const Quaternion want = adjoint_probe_exact(x, k, alpha, beta, z);
            CHECK(approx_equal(got, want, 1e-6 * (1.0 + want.norm())));
        }
    }

    // P* 1 = (alpha/beta) e^{(beta-alpha)|z|^2}.
    const Quaternion z{0.8, 0, 0, 0};
    const Quaternion p1 = adjoint_probe_exact(0.0, 0, alpha, beta, z);
    CHECK(p1.x0 == doctest::Approx((alpha / beta) *
                                   std::exp((beta - alpha) * z.norm_sq()))
                       .epsilon(1e-12));
}

TEST_CASE("schur certificate closes with constant 2 on the balance line") {
    const GlobalRule rule{sphere_rule_symmetric(12), plane_rule_gaussian(48, 0.4)};
    const std::vector<Quaternion> samples = {
        Quaternion{0.3, 0, 0, 0}, Quaternion{1.1, 0, 0, 0},
        from_slice(0.5, 0.7, kI), from_slice(-0.4, 0.9, kJ)};

    for (auto [p, a, b] : {std::tuple{2.0, 1.0, 1.0}, std::tuple{1.0, 2.0, 1.0},
                           std::tuple{4.0, 1.0, 2.0}}) {
        const SchurReport rep = schur_verify(p, a, b, samples, rule);
        CHECK(std::abs(rep.constant_first - 2.0) <= 1e-9);
        CHECK(std::abs(rep.constant_second - 2.0) <= 1e-9);

        // Real-axis samples reproduce the closed form; off-axis samples
        // exceed it from above by a bounded factor.
        CHECK(rep.real_axis_dev <= 1e-6);
        CHECK(rep.off_axis_ratio >= 1.0);
        CHECK(rep.off_axis_ratio <= 1.5);

        for (const SchurSample& row : rep.rows) {
            if (row.real_axis) {
                CHECK(std::abs(row.ratio_first - 1.0) <= 1e-6);
            } else {
                CHECK(row.ratio_first >= 1.0 - 1e-9);
            }
        }
    }

    // The frozen off-axis excess at imaginary norm 0.7 (p = 2 triple):
    // the slice average of the kernel modulus exceeds the closed form by
    // a factor pinned near 1.116.
    const SchurReport rep2 =
        schur_verify(2.0, 1.0, 1.0, {from_slice(0.5, 0.7, kI)}, rule);
    CHECK(rep2.rows.size() == 1);
    CHECK(rep2.rows[0].ratio_first > 1.10);
    CHECK(rep2.rows[0].ratio_first < 1.13);

    // Off the balance line the certificate is rejected outright.
    CHECK_THROWS(schur_verify(4.0, 1.0, 1.0, samples, rule));
}

TEST_CASE("range parameter and explicit preimage round trip") {
    CHECK(range_parameter(1.0, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(range_parameter(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS(range_parameter(1.0, 2.0));
    CHECK_THROWS(range_parameter(1.0, 2.5));

    const double alpha = 1.0, beta = 0.5;
    const std::vector<Quaternion> target = {Quaternion{1, 0.5, 0, 0},
                                            Quaternion::j(),
                                            Quaternion{0, 0, 0.25, 0.25}};
    const SliceFunction g = range_preimage(target, alpha, beta);
    const GlobalRule rule = probe_rule(alpha + (alpha - beta));
    const auto back = project_coeffs(g, alpha, rule, 4);
    for (std::size_t n = 0; n < back.size(); ++n) {
        const Quaternion want = n < target.size() ? target[n] : Quaternion{};
        CHECK(approx_equal(back[n], want, 1e-7));
    }
}
