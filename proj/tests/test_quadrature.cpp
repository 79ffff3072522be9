#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "qfock/quadrature.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

using namespace qfock;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("gaussian plane rule integrates polynomial-times-gaussian exactly") {
    for (double s : {0.5, 1.0, 2.0}) {
        const PlaneRule rule = plane_rule_gaussian(24, s);

        // integral of e^{-s|z|^2} over the plane = pi / s.
        const double mass = integrate_plane<double>(
            rule, [&](double x, double y) { return std::exp(-s * (x * x + y * y)); });
        CHECK(mass == doctest::Approx(kPi / s).epsilon(1e-12));

        // integral of |z|^2 e^{-s|z|^2} = pi / s^2.
        const double second = integrate_plane<double>(rule, [&](double x, double y) {
            return (x * x + y * y) * std::exp(-s * (x * x + y * y));
        });
        CHECK(second == doctest::Approx(kPi / (s * s)).epsilon(1e-12));

        // Odd moments vanish.
        const double odd = integrate_plane<double>(rule, [&](double x, double y) {
            return x * y * y * std::exp(-s * (x * x + y * y));
        });
        CHECK(std::abs(odd) <= 1e-12);

        CHECK(rule.s == s);
        CHECK(rule.radius > 0.0);
    }
}

TEST_CASE("recentered gaussian rule shifts its mass with the center") {
    const double s = 1.0;
    const std::complex<double> c(1.5, -0.5);
    const PlaneRule rule = plane_rule_gaussian_at(24, s, c);
    const double mass = integrate_plane<double>(rule, [&](double x, double y) {
        const double dx = x - c.real(), dy = y - c.imag();
        return std::exp(-s * (dx * dx + dy * dy));
    });
    CHECK(mass == doctest::Approx(kPi / s).epsilon(1e-12));

    // First moment against the shifted Gaussian sits at the center.
    const double mx = integrate_plane<double>(rule, [&](double x, double y) {
        const double dx = x - c.real(), dy = y - c.imag();
        return x * std::exp(-s * (dx * dx + dy * dy)) * (s / kPi);
    });
    CHECK(mx == doctest::Approx(c.real()).epsilon(1e-12));
}

TEST_CASE("disk rule carries the exact area and linear moments") {
    const std::complex<double> c(0.7, 0.2);
    const double r = 1.3;
    const PlaneRule rule = plane_rule_disk(c, r, 24, 48);

    double area = 0.0, mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        area += rule.w[k];
        mx += rule.w[k] * rule.x[k];
        my += rule.w[k] * rule.y[k];
    }
    CHECK(area == doctest::Approx(kPi * r * r).epsilon(1e-14));
    CHECK(mx / area == doctest::Approx(c.real()).epsilon(1e-12));
    CHECK(my / area == doctest::Approx(c.imag()).epsilon(1e-12));

    // |z - c|^2 averages to r^2/2 on the disk.
    const double m2 = integrate_plane<double>(rule, [&](double x, double y) {
        const double dx = x - c.real(), dy = y - c.imag();
        return dx * dx + dy * dy;
    });
    CHECK(m2 / area == doctest::Approx(r * r / 2.0).epsilon(1e-6));
}

TEST_CASE("serial and default plane integration agree bit for bit on one block") {
    const PlaneRule rule = plane_rule_gaussian(16, 1.0);  // 256 nodes, single block
    auto g = [](double x, double y) { return std::sin(x) * std::exp(-x * x - y * y) + y; };
    CHECK(integrate_plane<double>(rule, g) == integrate_plane_serial<double>(rule, g));
}

TEST_CASE("volume rule halves the antipodal double cover") {
    const GlobalRule rule = global_rule_gaussian(24, 1.0);

    // Total Gaussian volume mass: integral of (2/pi) e^{-|q|^2} dV = 1.
    const double mass = integrate_volume<double>(rule, [](const Quaternion& q) {
        return (2.0 / kPi) * std::exp(-q.norm_sq());
    });
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));

    const Quaternion one = integrate_volume_gaussian(
        rule, 1.0, [](const Quaternion&) { return Quaternion::one(); });
    CHECK(approx_equal(one, Quaternion::one(), 1e-10));

    // The identity function integrates to zero by symmetry.
    const Quaternion z = integrate_volume_gaussian(
        rule, 1.0, [](const Quaternion& q) { return q; });
    CHECK(z.norm() <= 1e-12);

    // Second moment under the volume Gaussian: the measure is the product
    // of the plane Gaussian (with its half-space counting) and the
    // normalized unit sphere, so E|q|^2 = 1/alpha exactly as on a slice.
    const double alpha = 1.25;
    const GlobalRule rule2 = global_rule_gaussian(24, alpha);
    const Quaternion m2 = integrate_volume_gaussian(
        rule2, alpha, [](const Quaternion& q) {
            return Quaternion{q.norm_sq(), 0, 0, 0};
        });
    CHECK(m2.x0 == doctest::Approx(1.0 / alpha).epsilon(1e-9));
}

TEST_CASE("gaussian densities integrate to one") {
    const PlaneRule prule = plane_rule_gaussian(24, 0.9);
    const double slice_mass = integrate_plane<double>(prule, [](double x, double y) {
        return lambda_slice_density(0.9, x, y);
    });
    CHECK(slice_mass == doctest::Approx(1.0).epsilon(1e-12));

    const Quaternion smean = integrate_slice_gaussian(
        prule, 0.9, ImaginaryUnit::j(),
        [](const Quaternion& q) { return Quaternion{q.norm_sq(), 0, 0, 0}; });
    // E|z|^2 on the slice Gaussian = 1/alpha.
    CHECK(smean.x0 == doctest::Approx(1.0 / 0.9).epsilon(1e-10));

    // Slice measure of the identity vanishes by circular symmetry.
    const Quaternion zmean = integrate_slice_gaussian(
        prule, 0.9, ImaginaryUnit::j(), [](const Quaternion& q) { return q; });
    CHECK(zmean.norm() <= 1e-12);

    // Volume density is twice the slice density in the radial profile.
    CHECK(lambda_volume_density(0.9, 0.3, 0.4) ==
          doctest::Approx(2.0 * lambda_slice_density(0.9, 0.3, 0.4)).epsilon(1e-14));
    CHECK(lambda_volume_density(0.9, Quaternion{0.3, 0.0, 0.4, 0.0}) ==
          doctest::Approx(lambda_volume_density(0.9, 0.3, 0.4)).epsilon(1e-14));
}
