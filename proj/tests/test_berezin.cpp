#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "qfock/berezin.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

using namespace qfock;

namespace {

const ImaginaryUnit kI = ImaginaryUnit::i();
const ImaginaryUnit kJ = ImaginaryUnit::j();
const double kPi = std::acos(-1.0);

SliceFunction real_part() {
    return SliceFunction::from_stem(
        Stem{[](double x, double) { return Quaternion{x, 0, 0, 0}; },
             [](double, double) { return Quaternion{}; }});
}

SliceFunction sq_modulus() {
    return SliceFunction::from_stem(
        Stem{[](double x, double y) { return Quaternion{x * x + y * y, 0, 0, 0}; },
             [](double, double) { return Quaternion{}; }});
}

SliceFunction cos_real() {
    return SliceFunction::from_stem(
        Stem{[](double x, double) { return Quaternion{std::cos(x), 0, 0, 0}; },
             [](double, double) { return Quaternion{}; }});
}

std::vector<Quaternion> sample_bank() {
    return {Quaternion{}, Quaternion{0.7, 0, 0, 0}, from_slice(0.5, 0.8, kI),
            from_slice(-1.0, 0.4, kJ), from_slice(0.2, 1.3, kJ)};
}

}  // namespace

TEST_CASE("convolution rule is a unit-mass gaussian design") {
    const ConvRule rule = conv_rule(32, 1.4);
    CHECK(rule.alpha == 1.4);
    double mass = 0.0, mx = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        mass += rule.w[k];
        mx += rule.w[k] * rule.dx[k];
        m2 += rule.w[k] * (rule.dx[k] * rule.dx[k] + rule.dy[k] * rule.dy[k]);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(mx) <= 1e-14);
    // E|u|^2 under (alpha/pi) e^{-alpha|u|^2} is 1/alpha.
    CHECK(m2 == doctest::Approx(1.0 / 1.4).epsilon(1e-10));
}

TEST_CASE("smoothing shifts the squared modulus by exactly one over alpha") {
    const double alpha = 1.3;
    const SliceFunction g = berezin(sq_modulus(), alpha, 32);
    for (const Quaternion& z : sample_bank()) {
        const double want = z.norm_sq() + 1.0 / alpha;
        CHECK(g(z).x0 == doctest::Approx(want).epsilon(1e-9));
        CHECK(std::abs(g(z).x1) + std::abs(g(z).x2) + std::abs(g(z).x3) <= 1e-10);
    }
}

TEST_CASE("smoothing damps the cosine wave by the heat factor") {
    const double alpha = 1.0;
    const SliceFunction g = berezin(cos_real(), alpha, 40);
    const double damp = std::exp(-1.0 / (4.0 * alpha));
    for (const Quaternion& z : sample_bank()) {
        CHECK(g(z).x0 == doctest::Approx(damp * std::cos(z.x0)).epsilon(1e-8));
    }
}

TEST_CASE("pointwise smoothing agrees with the assembled function") {
    const double alpha = 0.9;
    const ConvRule rule = conv_rule(32, alpha);
    const SliceFunction f = sq_modulus();
    const SliceFunction g = berezin(f, alpha, 32);
    for (const Quaternion& z : sample_bank()) {
        CHECK(approx_equal(berezin_at(f, alpha, z, rule), g(z), 1e-10));
    }

    // A rule built for a different parameter is rejected.
    const ConvRule wrong = conv_rule(32, alpha + 0.5);
    CHECK_THROWS(berezin_at(f, alpha, Quaternion{}, wrong));
}

TEST_CASE("scalar slice smoothing matches the stem route on real data") {
    const double alpha = 1.1;
    const ConvRule rule = conv_rule(32, alpha);
    const SliceFunction f = sq_modulus();
    auto g = [&](const Quaternion& q) { return f(q).x0; };
    for (const Quaternion& z : sample_bank()) {
        const SlicePoint sp = slice_decompose(z);
        const double got = berezin_scalar_slice(
            g, sp.y == 0.0 ? kI : sp.unit, {sp.x, sp.y}, rule);
        CHECK(got == doctest::Approx(z.norm_sq() + 1.0 / alpha).epsilon(1e-9));
    }
}

TEST_CASE("two smoothings collapse to one at the harmonic-sum parameter") {
    const SliceFunction f = cos_real();
    const SemigroupReport rep = semigroup_check(f, 1.0, 1.0, sample_bank(), 40);
    CHECK(rep.combined_alpha == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rep.worst_gap <= 1e-8);

    const SemigroupReport rep2 = semigroup_check(f, 2.0, 1.0, sample_bank(), 40);
    CHECK(rep2.combined_alpha == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(rep2.worst_gap <= 1e-8);
}

TEST_CASE("iterates reduce to a single smoothing at the divided parameter") {
    const double alpha = 2.0;
    const SliceFunction f = cos_real();
    const SliceFunction g4 = berezin_iterate(f, alpha, 4, 40);
    const SliceFunction direct = berezin(f, alpha / 4.0, 40);
    for (const Quaternion& z : sample_bank()) {
        CHECK(g4(z).x0 == doctest::Approx(direct(z).x0).epsilon(1e-10));
    }
    // One iterate is the plain smoothing.
    const SliceFunction g1 = berezin_iterate(f, alpha, 1, 40);
    const SliceFunction b = berezin(f, alpha, 40);
    for (const Quaternion& z : sample_bank()) {
        CHECK(g1(z).x0 == doctest::Approx(b(z).x0).epsilon(1e-12));
    }
}

TEST_CASE("iterated smoothing contracts lipschitz quotients within the bound") {
    const double alpha = 1.0;
    const SliceFunction f = cos_real();
    std::vector<std::pair<Quaternion, Quaternion>> pairs = {
        {Quaternion{}, Quaternion{0.5, 0, 0, 0}},
        {from_slice(0.3, 0.4, kI), from_slice(-0.2, 0.6, kI)},
        {from_slice(1.0, 0.2, kJ), from_slice(0.8, 0.9, kJ)},
    };
    const LipschitzReport rep =
        lipschitz_probe(f, alpha, 1.0, {1, 4, 16}, pairs, 40);
    CHECK(rep.bound_constant ==
          doctest::Approx(std::sqrt(2.0) * 2.0 * std::sqrt(alpha / kPi)).epsilon(1e-12));
    CHECK(rep.worst_quotient <= 1.0);
    CHECK(rep.worst_quotient > 0.0);
}

TEST_CASE("slice laplacian stencil resolves harmonic and radial stems") {
    const SliceFunction saddle = SliceFunction::from_stem(
        Stem{[](double x, double y) { return Quaternion{x * x - y * y, 0, 0, 0}; },
             [](double, double) { return Quaternion{}; }});
    const SliceFunction rad = sq_modulus();
    for (const Quaternion& z : sample_bank()) {
        CHECK(slice_laplacian(saddle, z, 1e-3).norm() <= 1e-7);
        CHECK(slice_laplacian(rad, z, 1e-3).x0 == doctest::Approx(4.0).epsilon(1e-6));
    }
}

TEST_CASE("fixed point suite separates harmonic fixed points from the shift") {
    const auto cases = fixed_point_suite(1.0, 40, sample_bank());
    REQUIRE(!cases.empty());
    bool saw_fixed = false, saw_shifted = false, saw_exponential = false;
    for (const auto& c : cases) {
        if (c.fixed_expected) {
            CHECK(c.residual <= 1e-6);
            saw_fixed = true;
            if (c.laplacian_norm > 1.0) saw_exponential = true;  // fixed but not harmonic
        } else {
            CHECK(c.residual > 0.1);
            saw_shifted = true;
        }
    }
    CHECK(saw_fixed);
    CHECK(saw_shifted);
    CHECK(saw_exponential);
}

TEST_CASE("exponential fixed point is fixed with a nonvanishing laplacian") {
    const double alpha = 1.0;
    const SliceFunction f = exponential_fixed_point(alpha, kI);
    const SliceFunction g = berezin(f, alpha, 48);
    double worst_rel = 0.0;
    for (const Quaternion& z : {Quaternion{}, Quaternion{0.3, 0, 0, 0},
                                from_slice(0.2, 0.3, kI)}) {
        const double denom = 1.0 + f(z).norm();
        worst_rel = std::max(worst_rel, (g(z) - f(z)).norm() / denom);
    }
    CHECK(worst_rel <= 1e-6);

    // The slice Laplacian has magnitude 8 alpha pi |f|, far from zero.
    const Quaternion lap = slice_laplacian(f, Quaternion{}, 1e-4);
    CHECK(lap.norm() == doctest::Approx(8.0 * alpha * kPi * f(Quaternion{}).norm())
                            .epsilon(1e-3));
}

TEST_CASE("integrability probe stabilizes under node refinement") {
    const SliceFunction f = cos_real();
    const IntegrabilityProbe probe =
        condition_integrable_probe(f, 2.0, 1.0, from_slice(0.4, 0.6, kI), 40);
    CHECK(probe.value > 0.0);
    CHECK(std::isfinite(probe.value));
    CHECK(probe.relative_step <= 1e-6);
}
