#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qfock/gauss.hpp"
#include "qfock/sphere.hpp"

using namespace qfock;

namespace {

double line_integral(const Nodes1D& rule, const std::function<double(double)>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.w[i] * f(rule.x[i]);
    return s;
}

double sphere_moment(const SphereRule& rule,
                     const std::function<double(double, double, double)>& f) {
    double s = 0.0;
    for (const auto& node : rule.nodes) {
        const auto v = node.unit.vec();
        s += node.weight * f(v[0], v[1], v[2]);
    }
    return s;
}

bool has_antipode(const SphereRule& rule, const WeightedUnit& node) {
    const auto v = node.unit.vec();
    for (const auto& other : rule.nodes) {
        const auto u = other.unit.vec();
        const double d = std::abs(u[0] + v[0]) + std::abs(u[1] + v[1]) +
                         std::abs(u[2] + v[2]);
        if (d < 1e-12 && std::abs(other.weight - node.weight) < 1e-15) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("legendre rule hits its stated degree") {
    const Nodes1D r = gauss_legendre(5);  // exact through degree 9
    CHECK(r.size() == 5);
    CHECK(line_integral(r, [](double) { return 1.0; }) == doctest::Approx(2.0));
    CHECK(line_integral(r, [](double x) { return std::pow(x, 8); }) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    CHECK(std::abs(line_integral(r, [](double x) { return std::pow(x, 9); })) <= 1e-14);
}

TEST_CASE("hermite rule integrates gaussian moments") {
    const Nodes1D r = gauss_hermite(8);  // exact through degree 15
    const double spi = std::sqrt(std::acos(-1.0));
    CHECK(line_integral(r, [](double) { return 1.0; }) ==
          doctest::Approx(spi).epsilon(1e-13));
    CHECK(line_integral(r, [](double t) { return t * t; }) ==
          doctest::Approx(spi / 2.0).epsilon(1e-13));
    CHECK(line_integral(r, [](double t) { return std::pow(t, 6); }) ==
          doctest::Approx(15.0 * spi / 8.0).epsilon(1e-13));
    CHECK(std::abs(line_integral(r, [](double t) { return std::pow(t, 7); })) <= 1e-12);
}

TEST_CASE("symmetric sphere designs integrate their stated degree") {
    for (int points : {6, 12}) {
        const SphereRule rule = sphere_rule_symmetric(points);
        CHECK(static_cast<int>(rule.nodes.size()) == points);

        double total = 0.0;
        for (const auto& node : rule.nodes) {
            total += node.weight;
            CHECK(has_antipode(rule, node));
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

        // Degree-2 moments of the normalized surface measure.
        CHECK(sphere_moment(rule, [](double a, double, double) { return a * a; }) ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-13));
        CHECK(std::abs(sphere_moment(
                  rule, [](double a, double b, double) { return a * b; })) <= 1e-13);
        // Odd moments vanish by the antipodal pairing.
        CHECK(std::abs(sphere_moment(
                  rule, [](double a, double, double) { return a; })) <= 1e-14);
    }

    // Degree-4 moments need the 12-point design.
    const SphereRule icosa = sphere_rule_symmetric(12);
    CHECK(icosa.degree == 5);
    CHECK(sphere_moment(icosa, [](double a, double, double) {
              return a * a * a * a;
          }) == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
    CHECK(sphere_moment(icosa, [](double a, double b, double) {
              return a * a * b * b;
          }) == doctest::Approx(1.0 / 15.0).epsilon(1e-12));

    CHECK_THROWS(sphere_rule_symmetric(8));
    CHECK_THROWS(sphere_rule_symmetric(0));
}

TEST_CASE("product sphere rule matches the designs and rejects odd azimuth counts") {
    const SphereRule rule = sphere_rule_gauss(6, 8);  // degree min(11, 7) = 7
    double total = 0.0;
    for (const auto& node : rule.nodes) total += node.weight;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));

    CHECK(sphere_moment(rule, [](double a, double, double) { return a * a; }) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(sphere_moment(rule, [](double, double b, double) {
              return b * b * b * b;
          }) == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
    CHECK(sphere_moment(rule, [](double a, double, double c) {
              return a * a * c * c;
          }) == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    CHECK(sphere_moment(rule, [](double a, double b, double c) {
              return a * a * b * b * c * c;
          }) == doctest::Approx(1.0 / 105.0).epsilon(1e-11));

    for (const auto& node : rule.nodes) CHECK(has_antipode(rule, node));

    CHECK_THROWS(sphere_rule_gauss(6, 7));
}
