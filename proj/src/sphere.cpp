#include "qfock/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qfock/gauss.hpp"

namespace qfock {

SphereRule sphere_rule_symmetric(int points) {
    SphereRule rule;
    if (points == 6) {
        const double w = 1.0 / 6.0;
        for (int axis = 0; axis < 3; ++axis)
            for (int sign : {+1, -1}) {
                double v[3] = {0, 0, 0};
                v[axis] = sign;
                rule.nodes.push_back({ImaginaryUnit(v[0], v[1], v[2]), w});
            }
        rule.degree = 3;
        return rule;
    }
    if (points == 12) {
        // Icosahedron vertices: cyclic permutations of (0, ±1, ±phi),
        // normalized.  The icosahedral group has no invariant polynomial
        // of degree 1..5 besides constants, so the equal-weight rule is
        // exact through degree 5.
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double s = std::sqrt(1.0 + phi * phi);
        const double a = 1.0 / s, b = phi / s;
        const double raw[12][3] = {
            {0, a, b},  {0, a, -b},  {0, -a, b},  {0, -a, -b},
            {a, b, 0},  {a, -b, 0},  {-a, b, 0},  {-a, -b, 0},
            {b, 0, a},  {-b, 0, a},  {b, 0, -a},  {-b, 0, -a},
        };
        for (const auto& v : raw)
            rule.nodes.push_back({ImaginaryUnit(v[0], v[1], v[2]), 1.0 / 12.0});
        rule.degree = 5;
        return rule;
    }
    throw std::invalid_argument("sphere_rule_symmetric: supported sizes are 6 and 12");
}

SphereRule sphere_rule_gauss(int n_theta, int n_phi) {
    if (n_theta < 1 || n_phi < 2 || n_phi % 2 != 0)
        throw std::invalid_argument("sphere_rule_gauss: need n_theta >= 1 and even n_phi >= 2");
    SphereRule rule;
    const Nodes1D gl = gauss_legendre(n_theta);  // cos(theta) in [-1, 1], mass 2
    for (int t = 0; t < n_theta; ++t) {
        const double c = gl.x[t];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int p = 0; p < n_phi; ++p) {
            const double phi = 2.0 * std::numbers::pi * (p + 0.5) / n_phi;
            // normalized measure: (1/4pi) sin(theta) dtheta dphi
            const double w = gl.w[t] / 2.0 / n_phi;
            rule.nodes.push_back(
                {ImaginaryUnit(s * std::cos(phi), s * std::sin(phi), c), w});
        }
    }
    rule.degree = std::min(2 * n_theta - 1, n_phi - 1);
    return rule;
}

}  // namespace qfock
