#pragma once

#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

struct WeightedUnit {
    ImaginaryUnit unit;
    double weight;
};

// Quadrature for the normalized surface measure on the sphere of imaginary
// units.  Weights sum to 1; `degree` is the largest polynomial degree the
// rule integrates exactly.  Every rule here is antipodally symmetric
// (I and -I both appear), which the volume integrals over the whole
// quaternion space rely on.
struct SphereRule {
    std::vector<WeightedUnit> nodes;
    int degree = 0;
};

// Symmetric point designs.  Supported sizes: 6 (octahedron vertices,
// degree 3) and 12 (icosahedron vertices, degree 5).  These are the
// default because antipodal symmetry is exact by construction.
SphereRule sphere_rule_symmetric(int points = 12);

// Product rule: Gauss-Legendre in the polar cosine x Uniform in azimuth.
// n_phi must be even so the node set stays antipodally symmetric.
// Exact for spherical polynomials of degree <= min(2*n_theta - 1, n_phi - 1).
SphereRule sphere_rule_gauss(int n_theta, int n_phi);

}  // namespace qfock
