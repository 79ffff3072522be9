#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qfock/parallel.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/sphere.hpp"

namespace qfock {

// Node set for integrals over a slice plane: sum_k w[k] g(x[k], y[k])
// approximates the plane integral of g against Lebesgue area measure.
//
// Two families are provided.  The Gaussian family absorbs a tensor
// Gauss-Hermite rule of decay s, so it is exact for g = polynomial times
// e^{-s|z|^2} and rapidly convergent for integrands with at least that
// decay; any Gaussian density (weights, norms) stays inside the integrand
// closure.  The disk family is a polar midpoint rule over a fixed disk for
// integrands with no useful decay.
struct PlaneRule {
    std::vector<double> x, y, w;
    double s = 0.0;       // Gaussian decay the rule is tuned for (0 = compact rule)
    double radius = 0.0;  // extent of the node cloud
    std::size_t size() const { return x.size(); }
};

// Tensor Gauss-Hermite with n x n nodes for integrands decaying like
// e^{-s|z|^2} or faster.
PlaneRule plane_rule_gaussian(int n, double s);

// Same rule recentered at a point (used by the Gaussian-convolution
// transforms, where the kernel supplies the decay around the center).
PlaneRule plane_rule_gaussian_at(int n, double s, std::complex<double> center);

// Polar midpoint rule on the disk |z - center| <= r with n_r radial and
// n_t angular cells.  Integrates the constant exactly (total weight is the
// disk area).
PlaneRule plane_rule_disk(std::complex<double> center, double r, int n_r, int n_t);

// Quadrature over the whole quaternion space in the product view
// (slice plane) x (sphere of units).  Volume integrals count each point
// once: the plane rules cover the full plane while every quaternion has a
// y >= 0 representative, so the sphere sum is halved; this is exact
// because all sphere rules here are antipodally symmetric.
struct GlobalRule {
    SphereRule sphere;
    PlaneRule plane;
};

GlobalRule global_rule_gaussian(int n_plane, double s, int sphere_points = 12);

// sum over plane nodes of w * g(x, y); T needs zero-init and +=.
template <class T, class G>
T integrate_plane(const PlaneRule& rule, G&& g) {
    return block_sum<T>(rule.size(), [&](std::size_t k) -> T {
        return rule.w[k] * g(rule.x[k], rule.y[k]);
    });
}

template <class T, class G>
T integrate_plane_serial(const PlaneRule& rule, G&& g) {
    return block_sum_serial<T>(rule.size(), [&](std::size_t k) -> T {
        return rule.w[k] * g(rule.x[k], rule.y[k]);
    });
}

// Integral of g over the quaternion volume (dV).  g receives the point.
template <class T, class G>
T integrate_volume(const GlobalRule& rule, G&& g) {
    const std::size_t np = rule.plane.size();
    const std::size_t total = rule.sphere.nodes.size() * np;
    T acc = block_sum<T>(total, [&](std::size_t idx) -> T {
        const auto& sn = rule.sphere.nodes[idx / np];
        const std::size_t k = idx % np;
        const Quaternion q =
            from_slice(rule.plane.x[k], rule.plane.y[k], sn.unit);
        return (sn.weight * rule.plane.w[k]) * g(q);
    });
    return 0.5 * acc;
}

// Gaussian probability densities used throughout: the slice measure
// (alpha/pi) e^{-alpha |z|^2} dm and the volume measure
// (2 alpha/pi) e^{-alpha |z|^2} dV.
double lambda_slice_density(double alpha, double x, double y);
double lambda_volume_density(double alpha, double x, double y);
inline double lambda_volume_density(double alpha, const Quaternion& q) {
    return lambda_volume_density(alpha, q.x0, q.im_norm());
}

// Convenience: integral of g against the slice Gaussian probability
// measure on the slice of I (quaternion-valued integrand).
Quaternion integrate_slice_gaussian(const PlaneRule& rule, double alpha,
                                    const ImaginaryUnit& I,
                                    const std::function<Quaternion(Quaternion)>& g);

// Integral of g against the volume Gaussian probability measure.
Quaternion integrate_volume_gaussian(const GlobalRule& rule, double alpha,
                                     const std::function<Quaternion(Quaternion)>& g);

}  // namespace qfock
