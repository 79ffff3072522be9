#include "qfock/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "qfock/gauss.hpp"

namespace qfock {

PlaneRule plane_rule_gaussian(int n, double s) {
    if (n < 1) throw std::invalid_argument("plane_rule_gaussian: n must be >= 1");
    if (!(s > 0.0)) throw std::invalid_argument("plane_rule_gaussian: s must be > 0");
    const Nodes1D gh = gauss_hermite(n);
    // 1-d nodes t_i with weight w_i for integrals against e^{-t^2}; absorb
    // the exponential into the weight and rescale t -> t/sqrt(s) so the
    // rule integrates plain dm for integrands with decay e^{-s|z|^2}.
    std::vector<double> t(n), u(n);
    const double inv_sqrt_s = 1.0 / std::sqrt(s);
    for (int i = 0; i < n; ++i) {
        t[i] = gh.x[i] * inv_sqrt_s;
        u[i] = gh.w[i] * std::exp(gh.x[i] * gh.x[i]) * inv_sqrt_s;
    }
    PlaneRule rule;
    rule.s = s;
    rule.x.reserve(static_cast<std::size_t>(n) * n);
    rule.y.reserve(static_cast<std::size_t>(n) * n);
    rule.w.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            rule.x.push_back(t[i]);
            rule.y.push_back(t[j]);
            rule.w.push_back(u[i] * u[j]);
        }
    }
    rule.radius = std::hypot(t[n - 1], t[n - 1]);
    return rule;
}

PlaneRule plane_rule_gaussian_at(int n, double s, std::complex<double> center) {
    PlaneRule rule = plane_rule_gaussian(n, s);
    for (std::size_t k = 0; k < rule.size(); ++k) {
        rule.x[k] += center.real();
        rule.y[k] += center.imag();
    }
    rule.radius += std::abs(center);
    return rule;
}

PlaneRule plane_rule_disk(std::complex<double> center, double r, int n_r, int n_t) {
    if (n_r < 1 || n_t < 1)
        throw std::invalid_argument("plane_rule_disk: cell counts must be >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("plane_rule_disk: radius must be > 0");
    PlaneRule rule;
    rule.s = 0.0;
    rule.radius = r;
    rule.x.reserve(static_cast<std::size_t>(n_r) * n_t);
    rule.y.reserve(static_cast<std::size_t>(n_r) * n_t);
    rule.w.reserve(static_cast<std::size_t>(n_r) * n_t);
    const double dr = r / n_r;
    const double dt = 2.0 * M_PI / n_t;
    for (int a = 0; a < n_r; ++a) {
        const double rho = (a + 0.5) * dr;   // midpoint radius
        const double cell = rho * dr * dt;   // exact area of each annular cell
        for (int b = 0; b < n_t; ++b) {
            const double th = (b + 0.5) * dt;
            rule.x.push_back(center.real() + rho * std::cos(th));
            rule.y.push_back(center.imag() + rho * std::sin(th));
            rule.w.push_back(cell);
        }
    }
    return rule;
}

GlobalRule global_rule_gaussian(int n_plane, double s, int sphere_points) {
    GlobalRule rule;
    rule.sphere = sphere_rule_symmetric(sphere_points);
    rule.plane = plane_rule_gaussian(n_plane, s);
    return rule;
}

double lambda_slice_density(double alpha, double x, double y) {
    return (alpha / M_PI) * std::exp(-alpha * (x * x + y * y));
}

double lambda_volume_density(double alpha, double x, double y) {
    return (2.0 * alpha / M_PI) * std::exp(-alpha * (x * x + y * y));
}

Quaternion integrate_slice_gaussian(const PlaneRule& rule, double alpha,
                                    const ImaginaryUnit& I,
                                    const std::function<Quaternion(Quaternion)>& g) {
    return integrate_plane<Quaternion>(rule, [&](double x, double y) {
        return lambda_slice_density(alpha, x, y) * g(from_slice(x, y, I));
    });
}

Quaternion integrate_volume_gaussian(const GlobalRule& rule, double alpha,
                                     const std::function<Quaternion(Quaternion)>& g) {
    return integrate_volume<Quaternion>(rule, [&](const Quaternion& q) {
        return lambda_volume_density(alpha, q) * g(q);
    });
}

}  // namespace qfock
