#include "qfock/projection.hpp"

#include <cmath>
#include <stdexcept>

namespace qfock {

std::vector<Quaternion> project_coeffs(const SliceFunction& f, double alpha,
                                       const GlobalRule& rule, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("project_coeffs: negative degree");
    std::vector<Quaternion> c(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        const Quaternion moment =
            integrate_volume_gaussian(rule, alpha, [&](const Quaternion& w) {
                Quaternion wp = Quaternion::one();
                const Quaternion wbar = conj(w);
                for (int m = 0; m < n; ++m) wp = wp * wbar;
                return wp * f(w);
            });
        // alpha^n / n! without overflow for the degrees used here
        double scale = 1.0;
        for (int m = 1; m <= n; ++m) scale *= alpha / m;
        c[static_cast<std::size_t>(n)] = scale * moment;
    }
    return c;
}

SliceFunction apply_projection(const SliceFunction& f, double alpha,
                               const GlobalRule& rule, int max_degree) {
    return SliceFunction::poly(project_coeffs(f, alpha, rule, max_degree));
}

Quaternion apply_modulus_operator(const SliceFunction& f, double alpha,
                                  const Quaternion& z, const GlobalRule& rule,
                                  const SeriesPolicy& policy) {
    return integrate_volume_gaussian(rule, alpha, [&](const Quaternion& w) {
        return kernel_scaled(alpha, z, w, policy).norm() * f(w);
    });
}

double kernel_modulus_integral(double t, const Quaternion& z, double s,
                               const GlobalRule& rule, const SeriesPolicy& policy) {
    const Quaternion value =
        integrate_volume_gaussian(rule, s, [&](const Quaternion& w) {
            return Quaternion{kernel_scaled(t, z, w, policy).norm()};
        });
    return value.x0;
}

SliceFunction gaussian_monomial(double x, int k) {
    if (k < 0) throw std::invalid_argument("gaussian_monomial: negative degree");
    std::vector<Quaternion> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = Quaternion::one();
    const SliceFunction mono = SliceFunction::poly(std::move(c));
    if (x == 0.0) return mono;
    Stem stem;
    stem.a = [mono, x](double u, double v) {
        return std::exp(-x * (u * u + v * v)) * mono.stem_a(u, v);
    };
    stem.b = [mono, x](double u, double v) {
        return std::exp(-x * (u * u + v * v)) * mono.stem_b(u, v);
    };
    // real-coefficient monomial times a real radial factor: stems stay real
    return SliceFunction::from_stem(std::move(stem), FnTag::intrinsic);
}

double probe_norm(double x, int k, double p, double beta) {
    if (!(p > 0.0) || !(beta > 0.0) || k < 0 || !(p * x + beta > 0.0))
        throw std::invalid_argument("probe_norm: parameters out of range");
    const double m = 0.5 * p * k;
    const double log_pth_power = std::log(beta) + std::lgamma(m + 1.0) -
                                 (m + 1.0) * std::log(p * x + beta);
    return std::exp(log_pth_power / p);
}

double probe_projected_norm(double x, int k, double p, double alpha, double beta) {
    const double c = std::pow(alpha / (alpha + x), k + 1);
    return c * probe_norm(0.0, k, p, beta);
}

double probe_ratio(double x, int k, double p, double alpha, double beta) {
    return probe_projected_norm(x, k, p, alpha, beta) / probe_norm(x, k, p, beta);
}

double probe_growth_factor(double x, double p, double alpha, double beta) {
    return (alpha / (alpha + x)) * std::sqrt(1.0 + p * x / beta);
}

ThresholdReport threshold_probe(double p, double alpha, double beta,
                                const std::vector<double>& xs,
                                const std::vector<int>& ks, double threshold) {
    ThresholdReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.threshold = threshold;
    for (double x : xs) {
        if (x < 0.0)
            throw std::invalid_argument("threshold_probe: probe bank uses x >= 0");
        const double g = probe_growth_factor(x, p, alpha, beta);
        for (int k : ks) {
            ThresholdRow row;
            row.x = x;
            row.k = k;
            row.ratio = probe_ratio(x, k, p, alpha, beta);
            row.growth = g;
            rep.rows.push_back(row);
        }
        if (g > rep.max_growth) rep.max_growth = g;
    }
    rep.bounded = rep.max_growth <= threshold;
    return rep;
}

Quaternion adjoint_projection_apply(const SliceFunction& g, double alpha,
                                    double beta, const Quaternion& z,
                                    const GlobalRule& rule,
                                    const SeriesPolicy& policy) {
    const Quaternion integral =
        integrate_volume_gaussian(rule, beta, [&](const Quaternion& w) {
            return kernel_scaled(alpha, z, w, policy) * g(w);
        });
    return (alpha / beta) * std::exp((beta - alpha) * z.norm_sq()) * integral;
}

Quaternion adjoint_probe_exact(double x, int k, double alpha, double beta,
                               const Quaternion& z) {
    Quaternion zp = Quaternion::one();
    for (int m = 0; m < k; ++m) zp = zp * z;
    const double c = std::pow(alpha / (beta + x), k + 1);
    return c * std::exp((beta - alpha) * z.norm_sq()) * zp;
}

SchurReport schur_verify(double p, double alpha, double beta,
                         const std::vector<Quaternion>& samples,
                         const GlobalRule& rule, const SeriesPolicy& policy) {
    if (std::fabs(p * alpha - 2.0 * beta) > 1e-12)
        throw std::invalid_argument("schur_verify: requires p*alpha = 2*beta");
    SchurReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.beta = beta;

    const auto H = [&](const Quaternion& z, const Quaternion& w) {
        return (alpha / beta) * kernel_scaled(alpha, z, w, policy).norm() *
               std::exp((beta - alpha) * w.norm_sq());
    };

    if (p > 1.0) {
        const double q = p / (p - 1.0);
        const double delta = alpha / (2.0 * q);
        rep.delta = delta;
        rep.constant_first = alpha / (alpha - q * delta);
        rep.constant_second = alpha / (beta - p * delta);
        for (const Quaternion& z : samples) {
            SchurSample row;
            row.point = z;
            row.real_axis = z.im_norm() < 1e-12;

            // first integral: over w against h(w)^q
            const Quaternion first =
                integrate_volume_gaussian(rule, beta, [&](const Quaternion& w) {
                    return Quaternion{H(z, w) * std::exp(q * delta * w.norm_sq())};
                });
            const double expected_first =
                rep.constant_first * std::exp(q * delta * z.norm_sq());
            row.ratio_first = first.x0 / expected_first;

            // second integral: over z' against h(z')^p, evaluated at w = z
            const Quaternion second =
                integrate_volume_gaussian(rule, beta, [&](const Quaternion& zp) {
                    return Quaternion{H(zp, z) * std::exp(p * delta * zp.norm_sq())};
                });
            const double expected_second =
                rep.constant_second * std::exp(p * delta * z.norm_sq());
            row.ratio_second = second.x0 / expected_second;
            rep.rows.push_back(row);
        }
    } else {
        // p = 1: single certificate, integral of H(z, w) over z is constant 2.
        rep.delta = 0.0;
        rep.constant_first = alpha / beta;
        rep.constant_second = alpha / beta;
        for (const Quaternion& w : samples) {
            SchurSample row;
            row.point = w;
            row.real_axis = w.im_norm() < 1e-12;
            const Quaternion integral =
                integrate_volume_gaussian(rule, beta, [&](const Quaternion& z) {
                    return Quaternion{H(z, w)};
                });
            row.ratio_first = integral.x0 / rep.constant_first;
            row.ratio_second = row.ratio_first;
            rep.rows.push_back(row);
        }
    }
    for (const SchurSample& row : rep.rows) {
        if (row.real_axis) {
            rep.real_axis_dev = std::max(rep.real_axis_dev,
                                         std::abs(row.ratio_first - 1.0));
            rep.real_axis_dev = std::max(rep.real_axis_dev,
                                         std::abs(row.ratio_second - 1.0));
        } else {
            rep.off_axis_ratio = std::max(rep.off_axis_ratio, row.ratio_first);
            rep.off_axis_ratio = std::max(rep.off_axis_ratio, row.ratio_second);
        }
    }
    return rep;
}

double range_parameter(double alpha, double beta) {
    if (!(2.0 * alpha - beta > 0.0))
        throw std::invalid_argument("range_parameter: requires beta < 2*alpha");
    return alpha * alpha / (2.0 * alpha - beta);
}

SliceFunction range_preimage(const std::vector<Quaternion>& target_coeffs,
                             double alpha, double beta) {
    const double gamma = range_parameter(alpha, beta);
    const double s = alpha / gamma;
    std::vector<Quaternion> scaled(target_coeffs.size());
    double sp = s;  // s^{n+1}
    for (std::size_t n = 0; n < target_coeffs.size(); ++n) {
        scaled[n] = sp * target_coeffs[n];
        sp *= s;
    }
    const SliceFunction poly_part = SliceFunction::poly(std::move(scaled));
    const double decay = beta - alpha;
    Stem stem;
    stem.a = [poly_part, decay](double u, double v) {
        return std::exp(decay * (u * u + v * v)) * poly_part.stem_a(u, v);
    };
    stem.b = [poly_part, decay](double u, double v) {
        return std::exp(decay * (u * u + v * v)) * poly_part.stem_b(u, v);
    };
    return SliceFunction::from_stem(std::move(stem), FnTag::generic);
}

}  // namespace qfock
