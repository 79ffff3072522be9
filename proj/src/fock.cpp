#include "qfock/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace qfock {

int series_order(double r, double tol, int max_terms) {
    if (!(r >= 0.0)) throw std::invalid_argument("series_order: negative radius");
    if (r == 0.0) return 0;
    const double log_tol = std::log(tol);
    double log_term = 0.0;  // log of r^{N+1}/(N+1)! at N = current - 1
    for (int n = 1; n <= max_terms; ++n) {
        log_term += std::log(r) - std::log(static_cast<double>(n));
        if (log_term + r <= log_tol) return n - 1;
    }
    throw std::runtime_error("series_order: tolerance unreachable within max_terms");
}

Quaternion kernel_scaled(double t, const Quaternion& z, const Quaternion& w,
                         const SeriesPolicy& policy) {
    const double zn = z.norm(), wn = w.norm();
    const double r = std::abs(t) * zn * wn;
    if (r > policy.arg_cap)
        throw std::runtime_error("kernel_scaled: argument exceeds overflow guard");
    if (r == 0.0) return Quaternion::one();
    const int order = series_order(r, policy.tail_tol, policy.max_terms);
    // Split each factor into magnitude and unit direction so the scalar
    // magnitude r^n/n! (bounded by e^r) carries all the growth: powering
    // z^n and conj(w)^n directly overflows while t^n/n! underflows, and
    // their product would be 0 * inf = NaN for large |z| |w|.
    const Quaternion uz = (1.0 / zn) * z;
    const Quaternion uw = (1.0 / wn) * conj(w);
    const double sgn = t < 0 ? -1.0 : 1.0;
    Quaternion sum = Quaternion::one();
    Quaternion zp = Quaternion::one();   // uz^n
    Quaternion wp = Quaternion::one();   // uw^n
    double mag = 1.0;                    // r^n / n!
    double sg = 1.0;                     // sign(t)^n
    for (int n = 1; n <= order; ++n) {
        zp = zp * uz;
        wp = wp * uw;
        mag *= r / n;
        sg *= sgn;
        sum += (sg * mag) * (zp * wp);
    }
    return sum;
}

std::vector<Quaternion> kernel_coeffs(const KernelContext& ctx, const Quaternion& z,
                                      double radius) {
    const double r = ctx.alpha * z.norm() * radius;
    if (r > ctx.policy.arg_cap)
        throw std::runtime_error("kernel_coeffs: argument exceeds overflow guard");
    const int order = series_order(r, ctx.policy.tail_tol, ctx.policy.max_terms);
    std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1);
    c[0] = Quaternion::one();
    const double zn = z.norm();
    if (zn == 0.0 || order == 0) return c;
    // Magnitude/direction split as in kernel_scaled: alpha^n/n! can
    // underflow while conj(z)^n overflows, so carry (alpha |z|)^n/n! as
    // one scalar against unit-direction powers.
    const Quaternion uz = (1.0 / zn) * conj(z);
    Quaternion zp = Quaternion::one();  // uz^n
    double mag = 1.0;                   // (alpha |z|)^n / n!
    for (int n = 1; n <= order; ++n) {
        zp = zp * uz;
        mag *= ctx.alpha * zn / n;
        c[static_cast<std::size_t>(n)] = mag * zp;
    }
    return c;
}

SliceFunction kernel_function(const KernelContext& ctx, const Quaternion& z,
                              double radius) {
    return SliceFunction::poly(kernel_coeffs(ctx, z, radius));
}

SliceFunction normalized_kernel(const KernelContext& ctx, const Quaternion& z,
                                double radius) {
    std::vector<Quaternion> c = kernel_coeffs(ctx, z, radius);
    const double scale = std::exp(-0.5 * ctx.alpha * z.norm_sq());
    for (auto& q : c) q = q * scale;
    return SliceFunction::poly(std::move(c));
}

double monomial_norm_sq(double alpha, int n) {
    if (n < 0) throw std::invalid_argument("monomial_norm_sq: negative degree");
    return std::exp(std::lgamma(n + 1.0) - n * std::log(alpha));
}

Quaternion inner_product(const std::vector<Quaternion>& a,
                         const std::vector<Quaternion>& b, double alpha) {
    const std::size_t n = std::min(a.size(), b.size());
    Quaternion sum{};
    for (std::size_t k = 0; k < n; ++k)
        sum += monomial_norm_sq(alpha, static_cast<int>(k)) * (conj(b[k]) * a[k]);
    return sum;
}

namespace {

std::vector<Quaternion> combine(const std::vector<Quaternion>& a,
                                const std::vector<Quaternion>& b, double sign,
                                const Quaternion& u) {
    std::vector<Quaternion> out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        Quaternion ak = k < a.size() ? a[k] : Quaternion{};
        Quaternion bk = k < b.size() ? b[k] : Quaternion{};
        out[k] = ak + sign * (bk * u);
    }
    return out;
}

}  // namespace

Quaternion inner_product_polarized(const std::vector<Quaternion>& a,
                                   const std::vector<Quaternion>& b, double alpha) {
    const Quaternion units[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                 Quaternion::k()};
    Quaternion sum{};
    for (const Quaternion& u : units) {
        const double plus = norm_sq(combine(a, b, +1.0, u), alpha);
        const double minus = norm_sq(combine(a, b, -1.0, u), alpha);
        sum += (0.25 * (plus - minus)) * u;
    }
    return sum;
}

double global_p_norm(const SliceFunction& f, double p, double alpha,
                     const GlobalRule& rule) {
    if (!(p > 0.0)) throw std::invalid_argument("global_p_norm: p must be > 0");
    const double integral = integrate_volume<double>(rule, [&](const Quaternion& q) {
        const double damped = f(q).norm() * std::exp(-0.5 * alpha * q.norm_sq());
        return std::pow(damped, p);
    });
    return std::pow((p * alpha / M_PI) * integral, 1.0 / p);
}

double slice_p_norm(const SliceFunction& f, double p, double alpha,
                    const ImaginaryUnit& I, const PlaneRule& rule) {
    if (!(p > 0.0)) throw std::invalid_argument("slice_p_norm: p must be > 0");
    const double integral = integrate_plane<double>(rule, [&](double x, double y) {
        const Quaternion q = from_slice(x, y, I);
        const double damped = f(q).norm() * std::exp(-0.5 * alpha * q.norm_sq());
        return std::pow(damped, p);
    });
    return std::pow((p * alpha / (2.0 * M_PI)) * integral, 1.0 / p);
}

double sup_seminorm(const SliceFunction& f, double alpha, const GlobalRule& rule) {
    double best = 0.0;
    for (const auto& sn : rule.sphere.nodes) {
        for (std::size_t k = 0; k < rule.plane.size(); ++k) {
            const Quaternion q = from_slice(rule.plane.x[k], rule.plane.y[k], sn.unit);
            const double v = f(q).norm() * std::exp(-0.5 * alpha * q.norm_sq());
            if (v > best) best = v;
        }
    }
    return best;
}

namespace {

PointwiseBound worst_damped_ratio(const SliceFunction& f, double alpha, double nrm,
                                  const std::vector<Quaternion>& sample_points) {
    PointwiseBound out;
    for (const Quaternion& z : sample_points) {
        const double bound = nrm * std::exp(0.5 * alpha * z.norm_sq());
        const double ratio = bound > 0.0 ? f(z).norm() / bound : 0.0;
        if (ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.witness = z;
        }
    }
    return out;
}

}  // namespace

PointwiseBound pointwise_bound_check(const std::vector<Quaternion>& coeffs,
                                     double alpha,
                                     const std::vector<Quaternion>& sample_points) {
    return worst_damped_ratio(SliceFunction::poly(coeffs), alpha,
                              std::sqrt(norm_sq(coeffs, alpha)), sample_points);
}

PointwiseBound pointwise_bound_check(const SliceFunction& f, double p, double alpha,
                                     const GlobalRule& rule,
                                     const std::vector<Quaternion>& sample_points) {
    return worst_damped_ratio(f, alpha, global_p_norm(f, p, alpha, rule),
                              sample_points);
}

}  // namespace qfock
