#include "qfock/berezin.hpp"

#include <cmath>
#include <stdexcept>

#include "qfock/fock.hpp"
#include "qfock/gauss.hpp"
#include "qfock/quadrature.hpp"

namespace qfock {

ConvRule conv_rule(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("conv_rule: n must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("conv_rule: alpha must be > 0");
    const Nodes1D gh = gauss_hermite(n);
    const double inv = 1.0 / std::sqrt(alpha);
    ConvRule rule;
    rule.alpha = alpha;
    rule.dx.reserve(static_cast<std::size_t>(n) * n);
    rule.dy.reserve(static_cast<std::size_t>(n) * n);
    rule.w.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            rule.dx.push_back(gh.x[i] * inv);
            rule.dy.push_back(gh.x[j] * inv);
            rule.w.push_back(gh.w[i] * gh.w[j] / M_PI);
        }
    }
    return rule;
}

namespace {

Quaternion convolve(const std::function<Quaternion(double, double)>& stem,
                    const ConvRule& rule, double x, double y) {
    return block_sum_serial<Quaternion>(rule.size(), [&](std::size_t k) {
        return rule.w[k] * stem(x + rule.dx[k], y + rule.dy[k]);
    });
}

}  // namespace

SliceFunction berezin(const SliceFunction& f, double alpha, int n_nodes) {
    const ConvRule rule = conv_rule(n_nodes, alpha);
    auto a = f.stem_a_fn();
    auto b = f.stem_b_fn();
    Stem stem;
    stem.a = [a, rule](double x, double y) { return convolve(a, rule, x, y); };
    stem.b = [b, rule](double x, double y) { return convolve(b, rule, x, y); };
    const FnTag tag = f.tag() == FnTag::intrinsic ? FnTag::intrinsic : FnTag::generic;
    return SliceFunction::from_stem(std::move(stem), tag);
}

Quaternion berezin_at(const SliceFunction& f, double alpha, const Quaternion& z,
                      const ConvRule& rule) {
    if (std::fabs(rule.alpha - alpha) > 1e-12)
        throw std::invalid_argument("berezin_at: rule built for a different alpha");
    const SlicePoint s = slice_decompose(z);
    const Quaternion a = convolve([&f](double u, double v) { return f.stem_a(u, v); },
                                  rule, s.x, s.y);
    const Quaternion b = convolve([&f](double u, double v) { return f.stem_b(u, v); },
                                  rule, s.x, s.y);
    return a + s.unit.q() * b;
}

double berezin_scalar_slice(const std::function<double(const Quaternion&)>& g,
                            const ImaginaryUnit& I, std::complex<double> z,
                            const ConvRule& rule) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const Quaternion w =
            from_slice(z.real() + rule.dx[k], z.imag() + rule.dy[k], I);
        acc += rule.w[k] * g(w);
    }
    return acc;
}

SemigroupReport semigroup_check(const SliceFunction& f, double a, double b,
                                const std::vector<Quaternion>& samples,
                                int n_nodes) {
    SemigroupReport rep;
    rep.combined_alpha = a * b / (a + b);
    const SliceFunction inner = berezin(f, b, n_nodes);
    const SliceFunction nested = berezin(inner, a, n_nodes);
    const SliceFunction combined = berezin(f, rep.combined_alpha, n_nodes);
    for (const Quaternion& z : samples) {
        const double gap = (nested(z) - combined(z)).norm();
        if (gap > rep.worst_gap) {
            rep.worst_gap = gap;
            rep.witness = z;
        }
    }
    return rep;
}

SliceFunction berezin_iterate(const SliceFunction& f, double alpha, int n_iter,
                              int n_nodes) {
    if (n_iter < 1) throw std::invalid_argument("berezin_iterate: n_iter must be >= 1");
    return berezin(f, alpha / n_iter, n_nodes);
}

LipschitzReport lipschitz_probe(const SliceFunction& f, double alpha,
                                double sup_norm,
                                const std::vector<int>& iteration_counts,
                                const std::vector<std::pair<Quaternion, Quaternion>>& pairs,
                                int n_nodes) {
    LipschitzReport rep;
    rep.bound_constant = std::sqrt(2.0) * 2.0 * std::sqrt(alpha / M_PI) * sup_norm;
    for (int n : iteration_counts) {
        const SliceFunction iter = berezin_iterate(f, alpha, n, n_nodes);
        for (const auto& [z, w] : pairs) {
            const double dist = (z - w).norm();
            if (dist == 0.0) continue;
            const double gap = (iter(z) - iter(w)).norm();
            const double bound = rep.bound_constant / std::sqrt(double(n)) * dist;
            const double quotient = gap / bound;
            if (quotient > rep.worst_quotient) {
                rep.worst_quotient = quotient;
                rep.worst_iter = n;
            }
        }
    }
    return rep;
}

Quaternion slice_laplacian(const SliceFunction& f, const Quaternion& z, double h) {
    const SlicePoint s = slice_decompose(z);
    const ImaginaryUnit I = s.unit;
    const Quaternion center = f(z);
    const Quaternion sum = f(from_slice(s.x + h, s.y, I)) +
                           f(from_slice(s.x - h, s.y, I)) +
                           f(from_slice(s.x, s.y + h, I)) +
                           f(from_slice(s.x, s.y - h, I));
    return (1.0 / (h * h)) * (sum - 4.0 * center);
}

SliceFunction exponential_fixed_point(double alpha, const ImaginaryUnit& I) {
    // a = b = sqrt(2 alpha pi) (1 + I): then a^2 + b^2 = 8 alpha pi I and the
    // Gaussian average multiplies the function by e^{(a^2+b^2)/(4 alpha)}
    // = e^{2 pi I} = 1.
    const double s = std::sqrt(2.0 * alpha * M_PI);
    const Complex a{s, s};
    return extend_from_slice(
        [a, I](Complex zc) -> Quaternion {
            const Complex value = std::exp(a * zc.real() + a * zc.imag());
            return embed(value, I);
        },
        I);
}

std::vector<FixedPointCase> fixed_point_suite(double alpha, int n_nodes,
                                              const std::vector<Quaternion>& samples) {
    std::vector<FixedPointCase> out;
    const double h = 1e-4;
    const ConvRule rule = conv_rule(n_nodes, alpha);

    const auto run = [&](const std::string& name, const SliceFunction& f,
                         const std::function<Quaternion(const Quaternion&)>& expected,
                         bool fixed_expected) {
        FixedPointCase c;
        c.name = name;
        c.fixed_expected = fixed_expected;
        for (const Quaternion& z : samples) {
            const double res = (berezin_at(f, alpha, z, rule) - expected(z)).norm();
            if (res > c.residual) c.residual = res;
            const double lap = slice_laplacian(f, z, h).norm();
            if (lap > c.laplacian_norm) c.laplacian_norm = lap;
        }
        out.push_back(c);
    };

    const SliceFunction re_part = SliceFunction::from_stem(
        Stem{[](double x, double) { return Quaternion{x}; },
             [](double, double) { return Quaternion{}; }},
        FnTag::intrinsic);
    run("real-part", re_part, [&re_part](const Quaternion& z) { return re_part(z); },
        true);

    const SliceFunction saddle = SliceFunction::from_stem(
        Stem{[](double x, double y) { return Quaternion{x * x - y * y}; },
             [](double, double) { return Quaternion{}; }},
        FnTag::intrinsic);
    run("harmonic-saddle", saddle,
        [&saddle](const Quaternion& z) { return saddle(z); }, true);

    const SliceFunction abs2 = SliceFunction::from_stem(
        Stem{[](double x, double y) { return Quaternion{x * x + y * y}; },
             [](double, double) { return Quaternion{}; }},
        FnTag::intrinsic);
    run("modulus-squared", abs2,
        [&abs2, alpha](const Quaternion& z) {
            return abs2(z) + Quaternion{1.0 / alpha};
        },
        false);

    const SliceFunction expo = exponential_fixed_point(alpha, ImaginaryUnit::i());
    run("exponential-nonharmonic", expo,
        [&expo](const Quaternion& z) { return expo(z); }, true);

    return out;
}

IntegrabilityProbe condition_integrable_probe(const SliceFunction& f, double p,
                                              double alpha, const Quaternion& z,
                                              int n_nodes) {
    const SlicePoint s = slice_decompose(z);
    const auto value_at = [&](int n) {
        const PlaneRule rule = plane_rule_gaussian(n, alpha);
        return integrate_plane_serial<double>(rule, [&](double x, double y) {
            const Quaternion w = from_slice(x, y, s.unit);
            const double kmod = kernel_scaled(alpha, w, z).norm();
            return kmod * kmod * std::pow(f(w).norm(), p) *
                   lambda_slice_density(alpha, x, y);
        });
    };
    IntegrabilityProbe probe;
    const double coarse = value_at(n_nodes);
    probe.value = value_at(2 * n_nodes);
    probe.relative_step =
        std::fabs(probe.value - coarse) / std::max(1e-300, std::fabs(probe.value));
    return probe;
}

}  // namespace qfock
