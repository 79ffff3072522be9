#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qfock/berezin.hpp"
#include "qfock/bmo.hpp"
#include "qfock/experiments.hpp"
#include "qfock/fock.hpp"
#include "qfock/measure.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/symbols.hpp"

namespace qfock {

namespace {

// Independent route to the Gaussian smoothing: the normalized-kernel
// integral on the slice of z, with the kernel modulus evaluated from its
// power series rather than the closed Gaussian form.
Quaternion smoothing_kernel_route(const SliceFunction& f, double alpha,
                                  const Quaternion& z, int n) {
    const SlicePoint s = slice_decompose(z);
    const PlaneRule rule = plane_rule_gaussian_at(n, alpha, {s.x, s.y});
    const double z2 = s.x * s.x + s.y * s.y;
    const Quaternion acc =
        integrate_plane_serial<Quaternion>(rule, [&](double u, double v) {
            const Quaternion w = from_slice(u, v, s.unit);
            const double k = kernel_scaled(alpha, w, z).norm();
            const double weight =
                k * k * std::exp(-alpha * (z2 + u * u + v * v));
            return weight * f(w);
        });
    return (alpha / M_PI) * acc;
}

// ---- berezin ----------------------------------------------------------------

void run_berezin(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 2.0);
    const double beta = cfg.param("beta", 1.0);
    const int n_nodes = static_cast<int>(cfg.param("n_nodes", 40));
    Rng rng(cfg.seed);

    rep.table("values", "function,x,y,value");

    // Closed forms: the cosine eigenfunction and the squared-modulus shift.
    {
        const Symbol cosre = builtin_symbol("cos_re");
        const SliceFunction smoothed = berezin(cosre.fn, alpha, n_nodes);
        const double damp = std::exp(-1.0 / (4.0 * alpha));
        double worst = 0;
        for (double x : {-1.5, -0.4, 0.3, 1.2}) {
            for (double y : {0.0, 0.8, 1.6}) {
                const Quaternion z = from_slice(x, y, ImaginaryUnit::j());
                const Quaternion got = smoothed(z);
                worst = std::max(worst, (got - damp * cosre.fn(z)).norm());
                rep.row("values", {"cos_re", format_double(x), format_double(y),
                                   format_double(got.x0)});
            }
        }
        rep.check("cosine-eigenfunction", worst, 1e-8);
    }
    {
        const Symbol abs2 = builtin_symbol("abs2");
        const SliceFunction smoothed = berezin(abs2.fn, alpha, n_nodes);
        double worst = 0;
        for (double x : {-1.0, 0.5, 2.0}) {
            for (double y : {0.0, 1.0}) {
                const Quaternion z = from_slice(x, y, ImaginaryUnit::i());
                const Quaternion want = abs2.fn(z) + Quaternion{1.0 / alpha};
                const Quaternion got = smoothed(z);
                worst = std::max(worst, (got - want).norm());
                rep.row("values", {"abs2", format_double(x), format_double(y),
                                   format_double(got.x0)});
            }
        }
        rep.check("squared-modulus-shift", worst, 1e-8);
    }

    // Contraction on the sup norm for bounded symbols.
    {
        double worst = 0;
        for (const std::string name : {"bump", "step_smooth", "cos_re", "sawtooth"}) {
            const Symbol sym = builtin_symbol(name);
            const SliceFunction smoothed = berezin(sym.fn, alpha, n_nodes);
            for (int t = 0; t < 25; ++t)
                worst = std::max(worst,
                                 smoothed(rng.quaternion(1.5)).norm() / sym.sup_norm);
        }
        rep.check("sup-norm-contraction", worst, 1.0 + 1e-9);
    }

    // Parameter monotonicity for nonnegative symbols: the tighter Gaussian
    // is dominated by (alpha/beta) times the wider one when beta <= alpha.
    {
        double worst = 0;
        for (const std::string name : {"const_one", "bump", "gauss", "step_smooth"}) {
            const Symbol sym = builtin_symbol(name);
            const SliceFunction tight = berezin(sym.fn, alpha, n_nodes);
            const SliceFunction wide = berezin(sym.fn, beta, n_nodes);
            for (int t = 0; t < 40; ++t) {
                const Quaternion z = rng.quaternion(1.2);
                const double hi = (alpha / beta) * wide(z).x0;
                if (hi > 1e-8) worst = std::max(worst, tight(z).x0 / hi);
            }
        }
        rep.check("parameter-monotonicity", worst, 1.0 + 1e-6);
    }

    // The smoothing of an intrinsic function is intrinsic.
    {
        const SliceFunction smoothed = berezin(builtin_symbol("bump").fn, alpha, 24);
        rep.check_true("smoothing-preserves-intrinsic",
                       is_intrinsic(smoothed, IntrinsicMode::stem_real).intrinsic);
    }

    // Two routes: stem convolution vs the normalized-kernel integral with
    // the series-evaluated kernel modulus.
    {
        const ConvRule rule = conv_rule(n_nodes, alpha);
        double worst = 0;
        for (const std::string name : {"cos_re", "bump", "gauss"}) {
            const Symbol sym = builtin_symbol(name);
            for (const Quaternion& z :
                 {from_slice(0.4, 0.9, ImaginaryUnit::i()),
                  from_slice(-1.1, 0.3, ImaginaryUnit::k()),
                  from_slice(0.0, 1.2, ImaginaryUnit::j())}) {
                const Quaternion direct = berezin_at(sym.fn, alpha, z, rule);
                const Quaternion via_kernel =
                    smoothing_kernel_route(sym.fn, alpha, z, n_nodes);
                worst = std::max(worst, (direct - via_kernel).norm());
            }
        }
        rep.check("kernel-route-agreement", worst, 1e-6);
    }

    // Integrability gate stabilizes under node refinement.
    {
        const IntegrabilityProbe pg = condition_integrable_probe(
            builtin_symbol("gauss").fn, 2.0, alpha, from_slice(1.0, 0.5, ImaginaryUnit::i()),
            n_nodes);
        const IntegrabilityProbe pa = condition_integrable_probe(
            builtin_symbol("abs2").fn, 2.0, alpha, from_slice(1.0, 0.5, ImaginaryUnit::i()),
            n_nodes);
        rep.check("integrability-probe-stable-gauss", pg.relative_step, 1e-6);
        rep.check("integrability-probe-stable-abs2", pa.relative_step, 1e-6);
        rep.note("integrability-gauss", format_double(pg.value));
        rep.note("integrability-abs2", format_double(pa.value));
    }
}

// ---- semigroup --------------------------------------------------------------

void run_semigroup(const RunConfig& cfg, ExperimentReport& rep) {
    const int n_nodes = static_cast<int>(cfg.param("n_nodes", 32));

    const std::vector<Quaternion> samples = {
        from_slice(0.0, 0.0, ImaginaryUnit::i()),
        from_slice(0.9, 0.4, ImaginaryUnit::i()),
        from_slice(-0.5, 1.1, ImaginaryUnit::j()),
        from_slice(1.3, 0.2, ImaginaryUnit::k()),
        from_slice(-1.0, 0.8, ImaginaryUnit::i()),
    };
    const std::vector<std::pair<double, double>> pairs = {
        {1, 1}, {2, 1}, {0.5, 1.5}, {2, 3}};

    rep.table("deviation",
              "function,a,b,combined-alpha,worst-gap,witness-x,witness-y");
    double worst = 0;
    for (const std::string name : {"gauss", "cos_re"}) {
        const Symbol sym = builtin_symbol(name);
        for (const auto& [a, b] : pairs) {
            const SemigroupReport sr = semigroup_check(sym.fn, a, b, samples, n_nodes);
            const SlicePoint w = slice_decompose(sr.witness);
            rep.row("deviation",
                    {name, format_double(a), format_double(b),
                     format_double(sr.combined_alpha), format_double(sr.worst_gap),
                     format_double(w.x), format_double(w.y)});
            worst = std::max(worst, sr.worst_gap);
        }
    }
    rep.check("two-step-collapse", worst, 1e-6);

    // The n-fold iterate equals one smoothing at alpha/n: spot check that
    // the exposed iterate matches an explicitly nested pair for n = 2.
    {
        const Symbol sym = builtin_symbol("gauss");
        const SliceFunction once = berezin(sym.fn, 2.0, n_nodes);
        const SliceFunction twice = berezin(once, 2.0, n_nodes);
        const SliceFunction collapsed = berezin_iterate(sym.fn, 2.0, 2, n_nodes);
        double worst_it = 0;
        for (const Quaternion& z : samples)
            worst_it = std::max(worst_it, (twice(z) - collapsed(z)).norm());
        rep.check("iterate-collapse-n2", worst_it, 1e-6);
    }
}

// ---- fixed-points -----------------------------------------------------------

void run_fixed_points(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int n_nodes = static_cast<int>(cfg.param("n_nodes", 60));
    Rng rng(cfg.seed);

    std::vector<Quaternion> samples;
    const ImaginaryUnit slant(1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0));
    for (double x : {-1.5, -0.5, 0.5, 1.5})
        for (double y : {0.0, 0.7, 1.4})
            for (const ImaginaryUnit& I : {ImaginaryUnit::i(), slant})
                samples.push_back(from_slice(x, y, I));

    const std::vector<FixedPointCase> cases = fixed_point_suite(alpha, n_nodes, samples);
    rep.table("cases", "case,residual,laplacian-sup,fixed-expected");

    double expo_scale = 0;
    const SliceFunction expo = exponential_fixed_point(alpha, ImaginaryUnit::i());
    for (const Quaternion& z : samples) expo_scale = std::max(expo_scale, expo(z).norm());
    rep.note("exponential-scale", format_double(expo_scale));

    for (const FixedPointCase& c : cases) {
        rep.row("cases", {c.name, format_double(c.residual),
                          format_double(c.laplacian_norm),
                          c.fixed_expected ? "1" : "0"});
        if (c.name == "real-part" || c.name == "harmonic-saddle") {
            rep.check(c.name + "-fixed", c.residual, 1e-8);
            rep.check(c.name + "-harmonic", c.laplacian_norm, 1e-5);
        } else if (c.name == "modulus-squared") {
            rep.check("modulus-squared-shift-formula", c.residual, 1e-8);
            rep.check_at_least("modulus-squared-not-harmonic", c.laplacian_norm, 3.9);
        } else if (c.name == "exponential-nonharmonic") {
            rep.check("exponential-fixed-relative", c.residual / expo_scale, 1e-6);
            rep.check_at_least("exponential-not-harmonic", c.laplacian_norm, 0.1);
        }
    }

    // Iterates of a bounded symbol flatten at the dimensional rate.
    {
        std::vector<std::pair<Quaternion, Quaternion>> pairs;
        for (int t = 0; t < 6; ++t)
            pairs.emplace_back(rng.quaternion(1.2), rng.quaternion(1.2));
        const std::vector<int> counts = {1, 4, 16};
        const LipschitzReport lr =
            lipschitz_probe(builtin_symbol("bump").fn, alpha, 1.0, counts, pairs, 40);
        rep.table("lipschitz", "bound-constant,worst-quotient,worst-iterates");
        rep.row("lipschitz", {format_double(lr.bound_constant),
                              format_double(lr.worst_quotient),
                              format_double(lr.worst_iter)});
        rep.check("iterate-flattening-bound", lr.worst_quotient, 1.0);
    }
}

// ---- bmo --------------------------------------------------------------------

void run_bmo(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const double p = cfg.param("p", 1.0);
    const double r = cfg.param("r", 1.0);

    const std::vector<Quaternion> inner = profile_lattice(2.0, 1.0);
    const std::vector<Quaternion> outer = profile_lattice(4.0, 2.0);

    rep.table("window-norms",
              "function,oscillation-inner,oscillation-outer,oscillation-growth,"
              "local-oscillation,gaussian-average");

    const std::vector<std::string> members = {"const_one", "re",   "step_smooth",
                                              "sawtooth",  "bump", "cos_re"};
    double worst_member_growth = 0;
    for (const std::string& name : members) {
        const Symbol sym = builtin_symbol(name);
        const double in = bmo_window_norm(sym.fn, r, p, inner, 24, 24);
        const double out = bmo_window_norm(sym.fn, r, p, outer, 24, 24);
        const double growth = in > 1e-12 ? out / in : 1.0;
        const double bo = bo_window_norm(sym.fn, inner, 1.0, 48, 6);
        const double ba = ba_window_norm(sym.fn, p, alpha, inner, 32);
        rep.row("window-norms",
                {name, format_double(in), format_double(out), format_double(growth),
                 format_double(bo), format_double(ba)});
        if (name != "const_one") worst_member_growth = std::max(worst_member_growth, growth);

        // Oscillation never exceeds twice the local oscillation bound, and
        // the Gaussian average of |f|^p never exceeds sup|f|^p.
        if (sym.bounded)
            rep.check("gaussian-average-bounded-" + name, ba,
                      std::pow(sym.sup_norm, p) + 1e-9);
    }
    rep.check("window-growth-members", worst_member_growth, 1.2);

    // Constants have no oscillation at all.
    rep.check("constant-oscillation",
              bmo_window_norm(builtin_symbol("const_one").fn, r, p, inner, 24, 24),
              1e-10);

    // Negative control: the squared modulus oscillates more on the larger
    // window (it is not of bounded mean oscillation).
    {
        const Symbol abs2 = builtin_symbol("abs2");
        const double in = bmo_window_norm(abs2.fn, r, p, inner, 24, 24);
        const double out = bmo_window_norm(abs2.fn, r, p, outer, 24, 24);
        rep.check_at_least("window-growth-control", out / in, 1.5);
        rep.row("window-norms",
                {"abs2", format_double(in), format_double(out), format_double(out / in),
                 format_double(bo_window_norm(abs2.fn, inner, 1.0, 48, 6)),
                 format_double(ba_window_norm(abs2.fn, p, alpha, inner, 32))});
    }

    // Shift invariance of the oscillation: translating along the real axis
    // moves the statistic with the center.
    {
        const Symbol sym = builtin_symbol("step_smooth");
        const Quaternion z0 = from_slice(0.3, 0.6, ImaginaryUnit::i());
        const double shift = 1.25;
        const SliceFunction shifted = SliceFunction::from_stem(
            Stem{[f = sym.fn, shift](double x, double y) {
                     return f.stem_a(x - shift, y);
                 },
                 [f = sym.fn, shift](double x, double y) {
                     return f.stem_b(x - shift, y);
                 }},
            FnTag::intrinsic);
        const double base = mean_oscillation(sym.fn, z0, r, p, 24, 24);
        const double moved = mean_oscillation(
            shifted, z0 + Quaternion{shift}, r, p, 24, 24);
        rep.check("oscillation-shift-invariance", std::abs(base - moved), 1e-10);
    }

    // The local oscillation of the real part at unit radius is exactly 1
    // (center-to-boundary shift in the x-direction), and its disk-mean
    // oscillation stays below that local bound.
    {
        const Symbol re = builtin_symbol("re");
        const Quaternion z0 = from_slice(0.0, 1.0, ImaginaryUnit::i());
        const double lo = local_oscillation(re.fn, z0, 1.0, 64, 8);
        rep.check("local-oscillation-real-part", std::abs(lo - 1.0), 1e-6);
        const double mo = mean_oscillation(re.fn, z0, 1.0, p, 24, 24);
        rep.check("mean-below-local", mo, lo);
    }

    // Decomposition into slow + small for three oscillation-bounded
    // symbols: all four statistics stay essentially flat between windows.
    {
        rep.table("decomposition", "function,statistic,inner,outer,growth");
        double worst = 0;
        for (const std::string name : {"step_smooth", "sawtooth", "re"}) {
            const DecompositionReport dr = decomposition_check(
                builtin_symbol(name).fn, r, p, alpha, inner, outer, 24);
            for (const DecompositionStat& st : dr.stats)
                rep.row("decomposition",
                        {name, st.name, format_double(st.inner), format_double(st.outer),
                         format_double(st.growth)});
            worst = std::max(worst, dr.max_growth);
        }
        rep.check("decomposition-growth", worst, 1.35);
    }
}

}  // namespace

std::vector<ExperimentSpec> berezin_experiments() {
    return {
        {"berezin",
         "Gaussian smoothing: closed forms, contraction, monotonicity, kernel route",
         {"alpha", "beta", "n_nodes"},
         {},
         &run_berezin},
        {"semigroup",
         "two smoothings collapse to one at the harmonic-sum parameter",
         {"n_nodes"},
         {},
         &run_semigroup},
        {"fixed-points",
         "fixed functions of the smoothing: harmonic stems, the shifted square, "
         "a non-harmonic exponential",
         {"alpha", "n_nodes"},
         {},
         &run_fixed_points},
        {"bmo",
         "mean-oscillation windows, controls, and the slow-plus-small decomposition",
         {"alpha", "p", "r"},
         {},
         &run_bmo},
    };
}

}  // namespace qfock
