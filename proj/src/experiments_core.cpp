#include <cmath>
#include <complex>
#include <vector>

#include "qfock/experiments.hpp"
#include "qfock/fock.hpp"
#include "qfock/measure.hpp"
#include "qfock/projection.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/slice_function.hpp"
#include "qfock/symbols.hpp"

namespace qfock {

namespace {

double rel_dev(const Quaternion& a, const Quaternion& b) {
    return (a - b).norm() / std::max(1.0, b.norm());
}

double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<Quaternion> random_coeffs(Rng& rng, int degree, double scale) {
    std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
    for (auto& q : c) q = rng.quaternion(scale);
    return c;
}

// ---- identity-suite ---------------------------------------------------------

void emit_check(ExperimentReport& rep, const std::string& name, double observed,
                double limit) {
    const bool pass = rep.check(name, observed, limit);
    rep.row("checks", {name, format_double(observed), format_double(limit),
                       pass ? "1" : "0"});
}

void run_identity_suite(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int n_quad = static_cast<int>(cfg.param("n_quad", 60));
    const int n_triples = static_cast<int>(cfg.param("n_triples", 10000));
    Rng rng(cfg.seed);
    rep.table("checks", "check,observed,limit,pass");

    // Algebra of the scalars: associativity, conjugation reverses products,
    // multiplicativity of the modulus.
    {
        double worst_assoc = 0, worst_conj = 0, worst_mod = 0;
        for (int t = 0; t < n_triples; ++t) {
            const Quaternion a = rng.quaternion(2), b = rng.quaternion(2),
                             c = rng.quaternion(2);
            worst_assoc = std::max(worst_assoc, rel_dev((a * b) * c, a * (b * c)));
            worst_conj = std::max(worst_conj, rel_dev(conj(a * b), conj(b) * conj(a)));
            worst_mod = std::max(worst_mod,
                                 std::abs((a * b).norm() - a.norm() * b.norm()) /
                                     std::max(1.0, a.norm() * b.norm()));
        }
        emit_check(rep, "quaternion-associativity", worst_assoc, 1e-13);
        emit_check(rep, "quaternion-conjugation-antihomomorphism", worst_conj, 1e-13);
        emit_check(rep, "quaternion-modulus-multiplicative", worst_mod, 1e-13);
    }

    // Two independent routes to the slice product agree: the stem route and
    // the slicewise split formula.
    {
        double worst = 0;
        for (int t = 0; t < 1000; ++t) {
            const SliceFunction f = SliceFunction::poly(random_coeffs(rng, 3, 1));
            const SliceFunction g = SliceFunction::poly(random_coeffs(rng, 3, 1));
            const SliceFunction fg = star_product(f, g);
            const ImaginaryUnit I = rng.unit();
            const double x = rng.uniform(-1.5, 1.5), y = rng.uniform(0, 1.5);
            const Quaternion via_stem = fg(from_slice(x, y, I));
            const Quaternion via_split = star_slicewise(f, g, I, Complex{x, y});
            worst = std::max(worst, rel_dev(via_stem, via_split));
        }
        emit_check(rep, "star-product-two-routes", worst, 1e-12);
    }

    // Left product with a constant perpendicular unit conjugates the
    // complex-coefficient factor: (j * H)(z) = conj(H(conj z)) j on the
    // slice whose unit commutes with H's coefficients.
    {
        double worst = 0;
        const ImaginaryUnit I = ImaginaryUnit::i();
        for (int t = 0; t < 40; ++t) {
            std::vector<Quaternion> c(5);
            for (auto& q : c)
                q = embed(Complex{rng.uniform(-1, 1), rng.uniform(-1, 1)}, I);
            const SliceFunction h = SliceFunction::poly(c);
            const SliceFunction jh =
                star_product(SliceFunction::constant(Quaternion::j()), h);
            const double x = rng.uniform(-1.5, 1.5), y = rng.uniform(-1.5, 1.5);
            const Quaternion lhs = jh(from_slice(x, y, I));
            const Quaternion rhs =
                Quaternion::j() * h(from_slice(x, -y, I));
            worst = std::max(worst, rel_dev(lhs, rhs));
        }
        emit_check(rep, "star-left-unit-conjugation", worst, 1e-13);
    }

    // Non-commutativity witness: the constants i and j already fail to
    // commute by 2 in modulus.
    {
        const SliceFunction fi = SliceFunction::constant(Quaternion::i());
        const SliceFunction fj = SliceFunction::constant(Quaternion::j());
        const Quaternion gap = star_product(fi, fj)(Quaternion::one()) -
                               star_product(fj, fi)(Quaternion::one());
        rep.check_at_least("star-noncommutativity-witness", gap.norm(), 0.5);
        rep.row("checks", {"star-noncommutativity-witness", format_double(gap.norm()),
                           "0.5", gap.norm() >= 0.5 ? "1" : "0"});
    }

    // Pointwise product with an intrinsic left factor is the slice product.
    {
        double worst = 0;
        const Symbol h = builtin_symbol("cos_re");
        for (int t = 0; t < 50; ++t) {
            const SliceFunction g = SliceFunction::poly(random_coeffs(rng, 3, 1));
            const SliceFunction hg = star_product(h.fn, g);
            const Quaternion q = rng.quaternion(1.5);
            worst = std::max(worst, rel_dev(hg(q), h.fn(q) * g(q)));
        }
        emit_check(rep, "intrinsic-left-factor-pointwise", worst, 1e-12);
    }

    // Two-point representation: values on one slice pair determine every
    // other slice.
    {
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            const SliceFunction f = SliceFunction::poly(random_coeffs(rng, 4, 1));
            for (int s = 0; s < 3; ++s) {
                const ImaginaryUnit J = rng.unit(), I = rng.unit();
                const double x = rng.uniform(-1.5, 1.5), y = rng.uniform(0, 1.5);
                const Quaternion rebuilt = represent_from_slice(
                    f(from_slice(x, y, J)), f(from_slice(x, -y, J)), J, I);
                worst = std::max(worst, rel_dev(rebuilt, f(from_slice(x, y, I))));
            }
        }
        emit_check(rep, "representation-two-point", worst, 1e-12);
    }

    // Extension from one slice recovers the whole function.
    {
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            const SliceFunction f = SliceFunction::poly(random_coeffs(rng, 4, 1));
            const ImaginaryUnit I = rng.unit();
            const SliceFunction ext = extend_from_slice(
                [&](Complex z) { return f(from_slice(z.real(), z.imag(), I)); }, I);
            for (int s = 0; s < 6; ++s) {
                const Quaternion q = rng.quaternion(1.5);
                worst = std::max(worst, rel_dev(ext(q), f(q)));
            }
        }
        emit_check(rep, "extension-round-trip", worst, 1e-12);
    }

    // Stem parity of constructed functions.
    {
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            const SliceFunction f = SliceFunction::poly(random_coeffs(rng, 4, 1));
            for (double x = -2; x <= 2; x += 0.4)
                for (double y = 0.1; y <= 2; y += 0.4) {
                    worst = std::max(worst, (f.stem_a(x, y) - f.stem_a(x, -y)).norm());
                    worst = std::max(worst, (f.stem_b(x, y) + f.stem_b(x, -y)).norm());
                }
        }
        emit_check(rep, "stem-parity", worst, 1e-13);
    }

    // Intrinsic detection: real-coefficient functions pass all four modes,
    // the constant units fail all four.
    {
        const Symbol good = builtin_symbol("cos_re");
        bool all_true = true, all_false = false;
        for (IntrinsicMode mode : {IntrinsicMode::stem_real, IntrinsicMode::two_slices,
                                   IntrinsicMode::three_conj, IntrinsicMode::one_slice_conj}) {
            all_true = all_true && is_intrinsic(good.fn, mode).intrinsic;
            all_false = all_false ||
                        is_intrinsic(SliceFunction::constant(Quaternion::i()), mode).intrinsic;
        }
        rep.check_true("intrinsic-modes-accept-real-stems", all_true);
        rep.row("checks", {"intrinsic-modes-accept-real-stems", all_true ? "1" : "0", "1",
                           all_true ? "1" : "0"});
        rep.check_true("intrinsic-modes-reject-constant-unit", !all_false);
        rep.row("checks", {"intrinsic-modes-reject-constant-unit", all_false ? "1" : "0",
                           "0", !all_false ? "1" : "0"});
    }

    // Componentwise decomposition against an intrinsic basis.
    {
        const SliceFunction f =
            SliceFunction::constant(Quaternion{1, 1, 2, 3});
        const auto parts =
            intrinsic_basis_decompose(f, ImaginaryUnit::i(), ImaginaryUnit::j());
        double worst = 0;
        for (int s = 0; s < 10; ++s) {
            const Quaternion q = rng.quaternion(1.5);
            const Quaternion rebuilt =
                parts[0](q) + parts[1](q) * Quaternion::i() +
                parts[2](q) * Quaternion::j() + parts[3](q) * Quaternion::k();
            worst = std::max(worst, rel_dev(rebuilt, f(q)));
        }
        emit_check(rep, "intrinsic-basis-decomposition", worst, 1e-12);
    }

    // Kernel identities.
    const KernelContext ctx{alpha, {}};
    {
        double worst = 0;
        for (int t = 0; t < 20; ++t)
            worst = std::max(
                worst, (kernel_eval(ctx, rng.quaternion(2), Quaternion{}) -
                        Quaternion::one())
                           .norm());
        emit_check(rep, "kernel-at-zero", worst, 1e-14);

        worst = 0;
        for (int t = 0; t < 40; ++t) {
            const ImaginaryUnit I = rng.unit();
            const Complex z{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            const Complex w{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
            const Quaternion lhs =
                kernel_eval(ctx, embed(z, I), embed(w, I));
            const Quaternion rhs = embed(std::exp(alpha * z * std::conj(w)), I);
            worst = std::max(worst, rel_dev(lhs, rhs));
        }
        emit_check(rep, "kernel-same-slice-exponential", worst, 1e-12);

        // Cross-slice closed form at unit arguments on perpendicular axes.
        const Quaternion got =
            kernel_scaled(1.0, Quaternion::i(), Quaternion::j());
        const Quaternion expected =
            Quaternion{std::cosh(1.0), 0, 0, -std::sinh(1.0)};
        emit_check(rep, "kernel-cross-slice-closed-form", rel_dev(got, expected), 1e-12);

        worst = 0;
        for (int t = 0; t < 20; ++t) {
            const std::vector<Quaternion> c = random_coeffs(rng, 5, 1);
            const Quaternion z = rng.quaternion(1.2);
            const std::vector<Quaternion> kz = kernel_coeffs(ctx, z, 4.0);
            const Quaternion reproduced = inner_product(c, kz, alpha);
            worst = std::max(worst, rel_dev(reproduced, SliceFunction::poly(c)(z)));
        }
        emit_check(rep, "kernel-reproducing-property", worst, 1e-10);
    }

    // Gaussian moment identity for the modulus of the kernel: the integral
    // against the weight-s Gaussian closes to e^{t^2 |z|^2 / (4 s)}.
    {
        rep.table("kernel-modulus", "t,s,z,quadrature,closed-form,relative-deviation");
        double worst = 0;
        // The rule decay sits below the measure decay s so the nodes cover
        // the linear-in-|w| growth of the kernel modulus; t |z| stays
        // moderate to keep the kernel series short on the node cloud.
        struct Combo {
            double t, s, zr;
        };
        std::vector<Combo> combos;
        for (double t : {1.0, -1.0, 0.5})
            for (double zr : {0.0, 1.0, 2.5}) combos.push_back({t, 1.0, zr});
        for (double t : {2.0, -2.0})
            for (double zr : {0.0, 1.25}) combos.push_back({t, 2.0, zr});
        for (const Combo& c : combos) {
            const GlobalRule rule = global_rule_gaussian(40, 0.8 * c.s, 12);
            const Quaternion z{c.zr, 0, 0, 0};
            const double got = kernel_modulus_integral(c.t, z, c.s, rule);
            const double want = std::exp(c.t * c.t * c.zr * c.zr / (4.0 * c.s));
            const double dev = rel_dev(got, want);
            worst = std::max(worst, dev);
            rep.row("kernel-modulus",
                    {format_double(c.t), format_double(c.s), format_double(c.zr),
                     format_double(got), format_double(want), format_double(dev)});
        }
        emit_check(rep, "kernel-modulus-gaussian-identity", worst, 1e-6);
    }

    // Probability normalization of the Gaussian measures.
    {
        double worst = 0;
        for (double a : {0.5, 1.0, 2.0}) {
            const PlaneRule plane = plane_rule_gaussian(n_quad, a);
            const GlobalRule global{sphere_rule_symmetric(12), plane};
            const Quaternion one = Quaternion::one();
            const Quaternion slice_total = integrate_slice_gaussian(
                plane, a, ImaginaryUnit::i(), [&](const Quaternion&) { return one; });
            const Quaternion vol_total = integrate_volume_gaussian(
                global, a, [&](const Quaternion&) { return one; });
            worst = std::max(worst, (slice_total - one).norm());
            worst = std::max(worst, (vol_total - one).norm());
        }
        emit_check(rep, "gaussian-measure-normalization", worst, 1e-8);
    }

    // Monomial norms: quadrature against the factorial formula.
    {
        double worst = 0;
        const PlaneRule plane = plane_rule_gaussian(n_quad, alpha);
        for (int n = 0; n <= 5; ++n) {
            std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
            c.back() = Quaternion::one();
            const double via_quad = slice_p_norm(SliceFunction::poly(c), 2.0, alpha,
                                                 ImaginaryUnit::i(), plane);
            worst = std::max(worst,
                             rel_dev(via_quad * via_quad, monomial_norm_sq(alpha, n)));
        }
        emit_check(rep, "monomial-norm-factorial", worst, 1e-10);
    }

    // Global and slice 2-norms agree for slice functions that are not
    // intrinsic, and the polarized inner product matches the coefficient
    // route.
    {
        double worst_iso = 0, worst_pol = 0;
        const PlaneRule plane = plane_rule_gaussian(n_quad, alpha);
        const GlobalRule global{sphere_rule_symmetric(12), plane};
        for (int t = 0; t < 5; ++t) {
            const std::vector<Quaternion> c = random_coeffs(rng, 4, 1);
            const SliceFunction f = SliceFunction::poly(c);
            const double g2 = global_p_norm(f, 2.0, alpha, global);
            const double s2 = slice_p_norm(f, 2.0, alpha, ImaginaryUnit::j(), plane);
            worst_iso = std::max(worst_iso, rel_dev(g2, s2));
            const std::vector<Quaternion> d = random_coeffs(rng, 4, 1);
            worst_pol = std::max(worst_pol, rel_dev(inner_product_polarized(c, d, alpha),
                                                    inner_product(c, d, alpha)));
        }
        emit_check(rep, "global-slice-isometry", worst_iso, 1e-10);
        emit_check(rep, "polarization-identity", worst_pol, 1e-12);
    }

    // Pointwise growth bounds: the 2-norm bound with constant 1 and the
    // p-norm bound with constant 4.
    {
        std::vector<Quaternion> samples;
        for (int t = 0; t < 30; ++t) samples.push_back(rng.quaternion(1.5));
        double worst2 = 0;
        for (int t = 0; t < 5; ++t) {
            const auto c = random_coeffs(rng, 4, 1);
            worst2 = std::max(worst2, pointwise_bound_check(c, alpha, samples).worst_ratio);
        }
        emit_check(rep, "pointwise-bound-two-norm", worst2, 1.0 + 1e-9);

        const GlobalRule global{sphere_rule_symmetric(12), plane_rule_gaussian(n_quad, alpha)};
        double worst_p = 0;
        for (double p : {1.0, 2.0, 4.0}) {
            const SliceFunction f = SliceFunction::poly(random_coeffs(rng, 3, 1));
            worst_p = std::max(
                worst_p, pointwise_bound_check(f, p, alpha, global, samples).worst_ratio);
            worst_p = std::max(worst_p,
                               pointwise_bound_check(gaussian_monomial(0.5, 2), p, alpha,
                                                     global, samples)
                                   .worst_ratio);
        }
        emit_check(rep, "pointwise-bound-p-norm-constant-4", worst_p, 4.0);
    }

    // Box averages of real symbols: the rotation-body average equals the
    // per-slice disk average, with the closed forms for the constant, the
    // squared modulus at the origin, and the real part at a real center.
    {
        const SphereRule sphere = sphere_rule_symmetric(12);
        const double r = 1.3;
        const BoxSpec at_origin{0, 0, 1.0};
        const BoxSpec real_center{1.5, 0, r};
        const BoxSpec off_axis{1.0, 1.0, r};

        const Quaternion vol_const =
            volume_box_integral(SliceFunction::constant(Quaternion::one()), real_center,
                                200, 64, sphere);
        emit_check(rep, "box-average-constant",
                   rel_dev(vol_const, Quaternion{M_PI * r * r, 0, 0, 0}), 1e-10);

        const Symbol abs2 = builtin_symbol("abs2");
        const Quaternion vol_abs2 =
            volume_box_integral(abs2.fn, at_origin, 200, 64, sphere);
        emit_check(rep, "box-average-squared-modulus",
                   rel_dev(vol_abs2, Quaternion{M_PI / 2.0, 0, 0, 0}), 1e-4);

        const Symbol re = builtin_symbol("re");
        const Quaternion vol_re =
            volume_box_integral(re.fn, real_center, 200, 64, sphere);
        emit_check(rep, "box-average-real-part",
                   rel_dev(vol_re, Quaternion{M_PI * r * r * 1.5, 0, 0, 0}), 1e-10);

        const Quaternion vol_off = volume_box_integral(abs2.fn, off_axis, 96, 48, sphere);
        const Quaternion slice_off =
            slice_disk_integral(abs2.fn, off_axis, 96, 48, ImaginaryUnit::j());
        emit_check(rep, "box-average-matches-slice-disk", rel_dev(vol_off, slice_off),
                   1e-12);
    }
}

// ---- probe-projection -------------------------------------------------------

// |f_{x,k}| as a slice function (radial, so the modulus is slice-stable).
SliceFunction abs_gaussian_monomial(double x, int k) {
    return SliceFunction::from_stem(
        Stem{[x, k](double a, double b) {
                 const double r2 = a * a + b * b;
                 return Quaternion{std::pow(r2, 0.5 * k) * std::exp(-x * r2), 0, 0, 0};
             },
             [](double, double) { return Quaternion{}; }},
        FnTag::intrinsic);
}

void run_probe_projection(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int n_quad = static_cast<int>(cfg.param("n_quad", 64));
    const int k_max = static_cast<int>(cfg.param("k_max", 8));

    // Closed-form ratio table over the six-case parameter grid: the ratio
    // sequences stay bounded in k exactly on the balance line
    // p * alpha = 2 * beta and blow up geometrically off it.
    struct Case {
        double p, alpha, beta;
        bool balanced;
    };
    const std::vector<Case> cases = {{2, 1, 1, true},  {1, 2, 1, true},  {4, 1, 2, true},
                                     {1, 3, 1, false}, {2, 3, 1, false}, {4, 1, 1, false}};
    const std::vector<double> xs = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
    std::vector<int> ks;
    for (int k = 0; k <= k_max; ++k) ks.push_back(k);

    rep.table("ratios", "p,alpha,beta,k,x,ratio");
    for (const Case& c : cases) {
        const ThresholdReport tr = threshold_probe(c.p, c.alpha, c.beta, xs, ks);
        for (const ThresholdRow& row : tr.rows)
            rep.row("ratios", {format_double(c.p), format_double(c.alpha),
                               format_double(c.beta), format_double(row.k),
                               format_double(row.x), format_double(row.ratio)});
        std::string name = "bounded-verdict-p" + format_double(c.p) + "-a" +
                           format_double(c.alpha) + "-b" + format_double(c.beta);
        rep.check_true(name, tr.bounded == c.balanced);
        rep.note(name + "-max-growth", format_double(tr.max_growth));
    }

    // Quadrature projection of the probes against the closed form
    // (alpha/(alpha+x))^{k+1} z^k.
    rep.table("projection-formula", "x,k,coefficient-deviation,offdiagonal-mass");
    const GlobalRule rule{sphere_rule_symmetric(12), plane_rule_gaussian(n_quad, alpha)};
    double worst_coeff = 0;
    for (double x : {0.5, 1.0, 2.0}) {
        for (int k = 0; k <= 6; ++k) {
            const SliceFunction f = gaussian_monomial(x, k);
            const std::vector<Quaternion> c = project_coeffs(f, alpha, rule, k + 3);
            const double expected = std::pow(alpha / (alpha + x), k + 1);
            double dev = std::abs(c[static_cast<std::size_t>(k)].x0 - expected);
            dev = std::max(dev, std::abs(c[static_cast<std::size_t>(k)].x1));
            double off = 0;
            for (int n = 0; n < static_cast<int>(c.size()); ++n)
                if (n != k) off = std::max(off, c[static_cast<std::size_t>(n)].norm());
            worst_coeff = std::max(worst_coeff, std::max(dev, off));
            rep.row("projection-formula", {format_double(x), format_double(k),
                                           format_double(dev), format_double(off)});
        }
    }
    rep.check("projection-closed-form", worst_coeff, 1e-7);

    // Norm bound: the projection at the balance point beta = alpha never
    // more than doubles the probe norms (closed forms on both sides).
    rep.table("norm-bound", "p,x,k,ratio");
    double worst_ratio = 0;
    for (double p : {1.0, 2.0, 4.0}) {
        for (double x : {0.5, 1.0, 2.0}) {
            for (int k = 0; k <= 3; ++k) {
                const double ratio = probe_ratio(x, k, p, alpha, alpha);
                worst_ratio = std::max(worst_ratio, ratio);
                rep.row("norm-bound", {format_double(p), format_double(x),
                                       format_double(k), format_double(ratio)});
            }
        }
    }
    rep.check("projection-norm-bound-2", worst_ratio, 2.0);

    // One quadrature cross-check of the closed-form norms; the rule decay
    // matches the full integrand decay 2x + p alpha / 2, so the rule is
    // exact up to rounding.
    {
        const PlaneRule plane = plane_rule_gaussian(n_quad, 2.0 + alpha);
        const double via_quad =
            slice_p_norm(gaussian_monomial(1.0, 2), 2.0, alpha, ImaginaryUnit::i(), plane);
        const double closed = probe_norm(1.0, 2, 2.0, alpha);
        rep.check("probe-norm-closed-form", rel_dev(via_quad, closed), 1e-8);
    }

    // The modulus companion dominates the projection pointwise.
    {
        double worst = 0;
        for (double x : {0.5, 2.0}) {
            for (int k : {0, 2}) {
                for (double zr : {0.0, 0.8, 1.5}) {
                    const Quaternion z = from_slice(zr, 0.4, ImaginaryUnit::i());
                    const double proj_mod =
                        std::pow(alpha / (alpha + x), k + 1) * std::pow(z.norm(), k);
                    const Quaternion dominated =
                        apply_modulus_operator(abs_gaussian_monomial(x, k), alpha, z, rule);
                    if (dominated.x0 > 0)
                        worst = std::max(worst, proj_mod / dominated.x0);
                }
            }
        }
        rep.check("modulus-operator-dominates", worst, 1.0 + 1e-9);
    }
}

// ---- schur ------------------------------------------------------------------

void run_schur(const RunConfig& cfg, ExperimentReport& rep) {
    const int n_quad = static_cast<int>(cfg.param("n_quad", 48));
    struct Triple {
        double p, alpha, beta;
    };
    const std::vector<Triple> triples = {{2, 1, 1}, {1, 2, 1}, {4, 1, 2}};

    std::vector<Quaternion> samples = {Quaternion{0.3, 0, 0, 0},
                                       Quaternion{1.1, 0, 0, 0},
                                       from_slice(0.5, 0.7, ImaginaryUnit::i()),
                                       from_slice(-0.4, 0.9, ImaginaryUnit::j())};

    rep.table("constants",
              "p,alpha,beta,delta,constant-first,constant-second,"
              "real-axis-deviation,off-axis-worst-ratio");
    rep.table("samples",
              "p,alpha,beta,sample-real-part,sample-imaginary-norm,on-real-axis,"
              "quadrature-over-closed-form-first,quadrature-over-closed-form-second");
    const GlobalRule rule{sphere_rule_symmetric(12), plane_rule_gaussian(n_quad, 0.4)};
    double worst_const = 0, worst_real = 0, worst_off = 0;
    for (const Triple& t : triples) {
        const SchurReport sr = schur_verify(t.p, t.alpha, t.beta, samples, rule);
        rep.row("constants",
                {format_double(t.p), format_double(t.alpha), format_double(t.beta),
                 format_double(sr.delta), format_double(sr.constant_first),
                 format_double(sr.constant_second), format_double(sr.real_axis_dev),
                 format_double(sr.off_axis_ratio)});
        for (const SchurSample& row : sr.rows)
            rep.row("samples",
                    {format_double(t.p), format_double(t.alpha), format_double(t.beta),
                     format_double(row.point.x0), format_double(row.point.im_norm()),
                     row.real_axis ? "1" : "0", format_double(row.ratio_first),
                     format_double(row.ratio_second)});
        worst_const = std::max(worst_const, std::abs(sr.constant_first - 2.0));
        worst_const = std::max(worst_const, std::abs(sr.constant_second - 2.0));
        worst_real = std::max(worst_real, sr.real_axis_dev);
        worst_off = std::max(worst_off, sr.off_axis_ratio);
    }
    rep.check("schur-constants-equal-2", worst_const, 1e-9);
    rep.check("schur-real-axis-matches-closed-form", worst_real, 1e-6);
    // Off the real axis the slice-averaged kernel modulus exceeds the
    // closed form; the ratios are recorded data, kept inside an envelope.
    rep.check_at_least("schur-off-axis-ratio-exceeds-one", worst_off, 1.0);
    rep.check("schur-off-axis-ratio-within-envelope", worst_off, 1.5);
}

// ---- range-preimage ---------------------------------------------------------

void run_range_preimage(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const double beta = cfg.param("beta", 0.5);
    const int n_quad = static_cast<int>(cfg.param("n_quad", 70));
    Rng rng(cfg.seed);

    const double gamma = range_parameter(alpha, beta);
    rep.note("gamma", format_double(gamma));
    if (std::abs(alpha - 1.0) < 1e-15 && std::abs(beta - 0.5) < 1e-15)
        rep.check("range-parameter-closed-form", std::abs(gamma - 2.0 / 3.0), 1e-15);

    const GlobalRule rule{sphere_rule_symmetric(12), plane_rule_gaussian(n_quad, 1.0)};
    rep.table("round-trip", "target,degree,coefficient-deviation");

    double worst = 0;
    // Monomial targets, then a random polynomial.
    for (int n = 0; n <= 5; ++n) {
        std::vector<Quaternion> target(static_cast<std::size_t>(n) + 1);
        target.back() = Quaternion::one();
        const SliceFunction g = range_preimage(target, alpha, beta);
        const std::vector<Quaternion> back = project_coeffs(g, alpha, rule, n + 2);
        double dev = 0;
        for (std::size_t m = 0; m < back.size(); ++m) {
            const Quaternion want = m < target.size() ? target[m] : Quaternion{};
            dev = std::max(dev, (back[m] - want).norm());
        }
        worst = std::max(worst, dev);
        rep.row("round-trip", {"monomial", format_double(n), format_double(dev)});
    }
    {
        const std::vector<Quaternion> target = random_coeffs(rng, 4, 0.8);
        const SliceFunction g = range_preimage(target, alpha, beta);
        const std::vector<Quaternion> back = project_coeffs(g, alpha, rule, 6);
        double dev = 0;
        for (std::size_t m = 0; m < back.size(); ++m) {
            const Quaternion want = m < target.size() ? target[m] : Quaternion{};
            dev = std::max(dev, (back[m] - want).norm());
        }
        worst = std::max(worst, dev);
        rep.row("round-trip", {"random-poly", "4", format_double(dev)});
    }
    rep.check("range-round-trip", worst, 1e-7);
}

}  // namespace

std::vector<ExperimentSpec> core_experiments() {
    return {
        {"identity-suite",
         "algebra, slice-product, kernel, norm, and box-average identities in one table",
         {"alpha", "n_quad", "n_triples"},
         {},
         &run_identity_suite},
        {"probe-projection",
         "projection of the Gaussian-monomial probe bank: ratio table and threshold verdicts",
         {"alpha", "n_quad", "k_max"},
         {},
         &run_probe_projection},
        {"schur",
         "Schur-test certificate: both closed-form constants equal 2 on the balance line",
         {"n_quad"},
         {},
         &run_schur},
        {"range-preimage",
         "explicit preimage construction and coefficient-exact projection round trip",
         {"alpha", "beta", "n_quad"},
         {},
         &run_range_preimage},
    };
}

}  // namespace qfock
