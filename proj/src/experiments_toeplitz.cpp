#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qfock/berezin.hpp"
#include "qfock/experiments.hpp"
#include "qfock/fock.hpp"
#include "qfock/measure.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/symbols.hpp"
#include "qfock/toeplitz.hpp"

namespace qfock {

namespace {

// ---- toeplitz ---------------------------------------------------------------

void run_toeplitz(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int n_quad = static_cast<int>(cfg.param("n_quad", 64));
    const ImaginaryUnit I = ImaginaryUnit::i();

    // Closed-form matrices.
    rep.table("closed-forms", "case,deviation");
    {
        // Gaussian symbol: diagonal geometric sequence.
        const int N = 12;
        const QuatMatrix m = toeplitz_matrix(builtin_symbol("gauss").fn, alpha, N, I, n_quad);
        QuatMatrix want(N + 1, N + 1);
        for (int n = 0; n <= N; ++n)
            want.at(n, n) = Quaternion{std::pow(alpha / (alpha + 1.0), n + 1)};
        const double dev = m.max_abs_diff(want);
        rep.row("closed-forms", {"gaussian-diagonal", format_double(dev)});
        rep.check("gaussian-diagonal", dev, 1e-9);
    }
    {
        // Squared-modulus symbol: diagonal (n+1)/alpha.
        const int N = 10;
        const QuatMatrix m = toeplitz_matrix(builtin_symbol("abs2").fn, alpha, N, I, n_quad);
        QuatMatrix want(N + 1, N + 1);
        for (int n = 0; n <= N; ++n) want.at(n, n) = Quaternion{(n + 1) / alpha};
        const double dev = m.max_abs_diff(want);
        rep.row("closed-forms", {"squared-modulus-diagonal", format_double(dev)});
        rep.check("squared-modulus-diagonal", dev, 1e-8);
    }
    {
        // Real-part symbol: symmetric tridiagonal with entries
        // (1/2) sqrt((n+1)/alpha).
        const int N = 10;
        const QuatMatrix m = toeplitz_matrix(builtin_symbol("re").fn, alpha, N, I, n_quad);
        QuatMatrix want(N + 1, N + 1);
        for (int n = 0; n < N; ++n) {
            const double v = 0.5 * std::sqrt((n + 1) / alpha);
            want.at(n + 1, n) = Quaternion{v};
            want.at(n, n + 1) = Quaternion{v};
        }
        const double dev = m.max_abs_diff(want);
        rep.row("closed-forms", {"real-part-tridiagonal", format_double(dev)});
        rep.check("real-part-tridiagonal", dev, 1e-8);
    }
    {
        // Constant perpendicular unit: diagonal with the unit itself.
        const int N = 10;
        const QuatMatrix m =
            toeplitz_matrix(builtin_symbol("const_j").fn, alpha, N, I, n_quad);
        QuatMatrix want(N + 1, N + 1);
        for (int n = 0; n <= N; ++n) want.at(n, n) = Quaternion::j();
        const double dev = m.max_abs_diff(want);
        rep.row("closed-forms", {"constant-unit-diagonal", format_double(dev)});
        rep.check("constant-unit-diagonal", dev, 1e-9);
    }

    // Norm bound ||T_f|| <= sqrt(2) sup|f| for all bounded stock symbols.
    rep.table("norms", "symbol,N,operator-norm,sup-bound,ratio");
    double worst_ratio = 0;
    for (const std::string& name : bounded_builtin_names()) {
        const Symbol sym = builtin_symbol(name);
        for (int N : {8, 16}) {
            const double norm = operator_norm(toeplitz_matrix(sym.fn, alpha, N, I, n_quad));
            const double bound = std::sqrt(2.0) * sym.sup_norm;
            worst_ratio = std::max(worst_ratio, norm / bound);
            rep.row("norms", {name, format_double(N), format_double(norm),
                              format_double(bound), format_double(norm / bound)});
        }
    }
    rep.check("norm-bound-sqrt2", worst_ratio, 1.0 + 1e-9);

    // Unbounded control: the real-part operator norm keeps growing with N.
    {
        const SliceFunction re = builtin_symbol("re").fn;
        const double n8 = operator_norm(toeplitz_matrix(re, alpha, 8, I, n_quad));
        const double n32 = operator_norm(toeplitz_matrix(re, alpha, 32, I, n_quad));
        rep.row("norms", {"re", "8", format_double(n8), "unbounded", ""});
        rep.row("norms", {"re", "32", format_double(n32), "unbounded", ""});
        rep.check_at_least("real-part-norm-growth", n32 / n8, 1.5);
    }

    // Nonnegative symbols give positive semidefinite matrices.
    {
        double min_eig = 1e300;
        for (const std::string name :
             {"const_one", "bump", "gauss", "step_smooth"}) {
            const QuatMatrix m =
                toeplitz_matrix(builtin_symbol(name).fn, alpha, 12, I, n_quad);
            const Eigen::MatrixXcd c = complex_image(m);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
                0.5 * (c + c.adjoint()));
            min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
        }
        rep.check_at_least("nonnegative-symbol-psd", min_eig, -1e-9);
    }

    // A positive density and the discrete measure built from its
    // quadrature atoms give the same matrix.
    {
        const int N = 12;
        const SliceFunction g = builtin_symbol("gauss").fn;
        const QuatMatrix dens = toeplitz_matrix(g, alpha, N, I, n_quad);
        const PlaneRule rule = plane_rule_gaussian(60, alpha + 1.0);
        DiscreteMeasure mu;
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const double x = rule.x[k], y = rule.y[k];
            Atom a;
            a.x = x;
            a.y = std::abs(y);
            a.unit = y < 0 ? -I : I;
            a.weight = (alpha / M_PI) * rule.w[k] *
                       g(from_slice(x, y, I)).x0;
            mu.atoms.push_back(a);
        }
        const QuatMatrix disc = toeplitz_matrix_measure(mu, alpha, N);
        const double dev = dens.max_abs_diff(disc);
        rep.check("measure-density-consistency", dev, 1e-9);

        // The quadratic form of the measure operator is nonnegative.
        Rng rng(cfg.seed);
        double min_q = 1e300;
        for (int t = 0; t < 10; ++t) {
            std::vector<Quaternion> v(static_cast<std::size_t>(N) + 1);
            for (auto& q : v) q = rng.quaternion(1.0);
            min_q = std::min(min_q, measure_quadratic_form(mu, alpha, v));
        }
        rep.check_at_least("measure-quadratic-form-nonnegative", min_q, 0.0);
    }

    // Right-unit factorization: the operator of (intrinsic h) * J is the
    // operator of h followed by the right-multiplication intertwiner.
    {
        const int N = 10;
        const SliceFunction h = builtin_symbol("cos_re").fn;
        const SliceFunction hj =
            star_product(h, SliceFunction::constant(Quaternion::j()));
        const QuatMatrix lhs = toeplitz_matrix(hj, alpha, N, I, n_quad);
        const QuatMatrix rhs = toeplitz_matrix(h, alpha, N, I, n_quad) *
                               slice_isometry_matrix(ImaginaryUnit::j(), N);
        rep.check("right-unit-factorization", lhs.max_abs_diff(rhs), 1e-10);
    }

    // Quadratic form against the normalized kernel matches the closed form
    // for the Gaussian symbol: (alpha/(alpha+1)) e^{-alpha|z|^2/(alpha+1)}.
    {
        const int N = 16;
        const QuatMatrix m = toeplitz_matrix(builtin_symbol("gauss").fn, alpha, N, I, n_quad);
        rep.table("kernel-symbol", "y,quadratic-form,closed-form,deviation");
        double worst = 0;
        for (double t : {0.0, 0.4, 0.8, 1.2}) {
            const Quaternion z = from_slice(0.3, t, ImaginaryUnit::k());
            const double got = berezin_symbol(m, alpha, z).x0;
            const double want = (alpha / (alpha + 1.0)) *
                                std::exp(-alpha * z.norm_sq() / (alpha + 1.0));
            worst = std::max(worst, std::abs(got - want));
            rep.row("kernel-symbol", {format_double(t), format_double(got),
                                      format_double(want),
                                      format_double(std::abs(got - want))});
        }
        rep.check("kernel-quadratic-form-gaussian", worst, 1e-8);
    }
}

// ---- toeplitz-adjoint -------------------------------------------------------

void run_toeplitz_adjoint(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int N = static_cast<int>(cfg.param("N", 12));
    const int n_quad = static_cast<int>(cfg.param("n_quad", 64));
    const ImaginaryUnit I = ImaginaryUnit::i();

    rep.table("adjoint-pairs", "symbol,deviation");
    double worst = 0;
    auto pair_check = [&](const std::string& name, const SliceFunction& f) {
        const QuatMatrix direct = toeplitz_matrix(f, alpha, N, I, n_quad);
        const QuatMatrix via_symbol =
            toeplitz_matrix(adjoint_symbol(f, I), alpha, N, I, n_quad);
        const double dev = via_symbol.max_abs_diff(direct.adjoint());
        worst = std::max(worst, dev);
        rep.row("adjoint-pairs", {name, format_double(dev)});
    };
    pair_check("const_i", builtin_symbol("const_i").fn);
    pair_check("const_j", builtin_symbol("const_j").fn);
    pair_check("const_k", builtin_symbol("const_k").fn);
    pair_check("re", builtin_symbol("re").fn);
    pair_check("cos_re", builtin_symbol("cos_re").fn);
    pair_check("linear-j",
               SliceFunction::poly({Quaternion{}, Quaternion::j()}));
    if (!cfg.input("symbol").empty())
        pair_check("input", load_symbol_file(cfg.input("symbol")).fn);
    rep.check("adjoint-symbol-matrix-agreement", worst, 1e-8);

    // The adjoint is an involution at the symbol level.
    {
        const SliceFunction f = builtin_symbol("const_j").fn;
        const SliceFunction ff = adjoint_symbol(adjoint_symbol(f, I), I);
        double dev = 0;
        Rng rng(cfg.seed);
        for (int t = 0; t < 10; ++t) {
            const Quaternion z = rng.quaternion(1.5);
            dev = std::max(dev, (ff(z) - f(z)).norm());
        }
        rep.check("adjoint-involution", dev, 1e-12);
    }

    // Kernel quadratic forms: for an intrinsic symbol they reproduce the
    // Gaussian smoothing of the symbol; for the constant perpendicular
    // unit they drift away from the constant by e^{alpha(z^2 - |z|^2)}.
    {
        rep.table("berezin-gap", "symbol,y,gap");
        const SliceFunction cosre = builtin_symbol("cos_re").fn;
        const QuatMatrix mc = toeplitz_matrix(cosre, alpha, N, I, n_quad);
        const ConvRule rule = conv_rule(48, alpha);
        double worst_intrinsic = 0;
        for (double t : {0.0, 0.6, 1.2}) {
            const Quaternion z = from_slice(0.4, t, I);
            const double gap =
                (berezin_symbol(mc, alpha, z) - berezin_at(cosre, alpha, z, rule)).norm();
            worst_intrinsic = std::max(worst_intrinsic, gap);
            rep.row("berezin-gap", {"cos_re", format_double(t), format_double(gap)});
        }
        rep.check("intrinsic-kernel-form-matches-smoothing", worst_intrinsic, 1e-6);

        const QuatMatrix mj =
            toeplitz_matrix(builtin_symbol("const_j").fn, alpha, N, I, n_quad);
        double worst_j = 0, gap_at_1 = 0;
        for (double y : {0.0, 0.5, 1.0}) {
            const Quaternion z = from_slice(0.0, y, I);
            const Quaternion got = berezin_symbol(mj, alpha, z);
            const Quaternion want =
                std::exp(-2.0 * alpha * y * y) * Quaternion::j();
            worst_j = std::max(worst_j, (got - want).norm());
            const double gap = (got - Quaternion::j()).norm();
            if (y == 1.0) gap_at_1 = gap;
            rep.row("berezin-gap", {"const_j", format_double(y), format_double(gap)});
        }
        rep.check("unit-kernel-form-closed-form", worst_j, 1e-6);
        rep.check_at_least("unit-kernel-form-gap", gap_at_1, 0.1);
    }
}

// ---- bounded-compact --------------------------------------------------------

void run_bounded_compact(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const int N = static_cast<int>(cfg.param("N", 12));
    const int n_quad = static_cast<int>(cfg.param("n_quad", 56));

    struct Expected {
        std::string name;
        bool bounded;
        bool compact;
    };
    const std::vector<Expected> stock = {
        {"const_one", true, false}, {"cos_re", true, false},
        {"step_smooth", true, false}, {"sawtooth", true, false},
        {"bump", true, true},        {"gauss", true, true},
        {"re", false, false},        {"abs2", false, false},
    };

    rep.table("probe",
              "symbol,norm-small,norm-large,norm-growth,berezin-sup,"
              "image-near,image-far,image-decay,tail-fraction,"
              "bounded,compact,expected-bounded,expected-compact");

    for (const Expected& e : stock) {
        const SymbolProbe p =
            probe_symbol(e.name, builtin_symbol(e.name).fn, alpha, N,
                         ImaginaryUnit::i(), n_quad);
        rep.row("probe",
                {p.name, format_double(p.norm_small), format_double(p.norm_large),
                 format_double(p.norm_growth), format_double(p.berezin_sup),
                 format_double(p.kernel_image_near), format_double(p.kernel_image_far),
                 format_double(p.kernel_image_decay),
                 format_double(p.tail_singular_fraction),
                 p.bounded_verdict ? "1" : "0", p.compact_verdict ? "1" : "0",
                 e.bounded ? "1" : "0", e.compact ? "1" : "0"});
        rep.check_true("bounded-verdict-" + e.name, p.bounded_verdict == e.bounded);
        rep.check_true("compact-verdict-" + e.name, p.compact_verdict == e.compact);
    }
}

}  // namespace

std::vector<ExperimentSpec> toeplitz_experiments() {
    return {
        {"toeplitz",
         "multiply-then-project matrices: closed forms, norm bounds, positivity, "
         "measure consistency",
         {"alpha", "n_quad"},
         {},
         &run_toeplitz},
        {"toeplitz-adjoint",
         "adjoint symbols at the matrix level and kernel quadratic-form gaps",
         {"alpha", "N", "n_quad"},
         {"symbol"},
         &run_toeplitz_adjoint},
        {"bounded-compact",
         "norm-growth and kernel-image verdicts for a stock of symbols",
         {"alpha", "N", "n_quad"},
         {},
         &run_bounded_compact},
    };
}

}  // namespace qfock
