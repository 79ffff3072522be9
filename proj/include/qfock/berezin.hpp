#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Probability rule for the centered Gaussian (alpha/pi) e^{-alpha|u|^2} dm:
// sum_k w[k] g(dx[k], dy[k]) approximates the Gaussian average of g.
// Weights sum to one.
struct ConvRule {
    std::vector<double> dx, dy, w;
    double alpha = 0.0;
    std::size_t size() const { return dx.size(); }
};

ConvRule conv_rule(int n, double alpha);

// Gaussian smoothing of a slice function, taken stem by stem:
//   (Tf)(x + yI) = (alpha/pi) * integral e^{-alpha|w-z|^2} f(w) dm(w)
// over the slice plane of I with z = x + yI.  The result is again a slice
// function (one pair of smoothed stems serves every slice) and inherits
// intrinsicness.
SliceFunction berezin(const SliceFunction& f, double alpha, int n_nodes);

Quaternion berezin_at(const SliceFunction& f, double alpha, const Quaternion& z,
                      const ConvRule& rule);

// Same smoothing for a scalar field restricted to the slice of I (used for
// quantities like |f|^p that need not be slice functions; z in slice
// coordinates).  Integration runs over the full plane of the slice.
double berezin_scalar_slice(const std::function<double(const Quaternion&)>& g,
                            const ImaginaryUnit& I, std::complex<double> z,
                            const ConvRule& rule);

// Smoothing at parameter a then b collapses to a single smoothing at
// ab/(a+b) (Gaussian variances add).  Checks the identity at sample
// points; worst absolute gap is reported.
struct SemigroupReport {
    double combined_alpha = 0.0;
    double worst_gap = 0.0;
    Quaternion witness{};
};

SemigroupReport semigroup_check(const SliceFunction& f, double a, double b,
                                const std::vector<Quaternion>& samples,
                                int n_nodes);

// n-fold iterate.  Variances add, so the n-th iterate at parameter alpha
// is a single smoothing at alpha/n; exposed that way to keep the cost flat
// in n.  (semigroup_check certifies the collapse once per run.)
SliceFunction berezin_iterate(const SliceFunction& f, double alpha, int n_iter,
                              int n_nodes);

// Contraction probe for the iterates of a bounded function:
//   |T^n f(z) - T^n f(w)| <= sqrt(2) * (2 sqrt(alpha/pi)) / sqrt(n) * sup|f| * |z-w|.
// Returns the worst observed quotient (observed gap over the bound); values
// <= 1 certify the inequality on the sample.
struct LipschitzReport {
    double bound_constant = 0.0;  // sqrt(2) * 2 sqrt(alpha/pi) * sup|f|
    double worst_quotient = 0.0;
    int worst_iter = 0;
};

LipschitzReport lipschitz_probe(const SliceFunction& f, double alpha,
                                double sup_norm,
                                const std::vector<int>& iteration_counts,
                                const std::vector<std::pair<Quaternion, Quaternion>>& pairs,
                                int n_nodes);

// Slice Laplacian (second derivatives in the slice coordinates), evaluated
// with a centered 5-point stencil of step h.
Quaternion slice_laplacian(const SliceFunction& f, const Quaternion& z, double h);

// Fixed-point study.  Cases:
//  - affine-harmonic stems (Re z, x^2 - y^2): smoothing fixes them and the
//    slice Laplacian vanishes;
//  - |z|^2: not fixed, shifted by exactly 1/alpha;
//  - the slice extension of e^{ax+by} with a = b = sqrt(2 alpha pi)(1+I):
//    fixed by the smoothing although its slice Laplacian is 8 alpha pi I f,
//    so fixed points are strictly more than the slice-harmonic class.
struct FixedPointCase {
    std::string name;
    double residual = 0.0;        // sup |Tf - expected| over samples
    double laplacian_norm = 0.0;  // sup |slice Laplacian| over samples
    bool fixed_expected = true;
};

std::vector<FixedPointCase> fixed_point_suite(double alpha, int n_nodes,
                                              const std::vector<Quaternion>& samples);

// The exponential fixed point above, as a slice function.
SliceFunction exponential_fixed_point(double alpha, const ImaginaryUnit& I);

// Integrability gate for the smoothing: the slice integral
//   integral over C_I of |K(w,z)|^2 |f(w)|^p dlambda_alpha(w)
// evaluated at nested node counts; the relative step between the two is
// reported so tests can require stabilization.
struct IntegrabilityProbe {
    double value = 0.0;
    double relative_step = 0.0;
};

IntegrabilityProbe condition_integrable_probe(const SliceFunction& f, double p,
                                              double alpha, const Quaternion& z,
                                              int n_nodes);

}  // namespace qfock
