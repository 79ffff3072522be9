#pragma once

#include <vector>

#include "qfock/fock.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Orthogonal projection onto the entire-series subspace: coefficients
//   c_n = alpha^n / n! * integral over H of conj(w)^n f(w) dlambda_alpha(w)
// recovered by volume quadrature up to max_degree.
std::vector<Quaternion> project_coeffs(const SliceFunction& f, double alpha,
                                       const GlobalRule& rule, int max_degree);

SliceFunction apply_projection(const SliceFunction& f, double alpha,
                               const GlobalRule& rule, int max_degree);

// Companion positive operator: same integral with the kernel replaced by
// its modulus, evaluated pointwise.
Quaternion apply_modulus_operator(const SliceFunction& f, double alpha,
                                  const Quaternion& z, const GlobalRule& rule,
                                  const SeriesPolicy& policy = {});

// Integral of |series exponential at scale t| against the Gaussian
// probability measure of parameter s; closed form e^{t^2 |z|^2 / (4 s)}.
double kernel_modulus_integral(double t, const Quaternion& z, double s,
                               const GlobalRule& rule,
                               const SeriesPolicy& policy = {});

// ---- projection probe bank -------------------------------------------------
//
// Probe family f_{x,k}(w) = w^k e^{-x |w|^2} (x >= 0).  Everything about
// how the projection treats these is in closed form:
//   P f_{x,k} = (alpha/(alpha+x))^{k+1} z^k,
//   ||f_{x,k}||_{p,beta}^p = beta Gamma(pk/2+1) / (p x + beta)^{pk/2+1},
// so the norm ratio after projection factorizes as A(x) * g(x)^k with
//   g(x) = alpha/(alpha+x) * sqrt(1 + p x / beta).
// g stays <= 1 for all x >= 0 exactly on the balance line p*alpha = 2*beta
// and exceeds 1 on a window of x when p*alpha > 2*beta, which is what the
// threshold probe detects.

SliceFunction gaussian_monomial(double x, int k);

double probe_norm(double x, int k, double p, double beta);
double probe_projected_norm(double x, int k, double p, double alpha, double beta);
double probe_ratio(double x, int k, double p, double alpha, double beta);
double probe_growth_factor(double x, double p, double alpha, double beta);

struct ThresholdRow {
    double x = 0.0;
    int k = 0;
    double ratio = 0.0;
    double growth = 0.0;  // ratio at k+1 over ratio at k (independent of k)
};

struct ThresholdReport {
    double p = 0.0, alpha = 0.0, beta = 0.0;
    std::vector<ThresholdRow> rows;
    double max_growth = 0.0;
    bool bounded = true;  // max_growth below the detection threshold
    double threshold = 1.02;
};

ThresholdReport threshold_probe(double p, double alpha, double beta,
                                const std::vector<double>& xs,
                                const std::vector<int>& ks,
                                double threshold = 1.02);

// ---- adjoint ----------------------------------------------------------------
//
// Adjoint of the projection against the dual pairing of L^p(dlambda_beta):
//   P^* g(z) = (alpha/beta) e^{(beta-alpha)|z|^2}
//              * integral of K_alpha(z, w) g(w) dlambda_beta(w).

Quaternion adjoint_projection_apply(const SliceFunction& g, double alpha,
                                    double beta, const Quaternion& z,
                                    const GlobalRule& rule,
                                    const SeriesPolicy& policy = {});

// Closed forms for the probe family:
//   P^* 1       = (alpha/beta) e^{(beta-alpha)|z|^2}
//   P^* f_{x,k} = (alpha/(beta+x))^{k+1} e^{(beta-alpha)|z|^2} z^k.
Quaternion adjoint_probe_exact(double x, int k, double alpha, double beta,
                               const Quaternion& z);

// ---- Schur bound ------------------------------------------------------------
//
// On the balance line p*alpha = 2*beta the modulus operator is bounded on
// the slice L^p space with norm at most 2; the certificate is the test
// function h(z) = e^{delta |z|^2} with delta = alpha/(2q) = (2beta-alpha)/(2p),
// for which both Schur integrals close:
//   integral H(z,w) h(w)^q dlambda_beta(w) = 2 h(z)^q,
//   integral H(z,w) h(z)^p dlambda_beta(z) = 2 h(w)^p,
// where H(z,w) = (alpha/beta) |series exp(alpha z conj(w))| e^{(beta-alpha)|w|^2}.
// For p = 1 the single integral over z is the certificate (constant 2 again).
//
// The collapse rests on the Gaussian modulus identity, which is exact when
// the fixed point of the integral lies on the real axis.  Off the real axis
// the slice average of |series exp(...)| strictly exceeds the same-slice
// modulus, so the quadrature/closed-form ratio rises above 1 (about 1.27 at
// imaginary norm 1.5 and it grows with the imaginary norm).  schur_verify
// therefore classifies each sample: real-axis samples are asserted equal to
// the closed form, off-axis samples are reported as measured ratios.

struct SchurSample {
    Quaternion point;
    bool real_axis = false;
    double ratio_first = 0.0;   // quadrature / closed form, w-integral
    double ratio_second = 0.0;  // quadrature / closed form, z-integral
};

struct SchurReport {
    double p = 0.0, alpha = 0.0, beta = 0.0, delta = 0.0;
    double constant_first = 0.0;   // closed-form constant of the w-integral
    double constant_second = 0.0;  // closed-form constant of the z-integral
    double real_axis_dev = 0.0;    // worst |ratio - 1| over real-axis samples
    double off_axis_ratio = 0.0;   // worst ratio over off-axis samples (0 if none)
    std::vector<SchurSample> rows;
};

SchurReport schur_verify(double p, double alpha, double beta,
                         const std::vector<Quaternion>& samples,
                         const GlobalRule& rule, const SeriesPolicy& policy = {});

// ---- range of the projection -------------------------------------------------
//
// Acting on L^p(dlambda_beta) the projection lands exactly in the Gaussian
// space of parameter gamma with alpha^2 / gamma = 2 alpha - beta.  Given a
// target with power-series coefficients c, an explicit preimage is
//   g(z) = (alpha/gamma) f((alpha/gamma) z) e^{(beta-alpha)|z|^2},
// and the round trip P g recovers c coefficient by coefficient.
double range_parameter(double alpha, double beta);

SliceFunction range_preimage(const std::vector<Quaternion>& target_coeffs,
                             double alpha, double beta);

}  // namespace qfock
