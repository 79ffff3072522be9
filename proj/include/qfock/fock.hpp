#pragma once

#include <vector>

#include "qfock/quadrature.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Controls for truncating the entire-series kernel.  Truncation order is
// chosen per evaluation from the classical remainder bound
//   |tail after N terms| <= r^{N+1}/(N+1)! * e^r,   r = |t| |z| |w|,
// pushed below tail_tol.  arg_cap guards against arguments so large that
// e^r overflows before the bound kicks in.
struct SeriesPolicy {
    double tail_tol = 1e-14;
    int max_terms = 300;
    double arg_cap = 600.0;
};

// Smallest N with r^{N+1}/(N+1)! e^r <= tol (computed in log space).
int series_order(double r, double tol, int max_terms);

// Power-series exponential sum_n t^n z^n conj(w)^n / n!.  For t > 0 this
// is the reproducing kernel of the Gaussian space at parameter t; the
// scale is left free because adjoint and embedding formulas need other
// (including negative) values.  z^n and conj(w)^n commute past the real
// coefficient but not past each other, so the order matters and is fixed
// as written.
Quaternion kernel_scaled(double t, const Quaternion& z, const Quaternion& w,
                         const SeriesPolicy& policy = {});

struct KernelContext {
    double alpha = 1.0;
    SeriesPolicy policy{};
};

inline Quaternion kernel_eval(const KernelContext& ctx, const Quaternion& z,
                              const Quaternion& w) {
    return kernel_scaled(ctx.alpha, z, w, ctx.policy);
}

// K(., z) as a power series in the free variable with right coefficients
// alpha^n conj(z)^n / n!, truncated so the dropped tail is below
// policy.tail_tol for arguments up to |w| <= radius.
std::vector<Quaternion> kernel_coeffs(const KernelContext& ctx, const Quaternion& z,
                                      double radius);

SliceFunction kernel_function(const KernelContext& ctx, const Quaternion& z,
                              double radius);

// Unit-norm kernel at z: K(., z) e^{-alpha |z|^2 / 2}.
SliceFunction normalized_kernel(const KernelContext& ctx, const Quaternion& z,
                                double radius);

// ||z^n||^2 = n! / alpha^n (computed via lgamma to dodge overflow).
double monomial_norm_sq(double alpha, int n);

// Inner product of power series sum z^n a_n, sum z^n b_n:
//   <f, g> = sum_n conj(b_n) a_n n! / alpha^n,
// right-linear in the first slot, conjugate-symmetric.
Quaternion inner_product(const std::vector<Quaternion>& a,
                         const std::vector<Quaternion>& b, double alpha);

inline double norm_sq(const std::vector<Quaternion>& a, double alpha) {
    return inner_product(a, a, alpha).x0;
}

// Reassembles the inner product from eight squared norms:
//   4<f,g> = sum over u in {1,i,j,k} of (||f + g u||^2 - ||f - g u||^2) u
// with u acting on g from the right.  Cross-checks the coefficient route
// and documents which sesquilinearity convention is in force.
Quaternion inner_product_polarized(const std::vector<Quaternion>& a,
                                   const std::vector<Quaternion>& b, double alpha);

// p-norm over the quaternion volume:
//   ||f||_p = [ (p alpha / pi) * integral over H of |f e^{-alpha|q|^2/2}|^p dV ]^{1/p}.
double global_p_norm(const SliceFunction& f, double p, double alpha,
                     const GlobalRule& rule);

// Same shape on a single slice plane with the half-plane-free convention
//   ||f||_{p,I} = [ (p alpha / 2 pi) * integral over C_I of |...|^p dm ]^{1/p}.
double slice_p_norm(const SliceFunction& f, double p, double alpha,
                    const ImaginaryUnit& I, const PlaneRule& rule);

// sup-norm variant: largest |f(q) e^{-alpha|q|^2/2}| over the rule's nodes.
double sup_seminorm(const SliceFunction& f, double alpha, const GlobalRule& rule);

// Pointwise growth check: |f(z)| <= ||f||_2 e^{alpha |z|^2 / 2}, with the
// observed ratio returned (<= 1 + slack when the bound holds).
struct PointwiseBound {
    double worst_ratio = 0.0;
    Quaternion witness{};
};
PointwiseBound pointwise_bound_check(const std::vector<Quaternion>& coeffs,
                                     double alpha,
                                     const std::vector<Quaternion>& sample_points);

// p-norm variant: |f(z)| <= 4 ||f||_{p,alpha} e^{alpha |z|^2 / 2}.  The
// constant 4 absorbs every p >= 1; the returned worst ratio is
// |f(z)| e^{-alpha|z|^2/2} / ||f||_{p,alpha} and stays <= 4.
PointwiseBound pointwise_bound_check(const SliceFunction& f, double p, double alpha,
                                     const GlobalRule& rule,
                                     const std::vector<Quaternion>& sample_points);

}  // namespace qfock
