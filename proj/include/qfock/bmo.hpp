#pragma once

#include <string>
#include <vector>

#include "qfock/berezin.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Mean over the disk of radius r around z inside the slice plane of z
// (polar midpoint quadrature; exact for affine integrands and total weight
// exactly the disk area, so constants are averaged without error).
Quaternion disk_mean(const SliceFunction& f, const Quaternion& z, double r,
                     int n_r = 32, int n_t = 32);

// Slice function z -> disk mean of f at radius r (slice-stable: the mean
// of the stems is the stem of the mean).
SliceFunction averaged_function(const SliceFunction& f, double r, int n_r = 32,
                                int n_t = 32);

// Mean oscillation around the disk mean:
//   MO_{p,r}(f)(z) = [ area-average over B(z,r) of |f - disk_mean|^p ]^{1/p}.
double mean_oscillation(const SliceFunction& f, const Quaternion& z, double r,
                        double p, int n_r = 32, int n_t = 32);

// Window statistic for the mean-oscillation seminorm: the max of
// MO_{p,r}(f) over the supplied centers (callers choose slices by placing
// centers on them).
double bmo_window_norm(const SliceFunction& f, double r, double p,
                       const std::vector<Quaternion>& centers, int n_r = 32,
                       int n_t = 32);

// Local oscillation: sup of |f(z) - f(w)| over w in the closed disk
// B(z, r) in the slice of z, sampled on rings.
double local_oscillation(const SliceFunction& f, const Quaternion& z, double r,
                         int n_ring = 64, int n_rad = 8);

// Window statistic for the bounded-oscillation seminorm at unit radius:
// max over centers of the local oscillation.
double bo_window_norm(const SliceFunction& f,
                      const std::vector<Quaternion>& centers, double radius = 1.0,
                      int n_ring = 64, int n_rad = 8);

// Gaussian-average statistic: sup over centers of the smoothed |f|^p,
//   z -> (alpha/pi) integral e^{-alpha|w-z|^2} |f(w)|^p dm(w)
// on the slice of each center.
double ba_window_norm(const SliceFunction& f, double p, double alpha,
                      const std::vector<Quaternion>& centers, int n_nodes = 40);

// Structure check: a function of bounded mean oscillation splits as
// (slowly varying) + (bounded in Gaussian average); witnessed by
//   bo(averaged_function), ba(f - averaged_function),
//   bo(smoothed f),       ba(f - smoothed f).
// Each statistic is evaluated on nested center windows; the growth factor
// between windows close to 1 is the finiteness heuristic at desk scale.
struct DecompositionStat {
    std::string name;
    double inner = 0.0;   // statistic over the inner window
    double outer = 0.0;   // statistic over the enlarged window
    double growth = 0.0;  // outer / inner
};

struct DecompositionReport {
    std::vector<DecompositionStat> stats;
    double max_growth = 0.0;
};

DecompositionReport decomposition_check(const SliceFunction& f, double r, double p,
                                        double alpha,
                                        const std::vector<Quaternion>& inner_window,
                                        const std::vector<Quaternion>& outer_window,
                                        int n_nodes = 32);

}  // namespace qfock
