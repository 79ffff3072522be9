#pragma once

#include <string>
#include <vector>

#include "qfock/fock.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/slice_function.hpp"

namespace qfock {

// Finitely supported positive measure on the quaternions.  Atoms carry a
// slice position (x, y >= 0), a unit, and a weight.
struct Atom {
    double x = 0.0;
    double y = 0.0;
    ImaginaryUnit unit = ImaginaryUnit::i();
    double weight = 0.0;
    Quaternion point() const { return from_slice(x, y, unit); }
};

struct DiscreteMeasure {
    std::vector<Atom> atoms;
    double total() const;
};

// Exact partition into the real-axis part (atoms with y = 0) and the
// off-axis part.  Box masses add back exactly.
struct MeasureSplit {
    DiscreteMeasure real_axis;
    DiscreteMeasure off_axis;
};
MeasureSplit split_real_axis(const DiscreteMeasure& mu);

// Parses {"atoms": [{"x": .., "y": .., "unit": [ux, uy, uz], "w": ..}, ..]}.
// y must be >= 0 and w > 0; unit is normalized on load.
DiscreteMeasure load_measure_json(const std::string& text);
DiscreteMeasure load_measure_file(const std::string& path);

// The box at center z with radius r collects every quaternion whose slice
// profile (x, |Im|) lies within Euclidean distance r of the profile of z.
// Membership is blind to the imaginary unit, so the box is the full
// rotation body over a half-plane disk.
struct BoxSpec {
    double x0 = 0.0;
    double y0 = 0.0;  // profile height of the center, always >= 0
    double r = 1.0;
};

BoxSpec box_at(const Quaternion& z, double r);
bool box_contains(const BoxSpec& box, double x, double y);
inline bool box_contains(const BoxSpec& box, const Quaternion& w) {
    return box_contains(box, w.x0, w.im_norm());
}

// Mass of the measure inside the box, and mass normalized by the profile
// disk area pi r^2.
double box_mass(const DiscreteMeasure& mu, const BoxSpec& box);
double box_average(const DiscreteMeasure& mu, const BoxSpec& box);

// Kernel-side statistic: sum over atoms of w_a |k_z(a)|^p where k_z is the
// unit-norm kernel at z and the evaluation carries the Gaussian weight,
//   |k_z(a) e^{-alpha |a|^2 / 2}|^p.
// For an embedding-bounded measure this stays comparable to the box
// averages; the two statistics are computed over the same centers so the
// ratio bank can be inspected.
double kernel_energy(const DiscreteMeasure& mu, const Quaternion& z, double alpha,
                     double p, const SeriesPolicy& policy = {});

struct CarlesonProfile {
    std::vector<Quaternion> centers;
    std::vector<double> averages;       // box average at each center
    std::vector<double> energies;       // kernel energy at each center
    double sup_average = 0.0;
    double sup_energy = 0.0;
};

// Evaluates both statistics over a caller-supplied center set.
CarlesonProfile carleson_profile(const DiscreteMeasure& mu, double r, double alpha,
                                 double p, const std::vector<Quaternion>& centers);

// Default center set: profile lattice x in [-extent, extent], y in
// [0, extent] with the given spacing, placed on the given unit (membership
// ignores the unit, so one suffices).
std::vector<Quaternion> profile_lattice(double extent, double spacing,
                                        const ImaginaryUnit& I = ImaginaryUnit::i());

// Escape-to-zero profile: for each radius R, the largest box average and
// kernel energy over points |z| = R on the slice of I (several angles
// sampled).  A vanishing embedding drives both columns to zero.
struct VanishingRow {
    double R = 0.0;
    double max_average = 0.0;
    double max_energy = 0.0;
};
std::vector<VanishingRow> vanishing_profile(const DiscreteMeasure& mu, double r,
                                            double alpha, double p,
                                            const ImaginaryUnit& I,
                                            const std::vector<double>& radii,
                                            int n_angles = 8);

// Volume integral of f over the box in the slice-fibered sense: the box
// meets the plane of each unit I in the full disk around x0 + y0 I, and
// the volume integral is the sphere average of the per-slice disk
// integrals,
//   integral = sum over units of weight * integral over disk of f(x + yI).
// n_r x n_t polar cells per disk.
Quaternion volume_box_integral(const SliceFunction& f, const BoxSpec& box,
                               int n_r, int n_t, const SphereRule& sphere);

// Plane integral of f restricted to one slice over the profile disk of
// the box (the slice-side quantity the volume integral collapses to when
// f takes equal values on every slice, e.g. for real slice functions).
Quaternion slice_disk_integral(const SliceFunction& f, const BoxSpec& box, int n_r,
                               int n_t, const ImaginaryUnit& I = ImaginaryUnit::i());

}  // namespace qfock
