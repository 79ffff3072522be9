#include "qfock/bmo.hpp"

#include <cmath>
#include <stdexcept>

#include "qfock/quadrature.hpp"

namespace qfock {

namespace {

// Polar midpoint nodes around the origin with total weight pi r^2.
PlaneRule centered_disk(double r, int n_r, int n_t) {
    return plane_rule_disk({0.0, 0.0}, r, n_r, n_t);
}

}  // namespace

Quaternion disk_mean(const SliceFunction& f, const Quaternion& z, double r,
                     int n_r, int n_t) {
    const SlicePoint s = slice_decompose(z);
    const PlaneRule disk = centered_disk(r, n_r, n_t);
    const Quaternion integral =
        integrate_plane_serial<Quaternion>(disk, [&](double u, double v) {
            return f(from_slice(s.x + u, s.y + v, s.unit));
        });
    return (1.0 / (M_PI * r * r)) * integral;
}

SliceFunction averaged_function(const SliceFunction& f, double r, int n_r, int n_t) {
    const PlaneRule disk = centered_disk(r, n_r, n_t);
    const double inv_area = 1.0 / (M_PI * r * r);
    auto a = f.stem_a_fn();
    auto b = f.stem_b_fn();
    const auto smooth = [disk, inv_area](
                            const std::function<Quaternion(double, double)>& stem,
                            double x, double y) {
        const Quaternion integral =
            integrate_plane_serial<Quaternion>(disk, [&](double u, double v) {
                return stem(x + u, y + v);
            });
        return inv_area * integral;
    };
    Stem stem;
    stem.a = [a, smooth](double x, double y) { return smooth(a, x, y); };
    stem.b = [b, smooth](double x, double y) { return smooth(b, x, y); };
    const FnTag tag = f.tag() == FnTag::intrinsic ? FnTag::intrinsic : FnTag::generic;
    return SliceFunction::from_stem(std::move(stem), tag);
}

double mean_oscillation(const SliceFunction& f, const Quaternion& z, double r,
                        double p, int n_r, int n_t) {
    if (!(p >= 1.0)) throw std::invalid_argument("mean_oscillation: p must be >= 1");
    const Quaternion mean = disk_mean(f, z, r, n_r, n_t);
    const SlicePoint s = slice_decompose(z);
    const PlaneRule disk = centered_disk(r, n_r, n_t);
    const double integral =
        integrate_plane_serial<double>(disk, [&](double u, double v) {
            const Quaternion w = from_slice(s.x + u, s.y + v, s.unit);
            return std::pow((f(w) - mean).norm(), p);
        });
    return std::pow(integral / (M_PI * r * r), 1.0 / p);
}

double bmo_window_norm(const SliceFunction& f, double r, double p,
                       const std::vector<Quaternion>& centers, int n_r, int n_t) {
    double best = 0.0;
    for (const Quaternion& z : centers)
        best = std::max(best, mean_oscillation(f, z, r, p, n_r, n_t));
    return best;
}

double local_oscillation(const SliceFunction& f, const Quaternion& z, double r,
                         int n_ring, int n_rad) {
    const SlicePoint s = slice_decompose(z);
    const Quaternion fz = f(z);
    double best = 0.0;
    for (int a = 1; a <= n_rad; ++a) {
        const double rho = r * a / n_rad;  // outermost ring sits on the boundary
        for (int b = 0; b < n_ring; ++b) {
            const double th = 2.0 * M_PI * b / n_ring;
            const Quaternion w =
                from_slice(s.x + rho * std::cos(th), s.y + rho * std::sin(th), s.unit);
            best = std::max(best, (f(w) - fz).norm());
        }
    }
    return best;
}

double bo_window_norm(const SliceFunction& f,
                      const std::vector<Quaternion>& centers, double radius,
                      int n_ring, int n_rad) {
    double best = 0.0;
    for (const Quaternion& z : centers)
        best = std::max(best, local_oscillation(f, z, radius, n_ring, n_rad));
    return best;
}

double ba_window_norm(const SliceFunction& f, double p, double alpha,
                      const std::vector<Quaternion>& centers, int n_nodes) {
    const ConvRule rule = conv_rule(n_nodes, alpha);
    double best = 0.0;
    for (const Quaternion& z : centers) {
        const SlicePoint s = slice_decompose(z);
        const double value = berezin_scalar_slice(
            [&](const Quaternion& w) { return std::pow(f(w).norm(), p); }, s.unit,
            {s.x, s.y}, rule);
        best = std::max(best, value);
    }
    return best;
}

DecompositionReport decomposition_check(const SliceFunction& f, double r, double p,
                                        double alpha,
                                        const std::vector<Quaternion>& inner_window,
                                        const std::vector<Quaternion>& outer_window,
                                        int n_nodes) {
    DecompositionReport rep;
    const SliceFunction averaged = averaged_function(f, r, n_nodes, n_nodes);
    const SliceFunction rough_avg = f - averaged;
    const SliceFunction smoothed = berezin(f, alpha, n_nodes);
    const SliceFunction rough_smooth = f - smoothed;

    const auto add = [&](const std::string& name, double inner, double outer) {
        DecompositionStat st;
        st.name = name;
        st.inner = inner;
        st.outer = outer;
        // A statistic that vanishes on both windows (e.g. the rough part of
        // a function that equals its own disk mean) leaves only roundoff
        // residue; a ratio of two such residues says nothing, so growth is
        // only formed above a noise floor.
        constexpr double kNoiseFloor = 1e-10;
        st.growth = (inner < kNoiseFloor && outer < kNoiseFloor)
                        ? 1.0
                        : outer / std::max(inner, kNoiseFloor);
        rep.stats.push_back(st);
        rep.max_growth = std::max(rep.max_growth, st.growth);
    };

    add("slow-part-oscillation(disk-mean)",
        bo_window_norm(averaged, inner_window, 1.0, 32, 4),
        bo_window_norm(averaged, outer_window, 1.0, 32, 4));
    add("rough-part-average(disk-mean)",
        ba_window_norm(rough_avg, p, alpha, inner_window, n_nodes),
        ba_window_norm(rough_avg, p, alpha, outer_window, n_nodes));
    add("slow-part-oscillation(gaussian)",
        bo_window_norm(smoothed, inner_window, 1.0, 32, 4),
        bo_window_norm(smoothed, outer_window, 1.0, 32, 4));
    add("rough-part-average(gaussian)",
        ba_window_norm(rough_smooth, p, alpha, inner_window, n_nodes),
        ba_window_norm(rough_smooth, p, alpha, outer_window, n_nodes));
    return rep;
}

}  // namespace qfock
