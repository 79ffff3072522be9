#include "qfock/measure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qfock/quadrature.hpp"

namespace qfock {

double DiscreteMeasure::total() const {
    double s = 0.0;
    for (const Atom& a : atoms) s += a.weight;
    return s;
}

MeasureSplit split_real_axis(const DiscreteMeasure& mu) {
    MeasureSplit out;
    for (const Atom& a : mu.atoms) {
        if (a.y == 0.0)
            out.real_axis.atoms.push_back(a);
        else
            out.off_axis.atoms.push_back(a);
    }
    return out;
}

DiscreteMeasure load_measure_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw std::runtime_error("measure json: expected object with an \"atoms\" array");
    DiscreteMeasure mu;
    for (const auto& item : doc["atoms"]) {
        Atom a;
        a.x = item.at("x").get<double>();
        a.y = item.at("y").get<double>();
        a.weight = item.at("w").get<double>();
        const auto& u = item.at("unit");
        if (!u.is_array() || u.size() != 3)
            throw std::runtime_error("measure json: \"unit\" must be a 3-vector");
        a.unit = ImaginaryUnit(u[0].get<double>(), u[1].get<double>(), u[2].get<double>());
        if (a.y < 0.0) throw std::runtime_error("measure json: atom with y < 0");
        if (!(a.weight > 0.0)) throw std::runtime_error("measure json: atom weight must be > 0");
        mu.atoms.push_back(a);
    }
    return mu;
}

DiscreteMeasure load_measure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measure file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_measure_json(buf.str());
}

BoxSpec box_at(const Quaternion& z, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("box_at: radius must be > 0");
    return BoxSpec{z.x0, z.im_norm(), r};
}

bool box_contains(const BoxSpec& box, double x, double y) {
    return std::hypot(x - box.x0, y - box.y0) <= box.r;
}

double box_mass(const DiscreteMeasure& mu, const BoxSpec& box) {
    double s = 0.0;
    for (const Atom& a : mu.atoms)
        if (box_contains(box, a.x, a.y)) s += a.weight;
    return s;
}

double box_average(const DiscreteMeasure& mu, const BoxSpec& box) {
    return box_mass(mu, box) / (M_PI * box.r * box.r);
}

double kernel_energy(const DiscreteMeasure& mu, const Quaternion& z, double alpha,
                     double p, const SeriesPolicy& policy) {
    const double zc = std::exp(-0.5 * alpha * z.norm_sq());
    double s = 0.0;
    for (const Atom& a : mu.atoms) {
        const Quaternion w = a.point();
        const double v =
            kernel_scaled(alpha, w, z, policy).norm() * zc *
            std::exp(-0.5 * alpha * w.norm_sq());
        s += a.weight * std::pow(v, p);
    }
    return s;
}

CarlesonProfile carleson_profile(const DiscreteMeasure& mu, double r, double alpha,
                                 double p, const std::vector<Quaternion>& centers) {
    CarlesonProfile out;
    out.centers = centers;
    out.averages.resize(centers.size());
    out.energies.resize(centers.size());
    parallel_for_index(centers.size(), [&](std::size_t k) {
        out.averages[k] = box_average(mu, box_at(centers[k], r));
        out.energies[k] = kernel_energy(mu, centers[k], alpha, p);
    });
    for (std::size_t k = 0; k < centers.size(); ++k) {
        if (out.averages[k] > out.sup_average) out.sup_average = out.averages[k];
        if (out.energies[k] > out.sup_energy) out.sup_energy = out.energies[k];
    }
    return out;
}

std::vector<Quaternion> profile_lattice(double extent, double spacing,
                                        const ImaginaryUnit& I) {
    if (!(spacing > 0.0)) throw std::invalid_argument("profile_lattice: spacing must be > 0");
    std::vector<Quaternion> pts;
    const int nx = static_cast<int>(std::floor(extent / spacing));
    for (int ix = -nx; ix <= nx; ++ix)
        for (int iy = 0; iy * spacing <= extent; ++iy)
            pts.push_back(from_slice(ix * spacing, iy * spacing, I));
    return pts;
}

std::vector<VanishingRow> vanishing_profile(const DiscreteMeasure& mu, double r,
                                            double alpha, double p,
                                            const ImaginaryUnit& I,
                                            const std::vector<double>& radii,
                                            int n_angles) {
    if (n_angles < 1) throw std::invalid_argument("vanishing_profile: n_angles must be >= 1");
    std::vector<VanishingRow> out(radii.size());
    for (std::size_t k = 0; k < radii.size(); ++k) {
        VanishingRow row;
        row.R = radii[k];
        // Angles over the upper half of the slice; membership is unit-blind
        // and the kernel statistic only sees the profile, so this covers the
        // whole circle |z| = R.
        for (int a = 0; a < n_angles; ++a) {
            const double th = M_PI * (a + 0.5) / n_angles - M_PI / 2.0;
            const Quaternion z =
                from_slice(row.R * std::sin(th), row.R * std::cos(th), I);
            const double avg = box_average(mu, box_at(z, r));
            const double en = kernel_energy(mu, z, alpha, p);
            if (avg > row.max_average) row.max_average = avg;
            if (en > row.max_energy) row.max_energy = en;
        }
        out[k] = row;
    }
    return out;
}

Quaternion volume_box_integral(const SliceFunction& f, const BoxSpec& box,
                               int n_r, int n_t, const SphereRule& sphere) {
    const PlaneRule disk =
        plane_rule_disk({box.x0, box.y0}, box.r, n_r, n_t);
    Quaternion acc{};
    for (const auto& sn : sphere.nodes) {
        const Quaternion inner = integrate_plane_serial<Quaternion>(
            disk, [&](double x, double y) { return f(from_slice(x, y, sn.unit)); });
        acc += sn.weight * inner;
    }
    return acc;
}

Quaternion slice_disk_integral(const SliceFunction& f, const BoxSpec& box, int n_r,
                               int n_t, const ImaginaryUnit& I) {
    const PlaneRule disk = plane_rule_disk({box.x0, box.y0}, box.r, n_r, n_t);
    return integrate_plane_serial<Quaternion>(
        disk, [&](double x, double y) { return f(from_slice(x, y, I)); });
}

}  // namespace qfock
