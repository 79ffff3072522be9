#include <cmath>
#include <string>
#include <vector>

#include "qfock/experiments.hpp"
#include "qfock/measure.hpp"

namespace qfock {

namespace {

const ImaginaryUnit kUnits[3] = {ImaginaryUnit::i(), ImaginaryUnit::j(),
                                 ImaginaryUnit::k()};

struct NamedMeasure {
    std::string name;
    DiscreteMeasure mu;
};

DiscreteMeasure lattice_measure(double extent, double spacing,
                                double (*weight)(double, double)) {
    DiscreteMeasure mu;
    int idx = 0;
    for (double x = -extent; x <= extent + 1e-9; x += spacing)
        for (double y = 0; y <= extent + 1e-9; y += spacing) {
            Atom a;
            a.x = x;
            a.y = y;
            a.unit = kUnits[idx++ % 3];
            a.weight = weight(x, y);
            mu.atoms.push_back(a);
        }
    return mu;
}

double w_one(double, double) { return 1.0; }
double w_gauss(double x, double y) { return std::exp(-0.5 * (x * x + y * y)); }
double w_tenth(double, double) { return 0.1; }
double w_inverse(double x, double y) { return 1.0 / (1.0 + x * x + y * y); }

std::vector<NamedMeasure> builtin_measures(std::uint64_t seed) {
    std::vector<NamedMeasure> out;
    out.push_back({"unit-lattice", lattice_measure(4.0, 1.0, &w_one)});
    out.push_back({"sparse-lattice", lattice_measure(4.0, 2.0, &w_one)});
    out.push_back({"gaussian-decay", lattice_measure(4.0, 1.0, &w_gauss)});
    {
        DiscreteMeasure mu;
        mu.atoms.push_back({1.0, 0.5, ImaginaryUnit::j(), 2.0});
        out.push_back({"single-atom", mu});
    }
    {
        DiscreteMeasure mu;
        const int n = 12;
        for (int a = 0; a < n; ++a) {
            const double th = M_PI * a / (n - 1);
            mu.atoms.push_back(
                {2.0 * std::cos(th), 2.0 * std::sin(th), kUnits[a % 3], 1.0});
        }
        out.push_back({"ring", mu});
    }
    {
        Rng rng(seed);
        DiscreteMeasure mu;
        for (int a = 0; a < 60; ++a) {
            Atom at;
            at.x = rng.uniform(-3.0, 3.0);
            at.y = rng.uniform(0.0, 3.0);
            at.unit = rng.unit();
            at.weight = rng.uniform(0.2, 1.0);
            mu.atoms.push_back(at);
        }
        out.push_back({"random-cloud", mu});
    }
    {
        DiscreteMeasure mu;
        for (int x = -4; x <= 4; ++x)
            mu.atoms.push_back({static_cast<double>(x), 0.0, ImaginaryUnit::i(), 1.0});
        out.push_back({"real-axis", mu});
    }
    {
        DiscreteMeasure mu;
        int idx = 0;
        for (double x = -3; x <= 3; x += 1.5)
            for (double y = 0.5; y <= 3; y += 1.0)
                mu.atoms.push_back({x, y,
                                    (idx++ % 2) ? ImaginaryUnit::j() : ImaginaryUnit::k(),
                                    1.0});
        out.push_back({"off-axis-mixed", mu});
    }
    {
        DiscreteMeasure mu = lattice_measure(4.0, 1.0, &w_tenth);
        mu.atoms.push_back({0.5, 0.5, ImaginaryUnit::i(), 10.0});
        out.push_back({"heavy-point", mu});
    }
    out.push_back({"inverse-decay", lattice_measure(4.0, 1.0, &w_inverse)});
    return out;
}

// ---- carleson ---------------------------------------------------------------

void run_carleson(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const double p = cfg.param("p", 2.0);
    const double r = cfg.param("r", 0.8);

    std::vector<NamedMeasure> bank = builtin_measures(cfg.seed);
    if (!cfg.input("measure").empty())
        bank.push_back({"input", load_measure_file(cfg.input("measure"))});

    const std::vector<Quaternion> centers = profile_lattice(3.5, 0.5);
    rep.note("centers", format_double(static_cast<double>(centers.size())));

    rep.table("profile", "measure,center-x,center-y,box-average,kernel-energy");
    rep.table("summary", "measure,total-mass,sup-average,sup-energy,ratio-sup");

    double worst_ratio_hi = 0.0, worst_ratio_lo = 1e300;
    for (const NamedMeasure& nm : bank) {
        const CarlesonProfile prof = carleson_profile(nm.mu, r, alpha, p, centers);
        for (std::size_t c = 0; c < centers.size(); ++c) {
            const auto sd = slice_decompose(centers[c]);
            rep.row("profile", {nm.name, format_double(sd.x), format_double(sd.y),
                                format_double(prof.averages[c]),
                                format_double(prof.energies[c])});
        }
        const double ratio =
            prof.sup_average > 0 ? prof.sup_energy / prof.sup_average : 0.0;
        rep.row("summary", {nm.name, format_double(nm.mu.total()),
                            format_double(prof.sup_average),
                            format_double(prof.sup_energy), format_double(ratio)});
        if (prof.sup_average > 0) {
            worst_ratio_hi = std::max(worst_ratio_hi, ratio);
            worst_ratio_lo = std::min(worst_ratio_lo, ratio);
        }
    }
    // Two-sided comparability of the box statistic and the kernel-energy
    // statistic across the whole bank (conservative constants).
    rep.check("energy-vs-average-upper", worst_ratio_hi, 60.0);
    rep.check_at_least("energy-vs-average-lower", worst_ratio_lo, 0.05);

    // Splitting off the real-axis atoms disintegrates every box statistic
    // exactly: masses add back atom by atom.
    {
        DiscreteMeasure mixed = builtin_measures(cfg.seed)[0].mu;  // unit-lattice
        const MeasureSplit split = split_real_axis(mixed);
        double worst = std::abs(mixed.total() -
                                (split.real_axis.total() + split.off_axis.total()));
        for (const Quaternion& z : profile_lattice(2.0, 1.0)) {
            const BoxSpec box = box_at(z, r);
            const double whole = box_mass(mixed, box);
            const double parts =
                box_mass(split.real_axis, box) + box_mass(split.off_axis, box);
            worst = std::max(worst, std::abs(whole - parts));
        }
        rep.check("real-axis-disintegration", worst, 1e-12);
        rep.note("real-axis-atoms",
                 format_double(static_cast<double>(split.real_axis.atoms.size())));
    }

    // Box membership sanity on the single atom: the box centered at the
    // atom's profile point captures it, a far box does not.
    {
        const DiscreteMeasure& solo = bank[3].mu;
        const Quaternion at = from_slice(1.0, 0.5, ImaginaryUnit::k());
        const double hit = box_mass(solo, box_at(at, 0.3));
        const double miss = box_mass(solo, box_at(from_slice(-2.0, 1.0, kUnits[0]), 0.3));
        rep.check("single-atom-hit", std::abs(hit - 2.0), 0.0);
        rep.check("single-atom-miss", miss, 0.0);
    }
}

// ---- vanishing-carleson -----------------------------------------------------

void run_vanishing(const RunConfig& cfg, ExperimentReport& rep) {
    const double alpha = cfg.param("alpha", 1.0);
    const double p = cfg.param("p", 2.0);
    const double r = cfg.param("r", 0.8);

    DiscreteMeasure fading = lattice_measure(8.0, 1.0, [](double x, double y) {
        return std::exp(-0.25 * (x * x + y * y));
    });
    DiscreteMeasure steady = lattice_measure(8.0, 1.0, &w_one);

    const std::vector<double> radii = {0.0, 2.0, 4.0, 6.0};
    rep.table("decay", "measure,R,max-box-average,max-kernel-energy");

    auto emit = [&](const std::string& name, const DiscreteMeasure& mu)
        -> std::vector<VanishingRow> {
        const auto rows =
            vanishing_profile(mu, r, alpha, p, ImaginaryUnit::i(), radii);
        for (const VanishingRow& row : rows)
            rep.row("decay", {name, format_double(row.R), format_double(row.max_average),
                              format_double(row.max_energy)});
        return rows;
    };

    const auto fade = emit("gaussian-weights", fading);
    const auto stay = emit("unit-weights", steady);

    // The Gaussian-weight lattice has box statistics that vanish toward the
    // boundary; the unit-weight lattice does not.
    rep.check("vanishing-average-decay", fade.back().max_average,
              0.05 * fade.front().max_average);
    rep.check("vanishing-energy-decay", fade.back().max_energy,
              0.05 * fade.front().max_energy);
    rep.check_at_least("steady-average-persists", stay.back().max_average,
                       0.5 * stay.front().max_average);
    rep.check_at_least("steady-energy-persists", stay.back().max_energy,
                       0.5 * stay.front().max_energy);
}

}  // namespace

std::vector<ExperimentSpec> measure_experiments() {
    return {
        {"carleson",
         "box averages vs kernel energies over a bank of discrete measures",
         {"alpha", "p", "r"},
         {"measure"},
         &run_carleson},
        {"vanishing-carleson",
         "boundary decay of box statistics: fading weights vanish, unit weights persist",
         {"alpha", "p", "r"},
         {},
         &run_vanishing},
    };
}

}  // namespace qfock
