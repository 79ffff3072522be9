#include "qfock/slice_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qfock {

namespace {

// Real and imaginary parts of (x + iy)^n for n = 0..deg, shared by the
// polynomial stem evaluation.
void complex_powers(double x, double y, std::size_t deg, std::vector<Complex>& out) {
    out.resize(deg + 1);
    Complex p{1.0, 0.0};
    const Complex z{x, y};
    for (std::size_t n = 0; n <= deg; ++n) {
        out[n] = p;
        p *= z;
    }
}

Quaternion poly_stem_a(const std::vector<Quaternion>& c, double x, double y) {
    std::vector<Complex> pw;
    complex_powers(x, y, c.empty() ? 0 : c.size() - 1, pw);
    Quaternion acc{};
    for (std::size_t n = 0; n < c.size(); ++n) acc += pw[n].real() * c[n];
    return acc;
}

Quaternion poly_stem_b(const std::vector<Quaternion>& c, double x, double y) {
    std::vector<Complex> pw;
    complex_powers(x, y, c.empty() ? 0 : c.size() - 1, pw);
    Quaternion acc{};
    for (std::size_t n = 0; n < c.size(); ++n) acc += pw[n].imag() * c[n];
    return acc;
}

void require_perpendicular(const ImaginaryUnit& I, const ImaginaryUnit& J) {
    if (std::fabs(dot(I, J)) > 1e-12)
        throw std::invalid_argument("split: J must be perpendicular to I");
}

}  // namespace

SliceFunction SliceFunction::from_stem(Stem stem, FnTag tag) {
    return SliceFunction(std::move(stem), std::nullopt, tag);
}

SliceFunction SliceFunction::poly(std::vector<Quaternion> coeffs) {
    Stem stem{
        [coeffs](double x, double y) { return poly_stem_a(coeffs, x, y); },
        [coeffs](double x, double y) { return poly_stem_b(coeffs, x, y); },
    };
    bool real_coeffs = true;
    for (const auto& c : coeffs)
        if (std::fabs(c.x1) + std::fabs(c.x2) + std::fabs(c.x3) > 0) real_coeffs = false;
    return SliceFunction(std::move(stem), std::move(coeffs),
                         real_coeffs ? FnTag::intrinsic : FnTag::regular_poly);
}

SliceFunction SliceFunction::constant(const Quaternion& c) { return poly({c}); }

SliceFunction SliceFunction::identity() { return poly({Quaternion{}, Quaternion{1}}); }

SliceFunction SliceFunction::with_tag(FnTag t) const {
    SliceFunction f = *this;
    f.tag_ = t;
    return f;
}

Quaternion SliceFunction::operator()(const Quaternion& q) const {
    if (coeffs_) {
        // Horner form of sum q^n c_n (powers of q commute with q itself).
        const auto& c = *coeffs_;
        if (c.empty()) return {};
        Quaternion acc = c.back();
        for (std::size_t n = c.size() - 1; n-- > 0;) acc = q * acc + c[n];
        return acc;
    }
    const SlicePoint sp = slice_decompose(q);
    return stem_.a(sp.x, sp.y) + sp.unit.q() * stem_.b(sp.x, sp.y);
}

Quaternion SliceFunction::stem_a(double x, double y) const {
    if (coeffs_) return poly_stem_a(*coeffs_, x, y);
    return stem_.a(x, y);
}

Quaternion SliceFunction::stem_b(double x, double y) const {
    if (coeffs_) return poly_stem_b(*coeffs_, x, y);
    return stem_.b(x, y);
}

std::function<Quaternion(double, double)> SliceFunction::stem_a_fn() const {
    if (coeffs_) {
        auto c = *coeffs_;
        return [c = std::move(c)](double x, double y) { return poly_stem_a(c, x, y); };
    }
    return stem_.a;
}

std::function<Quaternion(double, double)> SliceFunction::stem_b_fn() const {
    if (coeffs_) {
        auto c = *coeffs_;
        return [c = std::move(c)](double x, double y) { return poly_stem_b(c, x, y); };
    }
    return stem_.b;
}

SliceFunction SliceFunction::operator+(const SliceFunction& g) const {
    if (coeffs_ && g.coeffs_) {
        std::vector<Quaternion> c(std::max(coeffs_->size(), g.coeffs_->size()));
        for (std::size_t n = 0; n < c.size(); ++n) {
            if (n < coeffs_->size()) c[n] += (*coeffs_)[n];
            if (n < g.coeffs_->size()) c[n] += (*g.coeffs_)[n];
        }
        return poly(std::move(c));
    }
    SliceFunction f = *this;
    return from_stem(Stem{
        [f, g](double x, double y) { return f.stem_a(x, y) + g.stem_a(x, y); },
        [f, g](double x, double y) { return f.stem_b(x, y) + g.stem_b(x, y); },
    });
}

SliceFunction SliceFunction::operator-(const SliceFunction& g) const {
    return *this + g.scaled(-1.0);
}

SliceFunction SliceFunction::scaled(double s) const {
    if (coeffs_) {
        std::vector<Quaternion> c = *coeffs_;
        for (auto& q : c) q *= s;
        return poly(std::move(c));
    }
    SliceFunction f = *this;
    return from_stem(Stem{
        [f, s](double x, double y) { return s * f.stem_a(x, y); },
        [f, s](double x, double y) { return s * f.stem_b(x, y); },
    });
}

SliceFunction SliceFunction::times_const(const Quaternion& c) const {
    if (coeffs_) {
        std::vector<Quaternion> cc = *coeffs_;
        for (auto& q : cc) q = q * c;
        return poly(std::move(cc));
    }
    SliceFunction f = *this;
    return from_stem(Stem{
        [f, c](double x, double y) { return f.stem_a(x, y) * c; },
        [f, c](double x, double y) { return f.stem_b(x, y) * c; },
    });
}

Quaternion eval_on_slice(const SliceFunction& f, double x, double y,
                         const ImaginaryUnit& I) {
    return f.stem_a(x, y) + I.q() * f.stem_b(x, y);
}

Quaternion represent_from_slice(const Quaternion& fJ_plus, const Quaternion& fJ_minus,
                                const ImaginaryUnit& J, const ImaginaryUnit& I) {
    const Quaternion IJ = I.q() * J.q();
    return 0.5 * (fJ_plus - IJ * fJ_plus) + 0.5 * (fJ_minus + IJ * fJ_minus);
}

SliceFunction extend_from_slice(std::function<Quaternion(Complex)> fI,
                                const ImaginaryUnit& I) {
    const Quaternion Iq = I.q();
    Stem stem{
        [fI](double x, double y) {
            return 0.5 * (fI(Complex(x, y)) + fI(Complex(x, -y)));
        },
        [fI, Iq](double x, double y) {
            return 0.5 * (Iq * (fI(Complex(x, -y)) - fI(Complex(x, y))));
        },
    };
    return SliceFunction::from_stem(std::move(stem));
}

SliceSplit split(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    require_perpendicular(I, J);
    SliceSplit s;
    s.F = [f, I, J](Complex z) {
        return split_components(eval_on_slice(f, z.real(), z.imag(), I), I, J).first;
    };
    s.G = [f, I, J](Complex z) {
        return split_components(eval_on_slice(f, z.real(), z.imag(), I), I, J).second;
    };
    return s;
}

SliceFunction star_product(const SliceFunction& f, const SliceFunction& g) {
    if (f.coeffs() && g.coeffs()) {
        auto c = star_coeffs(*f.coeffs(), *g.coeffs());
        return SliceFunction::poly(std::move(c));
    }
    SliceFunction ff = f, gg = g;
    Stem stem{
        [ff, gg](double x, double y) {
            return ff.stem_a(x, y) * gg.stem_a(x, y) - ff.stem_b(x, y) * gg.stem_b(x, y);
        },
        [ff, gg](double x, double y) {
            return ff.stem_a(x, y) * gg.stem_b(x, y) + ff.stem_b(x, y) * gg.stem_a(x, y);
        },
    };
    return SliceFunction::from_stem(std::move(stem));
}

Quaternion star_slicewise(const SliceFunction& f, const SliceFunction& g,
                          const ImaginaryUnit& I, Complex z) {
    const ImaginaryUnit J = orthogonal_unit(I);
    const auto [F0, F1] = split_components(eval_on_slice(f, z.real(), z.imag(), I), I, J);
    const auto [G0z, G1z] = split_components(eval_on_slice(g, z.real(), z.imag(), I), I, J);
    const auto [G0c, G1c] =
        split_components(eval_on_slice(g, z.real(), -z.imag(), I), I, J);
    const Complex u = F0 * G0z - F1 * std::conj(G1c);
    const Complex v = F0 * G1z + F1 * std::conj(G0c);
    return embed(u, I) + embed(v, I) * J.q();
}

namespace {

std::vector<std::pair<double, double>> grid_points(const GridSpec& g) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(g.nx) * g.ny);
    for (int ix = 0; ix < g.nx; ++ix) {
        const double x =
            g.nx == 1 ? g.x_min : g.x_min + (g.x_max - g.x_min) * ix / (g.nx - 1);
        for (int iy = 0; iy < g.ny; ++iy) {
            const double y =
                g.ny == 1 ? g.y_min : g.y_min + (g.y_max - g.y_min) * iy / (g.ny - 1);
            pts.emplace_back(x, y);
        }
    }
    return pts;
}

// Distance of v from the complex plane of I (span of {1, I}).
double off_slice_norm(const Quaternion& v, const ImaginaryUnit& I) {
    const double vI = v.x1 * I.q().x1 + v.x2 * I.q().x2 + v.x3 * I.q().x3;
    const double in_plane = v.x0 * v.x0 + vI * vI;
    return std::sqrt(std::max(0.0, v.norm_sq() - in_plane));
}

}  // namespace

IntrinsicVerdict is_intrinsic(const SliceFunction& f, IntrinsicMode mode,
                              const IntrinsicOptions& opt) {
    IntrinsicVerdict verdict;
    verdict.intrinsic = true;

    auto record = [&](double violation, const Quaternion& at, const char* what) {
        if (violation > verdict.worst) {
            verdict.worst = violation;
            verdict.witness = at;
            verdict.detail = what;
        }
        if (violation > opt.tol) verdict.intrinsic = false;
    };

    const auto pts = grid_points(opt.grid);

    switch (mode) {
        case IntrinsicMode::stem_real:
            for (const auto& [x, y] : pts) {
                const Quaternion a = f.stem_a(x, y), b = f.stem_b(x, y);
                const double va = std::sqrt(a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3);
                const double vb = std::sqrt(b.x1 * b.x1 + b.x2 * b.x2 + b.x3 * b.x3);
                record(std::max(va, vb), from_slice(x, y, opt.units[0]),
                       "stem component not real");
            }
            break;
        case IntrinsicMode::two_slices: {
            if (std::fabs(std::fabs(dot(opt.units[0], opt.units[1])) - 1.0) < 1e-12)
                throw std::invalid_argument("two_slices: units must differ (not antipodal)");
            for (int u = 0; u < 2; ++u)
                for (const auto& [x, y] : pts) {
                    const Quaternion q = from_slice(x, y, opt.units[u]);
                    record(off_slice_norm(f(q), opt.units[u]), q, "slice not preserved");
                }
            break;
        }
        case IntrinsicMode::three_conj: {
            const auto& u = opt.units;
            const double det =
                u[0].q().x1 * (u[1].q().x2 * u[2].q().x3 - u[1].q().x3 * u[2].q().x2) -
                u[0].q().x2 * (u[1].q().x1 * u[2].q().x3 - u[1].q().x3 * u[2].q().x1) +
                u[0].q().x3 * (u[1].q().x1 * u[2].q().x2 - u[1].q().x2 * u[2].q().x1);
            if (std::fabs(det) < 1e-10)
                throw std::invalid_argument("three_conj: units must be linearly independent");
            for (int k = 0; k < 3; ++k)
                for (const auto& [x, y] : pts) {
                    const Quaternion q = from_slice(x, y, u[k]);
                    const Quaternion qc = from_slice(x, -y, u[k]);
                    record((f(qc) - conj(f(q))).norm(), q, "conjugate symmetry fails");
                }
            break;
        }
        case IntrinsicMode::one_slice_conj:
            for (const auto& [x, y] : pts) {
                const Quaternion q = from_slice(x, y, opt.units[0]);
                const Quaternion qc = from_slice(x, -y, opt.units[0]);
                record(off_slice_norm(f(q), opt.units[0]), q, "slice not preserved");
                record((f(qc) - conj(f(q))).norm(), q, "conjugate symmetry fails");
            }
            break;
    }
    return verdict;
}

std::array<SliceFunction, 4> intrinsic_basis_decompose(const SliceFunction& f,
                                                       const ImaginaryUnit& I,
                                                       const ImaginaryUnit& J) {
    require_perpendicular(I, J);
    std::array<SliceFunction, 4> out;
    for (int l = 0; l < 4; ++l) {
        out[l] = SliceFunction::from_stem(
                     Stem{
                         [f, I, J, l](double x, double y) {
                             return Quaternion{basis_components(f.stem_a(x, y), I, J)[l]};
                         },
                         [f, I, J, l](double x, double y) {
                             return Quaternion{basis_components(f.stem_b(x, y), I, J)[l]};
                         },
                     },
                     FnTag::intrinsic);
    }
    return out;
}

std::vector<Quaternion> star_coeffs(const std::vector<Quaternion>& a,
                                    const std::vector<Quaternion>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Quaternion> c(a.size() + b.size() - 1);
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t m = 0; m < b.size(); ++m) c[n + m] += a[n] * b[m];
    return c;
}

}  // namespace qfock
