#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfock/quaternion.hpp"

namespace qfock {

using Complex = std::complex<double>;

// Stem pair of a slice function: f(x + yI) = a(x,y) + I b(x,y) with a even
// and b odd in y.  Both components take values in the quaternions.
struct Stem {
    std::function<Quaternion(double, double)> a;
    std::function<Quaternion(double, double)> b;
};

enum class FnTag { regular_poly, intrinsic, generic };

// A function on the quaternions determined slice-wise by a stem pair.
// Polynomials in the slice variable with right-hand coefficients
// (f(q) = sum_n q^n c_n) carry their coefficient list as a fast path; the
// generic representation is a pair of stem closures.
class SliceFunction {
public:
    SliceFunction() : SliceFunction(constant(Quaternion{})) {}

    static SliceFunction from_stem(Stem stem, FnTag tag = FnTag::generic);
    static SliceFunction poly(std::vector<Quaternion> coeffs);
    static SliceFunction constant(const Quaternion& c);
    static SliceFunction identity();  // q -> q

    Quaternion operator()(const Quaternion& q) const;

    // Stem components, valid on the whole (x, y) plane.
    Quaternion stem_a(double x, double y) const;
    Quaternion stem_b(double x, double y) const;

    // The stem closures themselves (for transforms that rebuild functions
    // out of processed stems without holding the whole SliceFunction).
    std::function<Quaternion(double, double)> stem_a_fn() const;
    std::function<Quaternion(double, double)> stem_b_fn() const;

    const std::optional<std::vector<Quaternion>>& coeffs() const { return coeffs_; }
    FnTag tag() const { return tag_; }
    SliceFunction with_tag(FnTag t) const;

    // Pointwise combinations (stem-level, stays a slice function).
    SliceFunction operator+(const SliceFunction& g) const;
    SliceFunction operator-(const SliceFunction& g) const;
    SliceFunction scaled(double s) const;
    // Right multiplication by a constant: q -> f(q) * c.
    SliceFunction times_const(const Quaternion& c) const;

private:
    SliceFunction(Stem stem, std::optional<std::vector<Quaternion>> coeffs, FnTag tag)
        : stem_(std::move(stem)), coeffs_(std::move(coeffs)), tag_(tag) {}

    Stem stem_;
    std::optional<std::vector<Quaternion>> coeffs_;
    FnTag tag_;
};

// Value of f on the slice of I at x + yI without building a quaternion
// first (y may have either sign).
Quaternion eval_on_slice(const SliceFunction& f, double x, double y, const ImaginaryUnit& I);

// Recover f(x + yI) from the two values f(x + yJ) and f(x - yJ):
//   f(x + yI) = (1 - I J)/2 * f(x + yJ) + (1 + I J)/2 * f(x - yJ).
Quaternion represent_from_slice(const Quaternion& fJ_plus, const Quaternion& fJ_minus,
                                const ImaginaryUnit& J, const ImaginaryUnit& I);

// Build a slice function from its restriction to one slice plane.  fI
// receives z = x + iy standing for x + yI.  The stem is
//   a(x,y) = (fI(z) + fI(conj z))/2,   b(x,y) = I (fI(conj z) - fI(z))/2,
// and the restriction of the result back to the slice of I reproduces fI.
SliceFunction extend_from_slice(std::function<Quaternion(Complex)> fI,
                                const ImaginaryUnit& I);

// Split of f on the slice of I against a perpendicular J:
// f(x + yI) = F(z) + G(z) J with F, G valued in the complex plane of I.
// Throws if J is not perpendicular to I.
struct SliceSplit {
    std::function<Complex(Complex)> F;
    std::function<Complex(Complex)> G;
};
SliceSplit split(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

// Slice product via stems: stem(f * g) = (a1 a2 - b1 b2, a1 b2 + b1 a2).
// When both operands are polynomials the coefficient convolution is used
// (the two agree; the tests cross-check).  Associative, distributive,
// non-commutative; intrinsic left factors reduce to the pointwise product.
SliceFunction star_product(const SliceFunction& f, const SliceFunction& g);

// Independent route: value of (f * g) at z on the slice of I computed from
// the split components of f and g at z and conj(z):
//   (f*g)_I(z) = [F0(z)G0(z) - F1(z) conj(G1(conj z))]
//              + [F0(z)G1(z) + F1(z) conj(G0(conj z))] J.
Quaternion star_slicewise(const SliceFunction& f, const SliceFunction& g,
                          const ImaginaryUnit& I, Complex z);

// Rectangular sampling grid used by the predicate checks.
struct GridSpec {
    double x_min = -2.0, x_max = 2.0;
    int nx = 13;
    double y_min = 0.0, y_max = 2.0;
    int ny = 7;
};

enum class IntrinsicMode { stem_real, two_slices, three_conj, one_slice_conj };

struct IntrinsicVerdict {
    bool intrinsic = false;
    double worst = 0.0;        // largest violation seen on the grid
    Quaternion witness;        // sample point realizing the worst violation
    std::string detail;
};

struct IntrinsicOptions {
    GridSpec grid;
    double tol = 1e-10;
    // Units consumed by the slice-based modes: two_slices uses units[0..1],
    // three_conj uses units[0..2] (must be linearly independent),
    // one_slice_conj uses units[0].
    std::array<ImaginaryUnit, 3> units = {ImaginaryUnit::i(), ImaginaryUnit::j(),
                                          ImaginaryUnit::k()};
};

// Grid decision of slice-intrinsicness under the selected criterion:
//   stem_real      - both stem components real-valued;
//   two_slices     - f preserves the slices of units[0] and units[1];
//   three_conj     - f(conj z) = conj(f(z)) on three independent slices;
//   one_slice_conj - one slice both preserved and conjugate-symmetric.
// The verdict holds on the grid only; no symbolic claim is made.
IntrinsicVerdict is_intrinsic(const SliceFunction& f, IntrinsicMode mode,
                              const IntrinsicOptions& opt = {});

// Decomposition f = h0 + h1 I + h2 J + h3 (IJ) with every h_l intrinsic
// (real stems); the constants multiply from the right.
std::array<SliceFunction, 4> intrinsic_basis_decompose(const SliceFunction& f,
                                                       const ImaginaryUnit& I,
                                                       const ImaginaryUnit& J);

// Coefficient convolution of polynomial slice functions (exact star
// product in the polynomial normal form).
std::vector<Quaternion> star_coeffs(const std::vector<Quaternion>& a,
                                    const std::vector<Quaternion>& b);

}  // namespace qfock
