#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

namespace qfock {

// A quaternion with real components over the basis 1, i, j, k.
// Multiplication follows i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    double x0 = 0.0;  // real part
    double x1 = 0.0;  // i component
    double x2 = 0.0;  // j component
    double x3 = 0.0;  // k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : x0(r) {}
    constexpr Quaternion(double r, double a, double b, double c)
        : x0(r), x1(a), x2(b), x3(c) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        x0 *= s; x1 *= s; x2 *= s; x3 *= s;
        return *this;
    }

    constexpr double re() const { return x0; }
    constexpr std::array<double, 3> im() const { return {x1, x2, x3}; }

    double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm_sq()); }
    double im_norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

inline double abs(const Quaternion& q) { return q.norm(); }

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
    return conj(q) / n2;
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
    return (a - b).norm() <= tol;
}

// A purely imaginary unit quaternion: Re(u) = 0, |u| = 1.
// Construction normalizes the imaginary part and rejects near-zero input.
class ImaginaryUnit {
public:
    explicit ImaginaryUnit(const Quaternion& q) {
        const double n = std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3);
        if (n < 1e-14)
            throw std::domain_error("imaginary unit needs a nonzero imaginary part");
        u_ = Quaternion{0.0, q.x1 / n, q.x2 / n, q.x3 / n};
    }
    ImaginaryUnit(double a, double b, double c) : ImaginaryUnit(Quaternion{0, a, b, c}) {}

    static ImaginaryUnit i() { return ImaginaryUnit(1, 0, 0); }
    static ImaginaryUnit j() { return ImaginaryUnit(0, 1, 0); }
    static ImaginaryUnit k() { return ImaginaryUnit(0, 0, 1); }

    const Quaternion& q() const { return u_; }
    operator const Quaternion&() const { return u_; }

    std::array<double, 3> vec() const { return {u_.x1, u_.x2, u_.x3}; }

    ImaginaryUnit operator-() const { return ImaginaryUnit(-u_.x1, -u_.x2, -u_.x3); }

private:
    Quaternion u_;
};

inline double dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return a.q().x1 * b.q().x1 + a.q().x2 * b.q().x2 + a.q().x3 * b.q().x3;
}

// q = x + y*unit with y >= 0.  For real q the unit is the designated
// default i (the choice is immaterial: the real axis carries no volume in
// any of the integrals downstream).
struct SlicePoint {
    double x;
    double y;
    ImaginaryUnit unit;

    Quaternion recompose() const { return Quaternion{x} + y * unit.q(); }
};

inline SlicePoint slice_decompose(const Quaternion& q) {
    const double y = q.im_norm();
    // The cutoff matches the ImaginaryUnit constructor's rejection level:
    // anything closer to the real axis evaluates as a real point, so the
    // two never disagree about which imaginary parts are representable.
    if (y < 1e-14) return {q.x0, 0.0, ImaginaryUnit::i()};
    return {q.x0, y, ImaginaryUnit(q.x1, q.x2, q.x3)};
}

// Build the quaternion x + y*I from slice coordinates (y of any sign is
// accepted; x + (-y)I and x + y(-I) are the same point).
inline Quaternion from_slice(double x, double y, const ImaginaryUnit& I) {
    return Quaternion{x} + y * I.q();
}

// Map a complex number to the slice plane of I: a + bi  ->  a + b*I.
inline Quaternion embed(const std::complex<double>& z, const ImaginaryUnit& I) {
    return from_slice(z.real(), z.imag(), I);
}

// Deterministic perpendicular unit.  Construction: take the cyclic
// successor (i->j->k->i) of the dominant component axis of I (ties break
// toward the earlier axis), orthogonalize against I, normalize, and orient
// the sign so the first nonzero component in (i,j,k) order is positive.
inline ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
    const auto v = I.vec();
    int dominant = 0;
    for (int a = 1; a < 3; ++a)
        if (std::fabs(v[a]) > std::fabs(v[dominant])) dominant = a;
    const int succ = (dominant + 1) % 3;

    std::array<double, 3> p{0, 0, 0};
    p[succ] = 1.0;
    const double proj = p[0] * v[0] + p[1] * v[1] + p[2] * v[2];
    std::array<double, 3> w{p[0] - proj * v[0], p[1] - proj * v[1], p[2] - proj * v[2]};
    const double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    for (auto& c : w) c /= n;
    for (int a = 0; a < 3; ++a) {
        if (std::fabs(w[a]) > 1e-13) {
            if (w[a] < 0)
                for (auto& c : w) c = -c;
            break;
        }
    }
    return ImaginaryUnit(w[0], w[1], w[2]);
}

// Components of q over the orthonormal real basis {1, I, J, IJ}; requires
// J perpendicular to I.  Inverse of (c0,c1,c2,c3) -> c0 + c1 I + c2 J + c3 IJ.
inline std::array<double, 4> basis_components(const Quaternion& q,
                                              const ImaginaryUnit& I,
                                              const ImaginaryUnit& J) {
    const Quaternion bI = I.q(), bJ = J.q(), bIJ = bI * bJ;
    auto dot4 = [](const Quaternion& a, const Quaternion& b) {
        return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
    };
    return {q.x0, dot4(q, bI), dot4(q, bJ), dot4(q, bIJ)};
}

// The slice-splitting view of q in the frame (I, J): q = F + G J with
// F, G in the complex plane of I.
inline std::pair<std::complex<double>, std::complex<double>>
split_components(const Quaternion& q, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    const auto c = basis_components(q, I, J);
    return {std::complex<double>(c[0], c[1]), std::complex<double>(c[2], c[3])};
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
}

}  // namespace qfock
