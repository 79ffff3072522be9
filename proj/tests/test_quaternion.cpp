#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qfock/experiments.hpp"
#include "qfock/quaternion.hpp"

using namespace qfock;

TEST_CASE("multiplication table and a hand product") {
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();

    CHECK(approx_equal(i * j, k, 0.0));
    CHECK(approx_equal(j * i, -k, 0.0));
    CHECK(approx_equal(j * k, i, 0.0));
    CHECK(approx_equal(k * j, -i, 0.0));
    CHECK(approx_equal(k * i, j, 0.0));
    CHECK(approx_equal(i * k, -j, 0.0));
    CHECK(approx_equal(i * i, -Quaternion::one(), 0.0));

    const Quaternion lhs = (Quaternion::one() + i) * (Quaternion::one() + j);
    CHECK(approx_equal(lhs, Quaternion{1, 1, 1, 1}, 0.0));
}

TEST_CASE("conjugation is an anti-homomorphism and the norm is multiplicative") {
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = rng.quaternion(3.0);
        const Quaternion b = rng.quaternion(3.0);
        const Quaternion lhs = conj(a * b);
        const Quaternion rhs = conj(b) * conj(a);
        CHECK(approx_equal(lhs, rhs, 1e-13 * (1.0 + lhs.norm())));
        CHECK(std::abs(abs(a * b) - abs(a) * abs(b)) <=
              1e-13 * (1.0 + abs(a) * abs(b)));
    }
}

TEST_CASE("multiplication is associative on random triples") {
    Rng rng(7);
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        const Quaternion a = rng.quaternion(2.0);
        const Quaternion b = rng.quaternion(2.0);
        const Quaternion c = rng.quaternion(2.0);
        const Quaternion lhs = (a * b) * c;
        const Quaternion rhs = a * (b * c);
        const double scale = std::max(1.0, lhs.norm());
        worst = std::max(worst, (lhs - rhs).norm() / scale);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("inverse recovers the unit") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Quaternion q = rng.quaternion(2.0);
        if (q.norm() < 1e-6) q += Quaternion::one();
        CHECK(approx_equal(q * inverse(q), Quaternion::one(), 1e-12));
        CHECK(approx_equal(inverse(q) * q, Quaternion::one(), 1e-12));
    }
}

TEST_CASE("imaginary units normalize and reject near-real input") {
    const ImaginaryUnit u(2.0, 0.0, 0.0);
    CHECK(approx_equal(u.q(), Quaternion::i(), 0.0));
    CHECK(std::abs(u.q().norm() - 1.0) <= 1e-15);

    const ImaginaryUnit v(1.0, 1.0, 1.0);
    CHECK(std::abs(v.q().norm() - 1.0) <= 1e-15);
    CHECK(std::abs(v.vec()[0] - 1.0 / std::sqrt(3.0)) <= 1e-15);

    CHECK_THROWS_AS(ImaginaryUnit(0.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(ImaginaryUnit(1e-15, 0.0, 0.0), std::domain_error);
}

TEST_CASE("slice decomposition and recomposition round trip") {
    const Quaternion q{1, 1, 1, 1};
    const SlicePoint sp = slice_decompose(q);
    CHECK(sp.x == doctest::Approx(1.0));
    CHECK(sp.y == doctest::Approx(std::sqrt(3.0)));
    const auto vec = sp.unit.vec();
    CHECK(vec[0] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(vec[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(vec[2] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(approx_equal(sp.recompose(), q, 1e-14));

    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const Quaternion r = rng.quaternion(4.0);
        CHECK(approx_equal(slice_decompose(r).recompose(), r, 1e-13));
    }
}

TEST_CASE("points within rounding of the real axis decompose as real") {
    // Sampling circles that graze the axis produces imaginary parts at the
    // rounding floor; these must evaluate as real points, not throw.
    const Quaternion q{0.5, 1e-16, 0.0, 0.0};
    const SlicePoint sp = slice_decompose(q);
    CHECK(sp.y == 0.0);
    CHECK(sp.x == doctest::Approx(0.5));
    CHECK(approx_equal(sp.recompose(), Quaternion{0.5, 0, 0, 0}, 1e-15));
}

TEST_CASE("slice embedding accepts either sign of the ordinate") {
    const Quaternion a = from_slice(0.3, -0.7, ImaginaryUnit::j());
    CHECK(approx_equal(a, Quaternion{0.3, 0.0, -0.7, 0.0}, 0.0));
    const Quaternion b = from_slice(0.3, 0.7, ImaginaryUnit(0, -1, 0));
    CHECK(approx_equal(a, b, 1e-15));

    const Quaternion e = embed(std::complex<double>(2.0, 3.0), ImaginaryUnit::j());
    CHECK(approx_equal(e, Quaternion{2, 0, 3, 0}, 0.0));
}

TEST_CASE("orthogonal unit construction") {
    CHECK(dot(orthogonal_unit(ImaginaryUnit::i()), ImaginaryUnit::j()) ==
          doctest::Approx(1.0));
    CHECK(dot(orthogonal_unit(ImaginaryUnit::j()), ImaginaryUnit::k()) ==
          doctest::Approx(1.0));

    const ImaginaryUnit diag(1, 1, 0);
    const ImaginaryUnit perp = orthogonal_unit(diag);
    CHECK(std::abs(dot(diag, perp)) <= 1e-14);
    CHECK(perp.vec()[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(perp.vec()[1] == doctest::Approx(-1.0 / std::sqrt(2.0)));

    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const ImaginaryUnit I = rng.unit();
        const ImaginaryUnit P = orthogonal_unit(I);
        CHECK(std::abs(dot(I, P)) <= 1e-12);
        CHECK(std::abs(P.q().norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("basis components invert the frame expansion") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const Quaternion q = rng.quaternion(2.0);
        const ImaginaryUnit I = rng.unit();
        const ImaginaryUnit J = orthogonal_unit(I);
        const auto c = basis_components(q, I, J);
        const Quaternion back = Quaternion::one() * c[0] + I.q() * c[1] +
                                J.q() * c[2] + (I.q() * J.q()) * c[3];
        CHECK(approx_equal(back, q, 1e-12));

        const auto [F, G] = split_components(q, I, J);
        const Quaternion back2 =
            embed(F, I) + embed(G, I) * J.q();
        CHECK(approx_equal(back2, q, 1e-12));
    }
}
