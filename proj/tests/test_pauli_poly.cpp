#include <doctest.h>

#include <cmath>
#include <random>

#include "paulipt/pauli_poly.hpp"

using namespace paulipt;
using cplx = std::complex<double>;

TEST_CASE("presets") {
    PauliPoly p3 = preset(Preset::P3);
    CHECK(p3.c0 == UniPoly::constant(CRat{1}));
    CHECK(p3.c1 == UniPoly::monomial(1));
    CHECK(p3.c2 == UniPoly::monomial(2));
    CHECK(p3.c3 == UniPoly::monomial(3));

    PauliPoly pt2 = preset("Pt2");
    CHECK(pt2.c0 == UniPoly::monomial(1));
    CHECK(pt2.c1 == UniPoly::monomial(2));
    CHECK(pt2.c2 == UniPoly::constant(CRat{1}));
    CHECK(pt2.c3.is_zero());

    PauliPoly q10 = preset("Q10");
    CHECK(q10.c0.is_zero());
    CHECK(q10.c1 == UniPoly::monomial(8));
    CHECK(q10.c2 == UniPoly::monomial(9));
    CHECK(q10.c3 == UniPoly::monomial(10));

    CHECK_THROWS_AS(preset("P9"), UnknownPreset);
}

TEST_CASE("from_components") {
    PauliPoly p1 = from_components(UniPoly::constant(CRat{1}), UniPoly::monomial(1),
                                   UniPoly::zero(), UniPoly::zero());
    CHECK(p1.c0 == preset(Preset::P1).c0);
    CHECK(p1.c1 == preset(Preset::P1).c1);

    CHECK_NOTHROW(from_components(UniPoly::zero(), UniPoly::zero(), UniPoly::zero(),
                                  UniPoly::constant(CRat{1})));
    CHECK_THROWS_AS(
        from_components(UniPoly::zero(), UniPoly::zero(), UniPoly::zero(), UniPoly::zero()),
        AllZero);
}

TEST_CASE("matrix entries") {
    cplx z{0.3, 0.7};
    Mat2 m1 = matrix_at(preset(Preset::P1), z);
    CHECK(m1[0][0] == cplx{1, 0});
    CHECK(m1[0][1] == z);
    CHECK(m1[1][0] == z);
    CHECK(m1[1][1] == cplx{1, 0});

    Mat2 m3 = matrix_at(preset(Preset::P3), z);
    cplx i{0, 1};
    CHECK(std::abs(m3[0][0] - (1.0 + z * z * z)) < 1e-15);
    CHECK(std::abs(m3[0][1] - (z - i * z * z)) < 1e-15);
    CHECK(std::abs(m3[1][0] - (z + i * z * z)) < 1e-15);
    CHECK(std::abs(m3[1][1] - (1.0 - z * z * z)) < 1e-15);

    Mat2 mq = matrix_at(preset(Preset::Q10), {0, 0});
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(mq[r][c] == cplx{0, 0});
}

TEST_CASE("g, det and trace polynomials") {
    CHECK(g_poly(preset(Preset::P1)) == UniPoly::monomial(2));
    CHECK(g_poly(preset(Preset::P3)) == UniPoly::from_ints({0, 0, 1, 0, 1, 0, 1}));
    CHECK(g_poly(preset(Preset::Pt2)) == UniPoly::from_ints({1, 0, 0, 0, 1}));

    CHECK(det_poly(preset(Preset::P2)) == UniPoly::from_ints({1, 0, -1, 0, -1}));
    CHECK(det_poly(preset(Preset::Pt3)) == UniPoly::from_ints({-1, 0, 1, 0, -1, 0, -1}));
    CHECK(trace_poly(preset(Preset::Pt1)) == UniPoly::from_ints({0, 2}));

    // det = c0^2 - g as exact polynomials, every preset
    for (const auto& name : preset_names()) {
        PauliPoly p = preset(name);
        CHECK(det_poly(p) == p.c0 * p.c0 - g_poly(p));
    }
}

TEST_CASE("eigenvalues") {
    for (double x : {-1.5, -0.5, 0.5, 1.5}) {
        EigenPair e1 = eigenvalues_at(preset(Preset::P1), {x, 0});
        CHECK(std::abs(e1.e_minus - cplx{1 - std::abs(x), 0}) < 1e-12);
        CHECK(std::abs(e1.e_plus - cplx{1 + std::abs(x), 0}) < 1e-12);

        EigenPair e2 = eigenvalues_at(preset(Preset::P2), {x, 0});
        double w = std::abs(x) * std::sqrt(1 + x * x);
        CHECK(std::abs(e2.e_plus - cplx{1 + w, 0}) < 1e-12);
    }
}

TEST_CASE("hermitian and normal point tests") {
    CHECK(is_hermitian_at(preset(Preset::P3), {0.7, 0}, 1e-10));
    CHECK(is_normal_at(preset(Preset::P1), {0, 0.9}, 1e-10));
    CHECK_FALSE(is_hermitian_at(preset(Preset::P2), {0.3, 0.4}, 1e-10));
    CHECK_FALSE(is_normal_at(preset(Preset::P2), {0.3, 0.4}, 1e-10));
}

TEST_CASE("property: determinant and eigen identities at random points") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& name : preset_names()) {
        PauliPoly p = preset(name);
        UniPoly dp = det_poly(p), tp = trace_poly(p);
        for (int i = 0; i < 100; ++i) {
            cplx z{u(rng), u(rng)};
            if (std::abs(z) > 2.0) continue;
            Mat2 m = matrix_at(p, z);
            cplx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            cplx det_p = dp.eval(z);
            CHECK(std::abs(det - det_p) <= 1e-10 * (1.0 + std::abs(det)));

            EigenPair e = eigenvalues_at(p, z);
            cplx tr = tp.eval(z);
            CHECK(std::abs(e.e_minus + e.e_plus - tr) <= 1e-10 * (1.0 + std::abs(tr)));
            CHECK(std::abs(e.e_minus * e.e_plus - det) <= 1e-10 * (1.0 + std::abs(det)));
        }
    }
}

TEST_CASE("property: Pauli components recovered from matrix entries") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    cplx i{0, 1};
    for (const auto& name : preset_names()) {
        PauliPoly p = preset(name);
        for (int t = 0; t < 20; ++t) {
            cplx z{u(rng), u(rng)};
            Mat2 m = matrix_at(p, z);
            CHECK(std::abs((m[0][0] + m[1][1]) / 2.0 - p.c0.eval(z)) < 1e-12);
            CHECK(std::abs((m[0][1] + m[1][0]) / 2.0 - p.c1.eval(z)) < 1e-12);
            CHECK(std::abs((m[1][0] - m[0][1]) * (-i) / 2.0 - p.c2.eval(z)) < 1e-12);
            CHECK(std::abs((m[0][0] - m[1][1]) / 2.0 - p.c3.eval(z)) < 1e-12);
        }
    }
}

TEST_CASE("property: hermitian on the real axis for real-coefficient presets") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& name : preset_names()) {
        PauliPoly p = preset(name);
        bool all_real = p.c0.has_real_coeffs() && p.c1.has_real_coeffs() &&
                        p.c2.has_real_coeffs() && p.c3.has_real_coeffs();
        if (!all_real) continue;
        for (int t = 0; t < 50; ++t) CHECK(is_hermitian_at(p, {u(rng), 0}, 1e-10));
    }
}
