#include "paulipt/pauli_poly.hpp"

#include <cmath>

namespace paulipt {

namespace {
UniPoly zpow(int j) { return UniPoly::monomial(j); }
}

PauliPoly preset(Preset which) {
    const UniPoly one = UniPoly::constant(CRat{1});
    const UniPoly z = zpow(1);
    switch (which) {
        case Preset::P1:  return {one, z, UniPoly::zero(), UniPoly::zero(), "P1"};
        case Preset::P2:  return {one, z, zpow(2), UniPoly::zero(), "P2"};
        case Preset::P3:  return {one, z, zpow(2), zpow(3), "P3"};
        case Preset::Pt1: return {z, one, UniPoly::zero(), UniPoly::zero(), "Pt1"};
        case Preset::Pt2: return {z, zpow(2), one, UniPoly::zero(), "Pt2"};
        case Preset::Pt3: return {z, zpow(2), zpow(3), one, "Pt3"};
        case Preset::Q10: return {UniPoly::zero(), zpow(8), zpow(9), zpow(10), "Q10"};
    }
    throw UnknownPreset("unknown preset enum");
}

const std::array<std::string, 7>& preset_names() {
    static const std::array<std::string, 7> names{"P1", "P2", "P3", "Pt1", "Pt2", "Pt3", "Q10"};
    return names;
}

PauliPoly preset(std::string_view name) {
    if (name == "P1") return preset(Preset::P1);
    if (name == "P2") return preset(Preset::P2);
    if (name == "P3") return preset(Preset::P3);
    if (name == "Pt1") return preset(Preset::Pt1);
    if (name == "Pt2") return preset(Preset::Pt2);
    if (name == "Pt3") return preset(Preset::Pt3);
    if (name == "Q10") return preset(Preset::Q10);
    throw UnknownPreset("unknown preset '" + std::string(name) + "'");
}

PauliPoly from_components(UniPoly c0, UniPoly c1, UniPoly c2, UniPoly c3, std::string name) {
    if (c0.is_zero() && c1.is_zero() && c2.is_zero() && c3.is_zero())
        throw AllZero("from_components: all components zero");
    return {std::move(c0), std::move(c1), std::move(c2), std::move(c3), std::move(name)};
}

Mat2 matrix_at(const PauliPoly& p, std::complex<double> z) {
    const std::complex<double> i{0.0, 1.0};
    auto v0 = p.c0.eval(z), v1 = p.c1.eval(z), v2 = p.c2.eval(z), v3 = p.c3.eval(z);
    return {{{v0 + v3, v1 - i * v2}, {v1 + i * v2, v0 - v3}}};
}

UniPoly g_poly(const PauliPoly& p) {
    return p.c1 * p.c1 + p.c2 * p.c2 + p.c3 * p.c3;
}

UniPoly det_poly(const PauliPoly& p) { return p.c0 * p.c0 - g_poly(p); }

UniPoly trace_poly(const PauliPoly& p) { return scale(p.c0, CRat{2}); }

EigenPair eigenvalues_at(const PauliPoly& p, std::complex<double> z) {
    std::complex<double> g = g_poly(p).eval(z);
    // principal sqrt: nonnegative real part; positive imaginary part on the
    // negative real axis (std::sqrt's convention)
    std::complex<double> s = std::sqrt(g);
    std::complex<double> c0 = p.c0.eval(z);
    return {c0 - s, c0 + s};
}

bool is_hermitian_at(const PauliPoly& p, std::complex<double> z, double tol) {
    Mat2 m = matrix_at(p, z);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (std::abs(m[r][c] - std::conj(m[c][r])) > tol) return false;
    return true;
}

bool is_normal_at(const PauliPoly& p, std::complex<double> z, double tol) {
    Mat2 m = matrix_at(p, z);
    Mat2 mh{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) mh[r][c] = std::conj(m[c][r]);
    auto mul = [](const Mat2& a, const Mat2& b) {
        Mat2 out{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        return out;
    };
    Mat2 lhs = mul(m, mh), rhs = mul(mh, m);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (std::abs(lhs[r][c] - rhs[r][c]) > tol) return false;
    return true;
}

}  // namespace paulipt
