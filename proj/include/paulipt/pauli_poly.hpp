#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "paulipt/unipoly.hpp"

namespace paulipt {

struct UnknownPreset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AllZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

/// 2x2 matrix polynomial P(z) = c0*sigma0 + c1*sigma1 + c2*sigma2 + c3*sigma3.
struct PauliPoly {
    UniPoly c0, c1, c2, c3;
    std::string name;
};

enum class Preset { P1, P2, P3, Pt1, Pt2, Pt3, Q10 };

PauliPoly preset(Preset which);
PauliPoly preset(std::string_view name);  // throws UnknownPreset
const std::array<std::string, 7>& preset_names();

PauliPoly from_components(UniPoly c0, UniPoly c1, UniPoly c2, UniPoly c3,
                          std::string name = "");  // throws AllZero

Mat2 matrix_at(const PauliPoly& p, std::complex<double> z);

/// g(z) = c1^2 + c2^2 + c3^2; det = c0^2 - g, trace = 2*c0.
UniPoly g_poly(const PauliPoly& p);
UniPoly det_poly(const PauliPoly& p);
UniPoly trace_poly(const PauliPoly& p);

struct EigenPair {
    std::complex<double> e_minus, e_plus;  // c0(z) -/+ principal sqrt of g(z)
};

EigenPair eigenvalues_at(const PauliPoly& p, std::complex<double> z);

bool is_hermitian_at(const PauliPoly& p, std::complex<double> z, double tol);
bool is_normal_at(const PauliPoly& p, std::complex<double> z, double tol);

}  // namespace paulipt
