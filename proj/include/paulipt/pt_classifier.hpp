#pragma once

#include <vector>

#include "paulipt/bipoly.hpp"
#include "paulipt/pauli_poly.hpp"

namespace paulipt {

struct ConstantDeterminant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class PTTag { NotPTSymmetric, UnbrokenPT, BrokenPT };
enum class SymmetryNote { ConjugateOnly, ConjugateAndParity };
enum class Axis { X, Y };

const char* to_string(PTTag tag);

struct PTPoint {
    double x = 0.0, y = 0.0;
    double s_val = 0.0, h_val = 0.0, h0R = 0.0, h0I = 0.0;
    PTTag tag = PTTag::NotPTSymmetric;
    bool hermitian = false;
    EigenPair eigenvalues{};
    int multiplicity = 1;
};

enum class LocusKind { Finite, WholePlane, Empty };

struct LocusResult {
    double k = 0.0;
    LocusKind kind = LocusKind::Finite;
    std::vector<PTPoint> points;
    std::string source_poly;
    SymmetryNote symmetry_note = SymmetryNote::ConjugateOnly;
};

inline constexpr double kPointTol = 1e-9;

PTPoint classify_point(const PauliPoly& p, double x, double y, double tol = kPointTol);

/// Level locus {z : s(z) = 0, h(z) = k}, computed as the roots of g(z) - k.
/// When g is constant the result carries kind WholePlane (g == k) or Empty.
LocusResult pt_locus_at_level(const PauliPoly& p, double k, double tol = kPointTol);

/// Zeros of the matrix polynomial (roots of det), classified.
std::vector<PTPoint> zeros(const PauliPoly& p, double tol = kPointTol);

std::vector<PTPoint> axis_scan(const PauliPoly& p, Axis axis, double lo, double hi, int n,
                               double tol = kPointTol);

/// Sort by (atan2(y,x), hypot(x,y)) ascending, ties by multiplicity descending.
void sort_canonical(std::vector<PTPoint>& pts);

}  // namespace paulipt
