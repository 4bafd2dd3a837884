#pragma once

#include "paulipt/pt_classifier.hpp"

namespace paulipt {

struct EmptyInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ConicKind {
    Circle,
    EllipseAxisAligned,
    HyperbolaXOpening,
    HyperbolaYOpening,
    TwoLinesThroughOrigin,
    AxisLine,
    SinglePoint,
    Empty,
    Unclassified
};

const char* to_string(ConicKind kind);

struct LocusClass {
    ConicKind kind = ConicKind::Unclassified;
    double a = 0.0, b = 0.0;   // semi-axes (ellipse/hyperbola)
    double r = 0.0;            // circle radius
    double slope = 0.0;        // two lines y = +/- slope * x
    Axis axis = Axis::X;       // which axis for AxisLine
    double max_residual = 0.0;
};

inline constexpr double kConicTol = 1e-6;
inline constexpr double kTransitionTol = 1e-6;

/// Classify the finite point set of a level locus onto an axis-aligned conic,
/// exploiting the conjugate/parity symmetry of the point set.
LocusClass classify_locus(const LocusResult& locus);

struct TransitionResult {
    double k_star = 0.0;
    double k_lo = 0.0, k_hi = 0.0;  // final bracket
    ConicKind kind_below = ConicKind::Unclassified;
    ConicKind kind_above = ConicKind::Unclassified;
    int iterations = 0;
};

/// Bisect on the conic classification to locate the level where the locus
/// changes type. The bracket must not straddle k = 0 for the
/// ellipse/hyperbola transitions (the degenerate two-line level).
TransitionResult find_transition(const PauliPoly& p, double k_lo, double k_hi);

struct ReflectionReport {
    bool holds = false;
    double max_deviation = 0.0;  // relative to k^(1/deg g)
    LocusResult plus, minus;
};

inline constexpr double kReflectTol = 1e-6;

/// Check whether the loci at +k and -k map onto each other under (x,y)->(y,x).
ReflectionReport reflection_check(const PauliPoly& p, double k);

}  // namespace paulipt
