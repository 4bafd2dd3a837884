#pragma once

#include <array>
#include <vector>

#include "paulipt/bipoly.hpp"

namespace paulipt {

struct DegenerateBox : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BBox {
    double xmin = -2.0, xmax = 2.0, ymin = -2.0, ymax = 2.0;
};

enum class FieldKind { S, H, H0I, DetRe, DetIm };

const char* to_string(FieldKind f);

using Polyline = std::vector<std::array<double, 2>>;

struct ContourSet {
    double level = 0.0;
    FieldKind field = FieldKind::S;
    std::vector<Polyline> polylines;
    BBox bbox;
    int resolution = 0;
};

/// Marching squares over a (resolution x resolution) cell grid; saddle cells
/// are resolved by the cell-center sign. Segments are stitched into
/// polylines along shared grid edges.
ContourSet marching_squares(const BiPoly& f, double level, BBox bbox, int resolution);

/// All pairwise intersection points between segments of the two contour sets.
std::vector<std::array<double, 2>> contour_intersections(const ContourSet& a,
                                                         const ContourSet& b);

}  // namespace paulipt
