#include <doctest.h>

#include <cmath>

#include "paulipt/contour.hpp"
#include "paulipt/pt_classifier.hpp"

using namespace paulipt;

TEST_CASE("contour of s = xy traces both axes") {
    ContourSet cs = marching_squares(s_field(preset(Preset::P1)), 0.0, {-2, 2, -2, 2}, 256);
    REQUIRE(!cs.polylines.empty());
    // every vertex lies on one of the coordinate axes
    for (const auto& line : cs.polylines)
        for (const auto& v : line)
            CHECK(std::min(std::abs(v[0]), std::abs(v[1])) < 2e-2);
    // both axes are covered
    bool covers_x = false, covers_y = false;
    for (const auto& line : cs.polylines)
        for (const auto& v : line) {
            if (std::abs(v[1]) < 1e-9 && std::abs(v[0]) > 1.5) covers_x = true;
            if (std::abs(v[0]) < 1e-9 && std::abs(v[1]) > 1.5) covers_y = true;
        }
    CHECK(covers_x);
    CHECK(covers_y);
}

TEST_CASE("contour of h = x^2 - y^2 at level 1 passes through (+-1, 0)") {
    ContourSet cs = marching_squares(h_field(preset(Preset::P1)), 1.0, {-2, 2, -2, 2}, 256);
    bool near_pos = false, near_neg = false;
    for (const auto& line : cs.polylines)
        for (const auto& v : line) {
            if (std::hypot(v[0] - 1.0, v[1]) < 0.02) near_pos = true;
            if (std::hypot(v[0] + 1.0, v[1]) < 0.02) near_neg = true;
        }
    CHECK(near_pos);
    CHECK(near_neg);
}

TEST_CASE("vertices satisfy the level equation to cell-scaled accuracy") {
    BiPoly h3 = h_field(preset(Preset::P3));
    BiPolyD hd(h3);
    auto [dx, dy] = partials(h3);
    BiPolyD dxd(dx), dyd(dy);
    ContourSet cs = marching_squares(h3, 0.5, {-2, 2, -2, 2}, 256);
    double cell = 4.0 / 256;
    REQUIRE(!cs.polylines.empty());
    for (const auto& line : cs.polylines)
        for (const auto& v : line) {
            double grad = std::hypot(dxd.eval(v[0], v[1]), dyd.eval(v[0], v[1]));
            // linear interpolation residual: O(cell) * local gradient scale
            CHECK(std::abs(hd.eval(v[0], v[1]) - 0.5) <= 2.0 * cell * std::max(grad, 1.0));
        }
}

TEST_CASE("contour intersections approximate the locus") {
    PauliPoly p3 = preset(Preset::P3);
    BBox bb{-2, 2, -2, 2};
    int res = 512;
    double cell = 4.0 / res;
    for (double k : {-1.0, 0.0, 1.0}) {
        ContourSet sc = marching_squares(s_field(p3), 0.0, bb, res);
        ContourSet hc = marching_squares(h_field(p3), k, bb, res);
        auto xs = contour_intersections(sc, hc);
        LocusResult locus = pt_locus_at_level(p3, k);
        for (const auto& pt : locus.points) {
            double best = 1e300;
            for (const auto& q : xs) best = std::min(best, std::hypot(q[0] - pt.x, q[1] - pt.y));
            CHECK(best <= 2.0 * cell);
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(marching_squares(h_field(preset(Preset::P1)), 0.0, {-2, 2, -2, 2}, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(marching_squares(h_field(preset(Preset::P1)), 0.0, {2, -2, -2, 2}, 64),
                    DegenerateBox);
}
