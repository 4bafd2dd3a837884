#include <doctest.h>

#include <cmath>

#include "paulipt/conic.hpp"

using namespace paulipt;

TEST_CASE("P2 locus classifications") {
    LocusClass circle = classify_locus(pt_locus_at_level(preset(Preset::P2), -1.0));
    CHECK(circle.kind == ConicKind::Circle);
    CHECK(circle.r == doctest::Approx(1.0).epsilon(1e-9));

    LocusClass ellipse = classify_locus(pt_locus_at_level(preset(Preset::P2), 1.0));
    CHECK(ellipse.kind == ConicKind::EllipseAxisAligned);
    CHECK(ellipse.a == doctest::Approx(0.786151).epsilon(1e-5));
    CHECK(ellipse.b == doctest::Approx(1.27202).epsilon(1e-5));

    LocusClass line = classify_locus(pt_locus_at_level(preset(Preset::P2), -0.1));
    CHECK(line.kind == ConicKind::AxisLine);
    CHECK(line.axis == Axis::Y);
}

TEST_CASE("P3 locus classifications (figure ladder)") {
    LocusClass two_lines = classify_locus(pt_locus_at_level(preset(Preset::P3), 0.0));
    CHECK(two_lines.kind == ConicKind::TwoLinesThroughOrigin);
    CHECK(two_lines.slope == doctest::Approx(std::sqrt(3.0)).epsilon(1e-6));

    LocusClass ellipse = classify_locus(pt_locus_at_level(preset(Preset::P3), 1.0));
    CHECK(ellipse.kind == ConicKind::EllipseAxisAligned);
    CHECK(ellipse.a == doctest::Approx(0.737353).epsilon(1e-4));
    CHECK(ellipse.b == doctest::Approx(1.52).epsilon(1e-2));

    LocusClass hyper_x = classify_locus(pt_locus_at_level(preset(Preset::P3), 0.2));
    CHECK(hyper_x.kind == ConicKind::HyperbolaXOpening);
    CHECK(hyper_x.a == doctest::Approx(0.409047).epsilon(1e-4));
    // b from the through-points closure; the vertex pins a, the off-axis
    // points (+-0.504799, +-0.915687) then fix b
    CHECK(hyper_x.b == doctest::Approx(1.2662221).epsilon(1e-4));

    LocusClass hyper_y = classify_locus(pt_locus_at_level(preset(Preset::P3), -0.2));
    CHECK(hyper_y.kind == ConicKind::HyperbolaYOpening);
    CHECK(hyper_y.a == doctest::Approx(0.4042).epsilon(1e-3));
    CHECK(hyper_y.b == doctest::Approx(0.49544).epsilon(1e-3));

    LocusClass circle = classify_locus(pt_locus_at_level(preset(Preset::P3), -1.0));
    CHECK((circle.kind == ConicKind::Circle || circle.kind == ConicKind::EllipseAxisAligned));
}

TEST_CASE("classification edge cases") {
    LocusClass single = classify_locus(pt_locus_at_level(preset(Preset::Pt2), 1.0));
    CHECK(single.kind == ConicKind::SinglePoint);

    CHECK(classify_locus(pt_locus_at_level(preset(Preset::Pt1), 0.5)).kind == ConicKind::Empty);

    LocusResult empty_pts;
    CHECK_THROWS_AS(classify_locus(empty_pts), EmptyInput);

    // 20-point Q10 loci do not fit one axis-aligned conic
    LocusClass q = classify_locus(pt_locus_at_level(preset(Preset::Q10), 1.0));
    CHECK(q.kind == ConicKind::Unclassified);
}

TEST_CASE("conic residual bound holds for classified loci") {
    struct Case {
        Preset p;
        double k;
    } cases[] = {{Preset::P2, -1.0}, {Preset::P2, 1.0},  {Preset::P2, -0.1},
                 {Preset::P3, 0.2},  {Preset::P3, -0.2}, {Preset::P3, 1.0},
                 {Preset::P3, 0.0},  {Preset::P1, 1.0},  {Preset::P1, -1.0}};
    for (const auto& c : cases) {
        LocusClass cls = classify_locus(pt_locus_at_level(preset(c.p), c.k));
        CHECK(cls.kind != ConicKind::Unclassified);
        CHECK(cls.max_residual <= kConicTol);
    }
}

TEST_CASE("eigenvalue tags on P3 hyperbola branches") {
    // x-opening hyperbola locus: all unbroken; y-opening: all broken
    for (const auto& p : pt_locus_at_level(preset(Preset::P3), 0.2).points)
        CHECK(p.tag == PTTag::UnbrokenPT);
    for (const auto& p : pt_locus_at_level(preset(Preset::P3), -0.2).points)
        CHECK(p.tag == PTTag::BrokenPT);
}

TEST_CASE("find_transition") {
    TransitionResult up = find_transition(preset(Preset::P3), 0.2, 0.5);
    CHECK(up.k_star == doctest::Approx(0.347).epsilon(3e-3));
    CHECK(up.kind_below == ConicKind::HyperbolaXOpening);
    CHECK(up.kind_above == ConicKind::EllipseAxisAligned);

    TransitionResult down = find_transition(preset(Preset::P3), -0.5, -0.2);
    CHECK(down.k_star == doctest::Approx(-0.411).epsilon(3e-3));

    TransitionResult p2 = find_transition(preset(Preset::P2), -0.5, -0.1);
    CHECK(p2.k_star == doctest::Approx(-0.25).epsilon(1e-6));
    CHECK(std::abs(p2.k_star + 0.25) < 1e-6);

    CHECK_THROWS_AS(find_transition(preset(Preset::P3), 0.1, 0.3), NoBracket);
}

TEST_CASE("reflection property") {
    // roots of z^2 = +-5 by hand: (±sqrt5, 0) vs (0, ±sqrt5)
    ReflectionReport r1 = reflection_check(preset(Preset::P1), 5.0);
    CHECK(r1.holds);
    CHECK(r1.max_deviation <= kReflectTol);

    ReflectionReport r3 = reflection_check(preset(Preset::P3), 1e17);
    CHECK(r3.holds);
    CHECK(r3.max_deviation <= kReflectTol);

    CHECK_THROWS_AS(reflection_check(preset(Preset::P1), -1.0), std::invalid_argument);
}
