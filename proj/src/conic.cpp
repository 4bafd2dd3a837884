#include "paulipt/conic.hpp"

#include <algorithm>
#include <cmath>

#include "paulipt/unipoly.hpp"

namespace paulipt {

const char* to_string(ConicKind kind) {
    switch (kind) {
        case ConicKind::Circle: return "Circle";
        case ConicKind::EllipseAxisAligned: return "EllipseAxisAligned";
        case ConicKind::HyperbolaXOpening: return "HyperbolaXOpening";
        case ConicKind::HyperbolaYOpening: return "HyperbolaYOpening";
        case ConicKind::TwoLinesThroughOrigin: return "TwoLinesThroughOrigin";
        case ConicKind::AxisLine: return "AxisLine";
        case ConicKind::SinglePoint: return "SinglePoint";
        case ConicKind::Empty: return "Empty";
        case ConicKind::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

constexpr double kOnAxisTol = 1e-7;

double residual_at(const LocusClass& c, double x, double y) {
    switch (c.kind) {
        case ConicKind::Circle:
            return std::abs(std::hypot(x, y) - c.r) / std::max(1.0, c.r);
        case ConicKind::AxisLine:
            return c.axis == Axis::X ? std::abs(y) : std::abs(x);
        case ConicKind::TwoLinesThroughOrigin: {
            double d1 = std::abs(y - c.slope * x), d2 = std::abs(y + c.slope * x);
            return std::min(d1, d2) / std::hypot(1.0, c.slope);
        }
        case ConicKind::EllipseAxisAligned: {
            double v = x * x / (c.a * c.a) + y * y / (c.b * c.b) - 1.0;
            return std::abs(v) / std::max({1.0, 1.0 / (c.a * c.a), 1.0 / (c.b * c.b)});
        }
        case ConicKind::HyperbolaXOpening: {
            double v = x * x / (c.a * c.a) - y * y / (c.b * c.b) - 1.0;
            return std::abs(v) / std::max({1.0, 1.0 / (c.a * c.a), 1.0 / (c.b * c.b)});
        }
        case ConicKind::HyperbolaYOpening: {
            double v = y * y / (c.b * c.b) - x * x / (c.a * c.a) - 1.0;
            return std::abs(v) / std::max({1.0, 1.0 / (c.a * c.a), 1.0 / (c.b * c.b)});
        }
        default:
            return 0.0;
    }
}

LocusClass with_residual(LocusClass c, const std::vector<PTPoint>& pts) {
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, residual_at(c, p.x, p.y));
    c.max_residual = worst;
    if (worst > kConicTol) {
        LocusClass u;
        u.kind = ConicKind::Unclassified;
        u.max_residual = worst;
        return u;
    }
    return c;
}

}  // namespace

LocusClass classify_locus(const LocusResult& locus) {
    if (locus.kind == LocusKind::Empty) return {.kind = ConicKind::Empty};
    if (locus.kind == LocusKind::WholePlane) return {.kind = ConicKind::Unclassified};
    const auto& pts = locus.points;
    if (pts.empty()) throw EmptyInput("classify_locus: no points");

    if (pts.size() == 1) {
        LocusClass c;
        c.kind = ConicKind::SinglePoint;
        return c;
    }

    auto on_x = [](const PTPoint& p) { return std::abs(p.y) < kOnAxisTol; };
    auto on_y = [](const PTPoint& p) { return std::abs(p.x) < kOnAxisTol; };
    auto at_origin = [&](const PTPoint& p) { return on_x(p) && on_y(p); };

    bool all_x = std::all_of(pts.begin(), pts.end(), on_x);
    bool all_y = std::all_of(pts.begin(), pts.end(), on_y);
    if (all_x || all_y) {
        LocusClass c;
        c.kind = ConicKind::AxisLine;
        c.axis = all_x ? Axis::X : Axis::Y;
        return with_residual(c, pts);
    }

    // equal radii -> circle
    double rmin = 1e300, rmax = 0.0;
    for (const auto& p : pts) {
        double r = std::hypot(p.x, p.y);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    if (rmax - rmin <= kConicTol * std::max(1.0, rmax)) {
        LocusClass c;
        c.kind = ConicKind::Circle;
        c.r = 0.5 * (rmin + rmax);
        return with_residual(c, pts);
    }

    // representatives
    const PTPoint* off_axis = nullptr;
    const PTPoint* x_rep = nullptr;
    const PTPoint* y_rep = nullptr;
    bool have_origin = false;
    for (const auto& p : pts) {
        if (at_origin(p)) {
            have_origin = true;
        } else if (on_x(p)) {
            if (!x_rep || p.x > x_rep->x) x_rep = &p;
        } else if (on_y(p)) {
            if (!y_rep || p.y > y_rep->y) y_rep = &p;
        } else if (p.x > kOnAxisTol && p.y > kOnAxisTol) {
            if (!off_axis) off_axis = &p;
        }
    }

    if (have_origin && off_axis) {
        LocusClass c;
        c.kind = ConicKind::TwoLinesThroughOrigin;
        c.slope = off_axis->y / off_axis->x;
        return with_residual(c, pts);
    }

    if (off_axis && x_rep) {
        double x1 = off_axis->x, y1 = off_axis->y, a = std::abs(x_rep->x);
        LocusClass c;
        c.a = a;
        if (a < std::abs(x1)) {
            c.kind = ConicKind::HyperbolaXOpening;
            c.b = std::sqrt(y1 * y1 * a * a / (x1 * x1 - a * a));
        } else {
            c.kind = ConicKind::EllipseAxisAligned;
            c.b = std::sqrt(y1 * y1 * a * a / (a * a - x1 * x1));
        }
        return with_residual(c, pts);
    }

    if (off_axis && y_rep) {
        double x1 = off_axis->x, y1 = off_axis->y, b = std::abs(y_rep->y);
        LocusClass c;
        c.b = b;
        if (b < std::abs(y1)) {
            c.kind = ConicKind::HyperbolaYOpening;
            c.a = std::sqrt(x1 * x1 * b * b / (y1 * y1 - b * b));
        } else {
            c.kind = ConicKind::EllipseAxisAligned;
            c.a = std::sqrt(x1 * x1 * b * b / (b * b - y1 * y1));
        }
        return with_residual(c, pts);
    }

    if (!off_axis && x_rep && y_rep) {
        LocusClass c;
        c.kind = ConicKind::EllipseAxisAligned;
        c.a = std::abs(x_rep->x);
        c.b = std::abs(y_rep->y);
        return with_residual(c, pts);
    }

    LocusClass u;
    u.kind = ConicKind::Unclassified;
    for (const auto& p : pts)
        u.max_residual = std::max(u.max_residual, std::hypot(p.x, p.y));
    return u;
}

namespace {

// Coarse type used for transition bracketing: circle counts as an ellipse,
// both hyperbola openings count alike.
int sense(ConicKind k) {
    switch (k) {
        case ConicKind::Circle:
        case ConicKind::EllipseAxisAligned:
            return 0;
        case ConicKind::HyperbolaXOpening:
        case ConicKind::HyperbolaYOpening:
            return 1;
        default:
            return 2 + static_cast<int>(k);
    }
}

}  // namespace

TransitionResult find_transition(const PauliPoly& p, double k_lo, double k_hi) {
    auto kind_at = [&](double k) { return classify_locus(pt_locus_at_level(p, k)).kind; };

    TransitionResult tr;
    tr.kind_below = kind_at(k_lo);
    tr.kind_above = kind_at(k_hi);
    if (sense(tr.kind_below) == sense(tr.kind_above))
        throw NoBracket("find_transition: same locus type at both bracket ends");

    int lo_sense = sense(tr.kind_below);
    while (k_hi - k_lo > kTransitionTol) {
        double mid = 0.5 * (k_lo + k_hi);
        if (sense(kind_at(mid)) == lo_sense)
            k_lo = mid;
        else
            k_hi = mid;
        ++tr.iterations;
    }
    tr.k_lo = k_lo;
    tr.k_hi = k_hi;
    tr.k_star = 0.5 * (k_lo + k_hi);
    return tr;
}

ReflectionReport reflection_check(const PauliPoly& p, double k) {
    if (!(k > 0)) throw std::invalid_argument("reflection_check: k must be positive");
    ReflectionReport rep;
    rep.plus = pt_locus_at_level(p, k);
    rep.minus = pt_locus_at_level(p, -k);

    int deg = g_poly(p).degree();
    double scale = std::pow(k, 1.0 / std::max(1, deg));

    if (rep.plus.points.size() != rep.minus.points.size()) {
        rep.holds = false;
        rep.max_deviation = std::numeric_limits<double>::infinity();
        return rep;
    }

    std::vector<bool> used(rep.minus.points.size(), false);
    double worst = 0.0;
    bool ok = true;
    for (const auto& a : rep.plus.points) {
        double best = std::numeric_limits<double>::infinity();
        size_t best_j = 0;
        for (size_t j = 0; j < rep.minus.points.size(); ++j) {
            if (used[j]) continue;
            const auto& b = rep.minus.points[j];
            double d = std::hypot(a.x - b.y, a.y - b.x);  // compare to reflected point
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        if (!std::isfinite(best)) {
            ok = false;
            break;
        }
        used[best_j] = true;
        if (rep.minus.points[best_j].multiplicity != a.multiplicity) ok = false;
        worst = std::max(worst, best / scale);
    }
    rep.max_deviation = worst;
    rep.holds = ok && worst <= kReflectTol;
    return rep;
}

}  // namespace paulipt
