#include "paulipt/pt_classifier.hpp"

#include <algorithm>
#include <cmath>

#include "paulipt/unipoly.hpp"

namespace paulipt {

const char* to_string(PTTag tag) {
    switch (tag) {
        case PTTag::NotPTSymmetric: return "NotPTSymmetric";
        case PTTag::UnbrokenPT: return "UnbrokenPT";
        case PTTag::BrokenPT: return "BrokenPT";
    }
    return "?";
}

namespace {

struct FieldSet {
    BiPolyD s, h, h0R, h0I;
};

FieldSet build_fields(const PauliPoly& p) {
    auto [h0r, h0i] = trace_fields(p);
    return {BiPolyD(s_field(p)), BiPolyD(h_field(p)), BiPolyD(h0r), BiPolyD(h0i)};
}

PTPoint classify_with(const PauliPoly& p, const FieldSet& f, double x, double y, double tol) {
    PTPoint pt;
    pt.x = x;
    pt.y = y;
    pt.s_val = f.s.eval(x, y);
    pt.h_val = f.h.eval(x, y);
    pt.h0R = f.h0R.eval(x, y);
    pt.h0I = f.h0I.eval(x, y);
    if (std::abs(pt.h0I) > tol || std::abs(pt.s_val) > tol)
        pt.tag = PTTag::NotPTSymmetric;
    else if (pt.h_val >= -tol)
        pt.tag = PTTag::UnbrokenPT;
    else
        pt.tag = PTTag::BrokenPT;
    pt.hermitian = is_hermitian_at(p, {x, y}, 1e-10);
    pt.eigenvalues = eigenvalues_at(p, {x, y});
    return pt;
}

double snap_axis(double v) { return std::abs(v) < kClusterEps ? 0.0 : v; }

}  // namespace

PTPoint classify_point(const PauliPoly& p, double x, double y, double tol) {
    return classify_with(p, build_fields(p), x, y, tol);
}

LocusResult pt_locus_at_level(const PauliPoly& p, double k, double tol) {
    LocusResult out;
    out.k = k;
    out.source_poly = p.name;

    UniPoly g = g_poly(p);
    out.symmetry_note = (g.has_real_coeffs() && g.is_even()) ? SymmetryNote::ConjugateAndParity
                                                             : SymmetryNote::ConjugateOnly;

    UniPoly shifted = g - UniPoly::constant(CRat{rational_from_double(k)});
    if (shifted.degree() < 1) {
        out.kind = shifted.is_zero() ? LocusKind::WholePlane : LocusKind::Empty;
        return out;
    }

    FieldSet fields = build_fields(p);
    RootSet rs = find_roots(shifted);
    for (const auto& r : rs.roots) {
        double x = snap_axis(r.location.real());
        double y = snap_axis(r.location.imag());
        PTPoint pt = classify_with(p, fields, x, y, tol);
        pt.multiplicity = r.multiplicity;
        out.points.push_back(pt);
    }
    sort_canonical(out.points);
    return out;
}

std::vector<PTPoint> zeros(const PauliPoly& p, double tol) {
    UniPoly d = det_poly(p);
    if (d.degree() < 1) throw ConstantDeterminant("zeros: determinant is constant");
    FieldSet fields = build_fields(p);
    std::vector<PTPoint> out;
    for (const auto& r : find_roots(d).roots) {
        double x = snap_axis(r.location.real());
        double y = snap_axis(r.location.imag());
        PTPoint pt = classify_with(p, fields, x, y, tol);
        pt.multiplicity = r.multiplicity;
        out.push_back(pt);
    }
    sort_canonical(out);
    return out;
}

std::vector<PTPoint> axis_scan(const PauliPoly& p, Axis axis, double lo, double hi, int n,
                               double tol) {
    if (n < 2) throw std::invalid_argument("axis_scan: n must be >= 2");
    FieldSet fields = build_fields(p);
    std::vector<PTPoint> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = lo + (hi - lo) * i / (n - 1);
        double x = axis == Axis::X ? t : 0.0;
        double y = axis == Axis::Y ? t : 0.0;
        out.push_back(classify_with(p, fields, x, y, tol));
    }
    return out;
}

void sort_canonical(std::vector<PTPoint>& pts) {
    std::stable_sort(pts.begin(), pts.end(), [](const PTPoint& a, const PTPoint& b) {
        double aa = std::atan2(a.y, a.x), ab = std::atan2(b.y, b.x);
        if (aa != ab) return aa < ab;
        double ra = std::hypot(a.x, a.y), rb = std::hypot(b.x, b.y);
        if (ra != rb) return ra < rb;
        return a.multiplicity > b.multiplicity;
    });
}

}  // namespace paulipt
