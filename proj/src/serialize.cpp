#include "paulipt/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace paulipt {

using nlohmann::ordered_json;

std::string fmt9(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round9(double v) { return std::strtod(fmt9(v).c_str(), nullptr); }

ordered_json to_json(const PTPoint& p) {
    return ordered_json{
        {"x", round9(p.x)},
        {"y", round9(p.y)},
        {"s", round9(p.s_val)},
        {"h", round9(p.h_val)},
        {"h0R", round9(p.h0R)},
        {"h0I", round9(p.h0I)},
        {"tag", to_string(p.tag)},
        {"hermitian", p.hermitian},
        {"multiplicity", p.multiplicity},
        {"eigenvalues",
         {{"e_minus", {round9(p.eigenvalues.e_minus.real()), round9(p.eigenvalues.e_minus.imag())}},
          {"e_plus", {round9(p.eigenvalues.e_plus.real()), round9(p.eigenvalues.e_plus.imag())}}}},
    };
}

ordered_json to_json(const LocusResult& locus) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : locus.points) pts.push_back(to_json(p));
    const char* kind = locus.kind == LocusKind::Finite      ? "finite"
                       : locus.kind == LocusKind::WholePlane ? "whole_plane"
                                                             : "empty";
    return ordered_json{
        {"k", round9(locus.k)},
        {"kind", kind},
        {"source", locus.source_poly},
        {"symmetry", locus.symmetry_note == SymmetryNote::ConjugateAndParity
                         ? "conjugate_and_parity"
                         : "conjugate_only"},
        {"points", pts},
    };
}

ordered_json to_json(const LocusClass& c) {
    ordered_json j{{"kind", to_string(c.kind)}, {"max_residual", round9(c.max_residual)}};
    switch (c.kind) {
        case ConicKind::Circle:
            j["r"] = round9(c.r);
            break;
        case ConicKind::EllipseAxisAligned:
        case ConicKind::HyperbolaXOpening:
        case ConicKind::HyperbolaYOpening:
            j["a"] = round9(c.a);
            j["b"] = round9(c.b);
            break;
        case ConicKind::TwoLinesThroughOrigin:
            j["slope"] = round9(c.slope);
            break;
        case ConicKind::AxisLine:
            j["axis"] = c.axis == Axis::X ? "x" : "y";
            break;
        default:
            break;
    }
    return j;
}

ordered_json to_json(const TransitionResult& t) {
    return ordered_json{
        {"k_star", round9(t.k_star)},
        {"bracket", {round9(t.k_lo), round9(t.k_hi)}},
        {"kind_below", to_string(t.kind_below)},
        {"kind_above", to_string(t.kind_above)},
        {"iterations", t.iterations},
    };
}

ordered_json to_json(const ContourSet& cs) {
    ordered_json lines = ordered_json::array();
    for (const auto& line : cs.polylines) {
        ordered_json pl = ordered_json::array();
        for (const auto& v : line) pl.push_back({round9(v[0]), round9(v[1])});
        lines.push_back(std::move(pl));
    }
    return ordered_json{
        {"field", to_string(cs.field)},
        {"level", round9(cs.level)},
        {"bbox", {round9(cs.bbox.xmin), round9(cs.bbox.xmax), round9(cs.bbox.ymin),
                  round9(cs.bbox.ymax)}},
        {"resolution", cs.resolution},
        {"polylines", lines},
    };
}

std::string points_csv(const std::vector<PTPoint>& pts) {
    std::ostringstream os;
    os << "x,y,s,h,h0R,h0I,tag,hermitian,multiplicity,"
          "e_minus_re,e_minus_im,e_plus_re,e_plus_im\n";
    for (const auto& p : pts) {
        os << fmt9(p.x) << ',' << fmt9(p.y) << ',' << fmt9(p.s_val) << ',' << fmt9(p.h_val)
           << ',' << fmt9(p.h0R) << ',' << fmt9(p.h0I) << ',' << to_string(p.tag) << ','
           << (p.hermitian ? "true" : "false") << ',' << p.multiplicity << ','
           << fmt9(p.eigenvalues.e_minus.real()) << ',' << fmt9(p.eigenvalues.e_minus.imag())
           << ',' << fmt9(p.eigenvalues.e_plus.real()) << ','
           << fmt9(p.eigenvalues.e_plus.imag()) << '\n';
    }
    return os.str();
}

std::string contours_csv(const std::vector<ContourSet>& sets) {
    std::ostringstream os;
    os << "field,level,polyline,vertex,x,y\n";
    for (const auto& cs : sets) {
        for (size_t li = 0; li < cs.polylines.size(); ++li)
            for (size_t vi = 0; vi < cs.polylines[li].size(); ++vi)
                os << to_string(cs.field) << ',' << fmt9(cs.level) << ',' << li << ',' << vi
                   << ',' << fmt9(cs.polylines[li][vi][0]) << ','
                   << fmt9(cs.polylines[li][vi][1]) << '\n';
    }
    return os.str();
}

std::string contours_svg(const std::vector<ContourSet>& sets) {
    std::ostringstream os;
    BBox bb = sets.empty() ? BBox{} : sets.front().bbox;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(bb.xmin) << ' '
       << fmt9(bb.ymin) << ' ' << fmt9(bb.xmax - bb.xmin) << ' ' << fmt9(bb.ymax - bb.ymin)
       << "\">\n";
    for (const auto& cs : sets) {
        const char* cls = cs.field == FieldKind::S ? "s-curve" : "h-curve";
        for (const auto& line : cs.polylines) {
            os << "  <polyline class=\"" << cls << "\" fill=\"none\" points=\"";
            for (size_t vi = 0; vi < line.size(); ++vi) {
                if (vi) os << ' ';
                os << fmt9(line[vi][0]) << ',' << fmt9(line[vi][1]);
            }
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace paulipt
