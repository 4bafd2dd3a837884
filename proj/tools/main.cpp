#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paulipt/conic.hpp"
#include "paulipt/contour.hpp"
#include "paulipt/pt_classifier.hpp"
#include "paulipt/serialize.hpp"
#include "paulipt/spec_parse.hpp"

using namespace paulipt;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string preset_name;
    std::string components;
    std::string format = "json";
    double tol = kPointTol;
};

void add_poly_opts(CLI::App* cmd, CommonOpts& o) {
    auto* p = cmd->add_option("--preset", o.preset_name, "preset name (P1..P3, Pt1..Pt3, Q10)");
    auto* c = cmd->add_option("--components", o.components,
                              "four ';'-separated coefficient lists, lowest degree first");
    p->excludes(c);
}

void add_format_opt(CLI::App* cmd, CommonOpts& o, bool allow_svg = false) {
    std::vector<std::string> allowed{"json", "csv"};
    if (allow_svg) allowed.push_back("svg");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
}

PauliPoly resolve_poly(const CommonOpts& o) {
    if (!o.preset_name.empty()) return preset(o.preset_name);
    if (!o.components.empty()) return parse_components(o.components);
    throw std::invalid_argument("either --preset or --components is required");
}

ordered_json meta(const std::string& command, const CommonOpts& o) {
    ordered_json m{{"command", command}};
    if (!o.preset_name.empty()) m["preset"] = o.preset_name;
    if (!o.components.empty()) m["components"] = o.components;
    return m;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json field_terms(const BiPoly& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [ij, c] : f.terms())
        terms.push_back(ordered_json{{"i", ij.first}, {"j", ij.second}, {"coeff", c.get_str()}});
    return terms;
}

BBox default_bbox(const PauliPoly& p, double k) {
    UniPoly shifted = g_poly(p) - UniPoly::constant(CRat{rational_from_double(k)});
    double half = 2.0;
    if (shifted.degree() >= 1) half = std::clamp(cauchy_bound(shifted), 1.5, 4.0);
    return {-half, half, -half, half};
}

int run(int argc, char** argv) {
    CLI::App app{"PT-symmetry analysis of 2x2 Pauli-basis matrix polynomials"};
    app.require_subcommand(1);

    CommonOpts o;
    double k = 0.0;
    std::vector<double> bracket, point, bbox_vals;
    int resolution = 256;
    std::string field_name;

    auto* list_cmd = app.add_subcommand("preset-list", "list built-in matrix polynomials");
    add_format_opt(list_cmd, o);

    auto* fields_cmd = app.add_subcommand("fields", "print s, h and trace fields");
    add_poly_opts(fields_cmd, o);
    add_format_opt(fields_cmd, o);

    auto* locus_cmd = app.add_subcommand("locus", "PT locus at level k (s=0, h=k)");
    add_poly_opts(locus_cmd, o);
    locus_cmd->add_option("--k", k, "level")->required();
    locus_cmd->add_option("--tol", o.tol, "point classification tolerance");
    add_format_opt(locus_cmd, o);

    auto* zeros_cmd = app.add_subcommand("zeros", "zeros of the matrix polynomial, classified");
    add_poly_opts(zeros_cmd, o);
    zeros_cmd->add_option("--tol", o.tol, "point classification tolerance");
    add_format_opt(zeros_cmd, o);

    auto* classify_cmd = app.add_subcommand("classify", "classify PT-symmetry at one point");
    add_poly_opts(classify_cmd, o);
    classify_cmd->add_option("--point", point, "x y")->expected(2)->required();
    classify_cmd->add_option("--tol", o.tol, "point classification tolerance");
    add_format_opt(classify_cmd, o);

    auto* conic_cmd = app.add_subcommand("conic", "conic classification of the locus at level k");
    add_poly_opts(conic_cmd, o);
    conic_cmd->add_option("--k", k, "level")->required();
    conic_cmd->add_option("--tol", o.tol, "point classification tolerance");
    add_format_opt(conic_cmd, o);

    auto* trans_cmd = app.add_subcommand("transition", "bisect for the conic-type transition level");
    add_poly_opts(trans_cmd, o);
    trans_cmd->add_option("--bracket", bracket, "k_lo k_hi")->expected(2)->required();
    add_format_opt(trans_cmd, o);

    auto* reflect_cmd = app.add_subcommand("reflect", "reflection check between +k and -k loci");
    add_poly_opts(reflect_cmd, o);
    reflect_cmd->add_option("--k", k, "level (positive)")->required();
    add_format_opt(reflect_cmd, o);

    auto* contour_cmd = app.add_subcommand("contour", "marching-squares contours of the fields");
    add_poly_opts(contour_cmd, o);
    contour_cmd->add_option("--k", k, "level for the h family");
    contour_cmd->add_option("--field", field_name, "single field: s|h|h0i|detre|detim");
    contour_cmd->add_option("--bbox", bbox_vals, "xmin xmax ymin ymax")->expected(4);
    contour_cmd->add_option("--resolution", resolution, "grid cells per axis")
        ->capture_default_str();
    add_format_opt(contour_cmd, o, /*allow_svg=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list_cmd->parsed()) {
        ordered_json presets = ordered_json::array();
        std::vector<std::vector<std::string>> rows;
        for (const auto& name : preset_names()) {
            PauliPoly p = preset(name);
            presets.push_back(ordered_json{{"name", name},
                                           {"c0", p.c0.to_string()},
                                           {"c1", p.c1.to_string()},
                                           {"c2", p.c2.to_string()},
                                           {"c3", p.c3.to_string()},
                                           {"g", g_poly(p).to_string()},
                                           {"det", det_poly(p).to_string()},
                                           {"trace", trace_poly(p).to_string()}});
        }
        if (o.format == "csv") {
            std::cout << "name,c0,c1,c2,c3,g,det,trace\n";
            for (const auto& e : presets)
                std::cout << e["name"].get<std::string>() << ',' << e["c0"].get<std::string>()
                          << ',' << e["c1"].get<std::string>() << ','
                          << e["c2"].get<std::string>() << ',' << e["c3"].get<std::string>()
                          << ',' << e["g"].get<std::string>() << ','
                          << e["det"].get<std::string>() << ','
                          << e["trace"].get<std::string>() << '\n';
        } else {
            emit(ordered_json{{"meta", meta("preset-list", o)}, {"presets", presets}});
        }
        return 0;
    }

    PauliPoly p = resolve_poly(o);

    if (fields_cmd->parsed()) {
        auto [h0r, h0i] = trace_fields(p);
        BiPoly s = s_field(p), h = h_field(p);
        if (o.format == "csv") {
            std::cout << "field,i,j,coeff\n";
            auto dump = [](const char* name, const BiPoly& f) {
                for (const auto& [ij, c] : f.terms())
                    std::cout << name << ',' << ij.first << ',' << ij.second << ','
                              << c.get_str() << '\n';
            };
            dump("s", s);
            dump("h", h);
            dump("h0R", h0r);
            dump("h0I", h0i);
        } else {
            emit(ordered_json{{"meta", meta("fields", o)},
                              {"fields",
                               {{"s", field_terms(s)},
                                {"h", field_terms(h)},
                                {"h0R", field_terms(h0r)},
                                {"h0I", field_terms(h0i)}}}});
        }
        return 0;
    }

    if (locus_cmd->parsed()) {
        LocusResult locus = pt_locus_at_level(p, k, o.tol);
        if (o.format == "csv")
            std::cout << points_csv(locus.points);
        else
            emit(ordered_json{{"meta", meta("locus", o)}, {"result", to_json(locus)}});
        return 0;
    }

    if (zeros_cmd->parsed()) {
        auto pts = zeros(p, o.tol);
        if (o.format == "csv")
            std::cout << points_csv(pts);
        else {
            ordered_json arr = ordered_json::array();
            for (const auto& pt : pts) arr.push_back(to_json(pt));
            emit(ordered_json{{"meta", meta("zeros", o)}, {"points", arr}});
        }
        return 0;
    }

    if (classify_cmd->parsed()) {
        PTPoint pt = classify_point(p, point[0], point[1], o.tol);
        if (o.format == "csv")
            std::cout << points_csv({pt});
        else
            emit(ordered_json{{"meta", meta("classify", o)}, {"point", to_json(pt)}});
        return 0;
    }

    if (conic_cmd->parsed()) {
        LocusResult locus = pt_locus_at_level(p, k, o.tol);
        LocusClass cls = classify_locus(locus);
        if (o.format == "csv") {
            std::cout << "kind,a,b,r,slope,axis,max_residual\n"
                      << to_string(cls.kind) << ',' << fmt9(cls.a) << ',' << fmt9(cls.b) << ','
                      << fmt9(cls.r) << ',' << fmt9(cls.slope) << ','
                      << (cls.axis == Axis::X ? 'x' : 'y') << ',' << fmt9(cls.max_residual)
                      << '\n';
        } else {
            emit(ordered_json{{"meta", meta("conic", o)},
                              {"locus", to_json(locus)},
                              {"conic", to_json(cls)}});
        }
        return 0;
    }

    if (trans_cmd->parsed()) {
        TransitionResult tr = find_transition(p, bracket[0], bracket[1]);
        if (o.format == "csv")
            std::cout << "k_star,k_lo,k_hi,kind_below,kind_above,iterations\n"
                      << fmt9(tr.k_star) << ',' << fmt9(tr.k_lo) << ',' << fmt9(tr.k_hi) << ','
                      << to_string(tr.kind_below) << ',' << to_string(tr.kind_above) << ','
                      << tr.iterations << '\n';
        else
            emit(ordered_json{{"meta", meta("transition", o)}, {"result", to_json(tr)}});
        return 0;
    }

    if (reflect_cmd->parsed()) {
        ReflectionReport rep = reflection_check(p, k);
        if (o.format == "csv") {
            std::cout << "holds,max_deviation\n"
                      << (rep.holds ? "true" : "false") << ',' << fmt9(rep.max_deviation) << '\n';
        } else {
            emit(ordered_json{{"meta", meta("reflect", o)},
                              {"holds", rep.holds},
                              {"max_deviation", round9(rep.max_deviation)},
                              {"locus_plus", to_json(rep.plus)},
                              {"locus_minus", to_json(rep.minus)}});
        }
        return 0;
    }

    if (contour_cmd->parsed()) {
        BBox bb = bbox_vals.size() == 4 ? BBox{bbox_vals[0], bbox_vals[1], bbox_vals[2],
                                               bbox_vals[3]}
                                        : default_bbox(p, k);
        std::vector<ContourSet> sets;
        auto make = [&](FieldKind fk, const BiPoly& f, double level) {
            ContourSet cs = marching_squares(f, level, bb, resolution);
            cs.field = fk;
            sets.push_back(std::move(cs));
        };
        if (field_name.empty()) {
            make(FieldKind::S, s_field(p), 0.0);
            make(FieldKind::H, h_field(p), k);
        } else if (field_name == "s") {
            make(FieldKind::S, s_field(p), k);
        } else if (field_name == "h") {
            make(FieldKind::H, h_field(p), k);
        } else if (field_name == "h0i") {
            make(FieldKind::H0I, trace_fields(p).second, k);
        } else if (field_name == "detre") {
            make(FieldKind::DetRe, expand_re_im(det_poly(p)).first, k);
        } else if (field_name == "detim") {
            make(FieldKind::DetIm, expand_re_im(det_poly(p)).second, k);
        } else {
            throw std::invalid_argument("unknown field '" + field_name + "'");
        }
        if (o.format == "svg")
            std::cout << contours_svg(sets);
        else if (o.format == "csv")
            std::cout << contours_csv(sets);
        else {
            ordered_json arr = ordered_json::array();
            for (const auto& cs : sets) arr.push_back(to_json(cs));
            emit(ordered_json{{"meta", meta("contour", o)}, {"contours", arr}});
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoBracket& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
