#include "paulipt/spec_parse.hpp"

#include <vector>

namespace paulipt {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

CRat parse_entry(const std::string& e) {
    if (e.empty()) throw std::invalid_argument("empty coefficient entry");
    if (e.back() != 'i') return CRat{rational_from_decimal(e)};

    std::string body = e.substr(0, e.size() - 1);
    // split off a real part at the last +/- that is not a leading sign
    size_t cut = std::string::npos;
    for (size_t p = body.size(); p-- > 1;) {
        if (body[p] == '+' || body[p] == '-') {
            cut = p;
            break;
        }
    }
    std::string re = "0", im;
    if (cut == std::string::npos) {
        im = body;
    } else {
        re = body.substr(0, cut);
        im = body.substr(cut);
    }
    if (im.empty() || im == "+") im = "1";
    else if (im == "-") im = "-1";
    return CRat{rational_from_decimal(re), rational_from_decimal(im)};
}

UniPoly parse_component(const std::string& list) {
    if (list.empty() || list == "0") return UniPoly::zero();
    std::vector<CRat> coeffs;
    for (const auto& entry : split(list, ',')) coeffs.push_back(parse_entry(entry));
    return UniPoly{std::move(coeffs)};
}

}  // namespace

PauliPoly parse_components(const std::string& spec) {
    auto parts = split(spec, ';');
    if (parts.size() != 4)
        throw std::invalid_argument("component spec must have 4 ';'-separated lists");
    return from_components(parse_component(parts[0]), parse_component(parts[1]),
                           parse_component(parts[2]), parse_component(parts[3]), "custom");
}

}  // namespace paulipt
