#pragma once

#include <string>

#include <json.hpp>

#include "paulipt/conic.hpp"
#include "paulipt/contour.hpp"
#include "paulipt/pt_classifier.hpp"

namespace paulipt {

/// Round to 9 significant digits; all serialized floats go through this so
/// output is reproducible across runs.
double round9(double v);
std::string fmt9(double v);

nlohmann::ordered_json to_json(const PTPoint& p);
nlohmann::ordered_json to_json(const LocusResult& locus);
nlohmann::ordered_json to_json(const LocusClass& c);
nlohmann::ordered_json to_json(const TransitionResult& t);
nlohmann::ordered_json to_json(const ContourSet& cs);

std::string points_csv(const std::vector<PTPoint>& pts);
std::string contours_csv(const std::vector<ContourSet>& sets);
std::string contours_svg(const std::vector<ContourSet>& sets);

}  // namespace paulipt
