#pragma once

#include <string>

#include "paulipt/pauli_poly.hpp"

namespace paulipt {

/// Parse the CLI component spec: four semicolon-separated coefficient lists,
/// lowest degree first, entries "re" or "re+imi" (also "imi", "i", "-i").
/// Example: "1;0,1;0,0,1;0,0,0,1" is P3.
PauliPoly parse_components(const std::string& spec);

}  // namespace paulipt
