#pragma once

#include <optional>
#include <string>

#include "rnc/config.hpp"
#include "rnc/rnc.hpp"

namespace rnc {

// Input schema: {"dimension": int, "points": [[string|int x (d+1)] x n]}.
// Coordinates are integers or "p/q" strings, parsed exactly.
PointConfiguration parse_configuration(const std::string& json_text);

std::string configuration_to_json(const PointConfiguration& config);

// Report schema: dimension, n, on_hyperplane, general_position, verdict, and
// per subset: I, residue (exact rational string), geometric_determinant,
// degenerate. An optional seed is echoed for reproducibility.
std::string report_to_json(const MembershipReport& report,
                           std::optional<std::uint64_t> seed = std::nullopt);

std::string report_to_text(const MembershipReport& report,
                           std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace rnc
