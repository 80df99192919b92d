#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "concbound/states.hpp"

namespace concbound {

// JSON layout: {"dims":[d1,...], "re":[[...],...], "im":[[...],...]} for
// density matrices (row-major), and flat "re"/"im" arrays for pure states.

nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const PureState& psi);

/// Parses either layout; pure states come back as PureState.
std::variant<DensityMatrix, PureState> state_from_json(const nlohmann::json& j);

/// Density matrix from either layout (pure states become projectors).
DensityMatrix density_from_json(const nlohmann::json& j);

DensityMatrix load_density(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace concbound
