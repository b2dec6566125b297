#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qig/g_geometry.hpp"

namespace qig {

/// FNV-1a (64-bit) of the canonical dump with any "timestamp" key removed,
/// as 16 hex digits; identical configs hash identically across runs.
std::string config_hash(nlohmann::json config);

/// "# {json header}" comment line (hash injected), a column row, then data.
/// Components are emitted as i,j,k,l,value; 3-tensors leave l blank.
std::string tensor_csv(const CurvatureTensor& t, nlohmann::json header);
std::string tensor_csv(const SkewnessTensor& t, nlohmann::json header);

/// u,residual rows on a log-spaced grid for one generator equation;
/// which is "conjugate" or "flat".
std::string residual_grid_csv(const GFunction& g, const std::string& which,
                              int points, double u_min, double u_max,
                              nlohmann::json header);

}  // namespace qig
