#pragma once

#include "fde/bvp_core.hpp"
#include "fde/mnc_stability.hpp"
#include "fde/picard_solver.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace fde {

nlohmann::json to_json(const ConstantsReport& r);

/// Full solve report including the solution grid (xi row plus one row per
/// component).
nlohmann::json to_json(const SolveReport& r, const BvpSpec& spec);

nlohmann::json to_json(const MncEstimate& e, const VectorFamily& family);

nlohmann::json to_json(const HuExperimentReport& r, const BvpSpec& spec);

nlohmann::json to_json(const std::vector<TruncationRow>& rows);

/// Solution grid as CSV with columns xi, m_1, ..., m_N at full round-trip
/// precision.
std::string solution_csv(const GridFunction& u, const Grid& grid);

} // namespace fde
