#pragma once

#include "fde/bvp_core.hpp"
#include "fde/registry.hpp"
#include "fde/seqspace.hpp"

#include <cstddef>
#include <string>

namespace fde {

/// Parsed and validated problem configuration.
struct ProblemConfig {
    std::string problem;
    FamilyParams params;
    double beta = 0.0;
    double mu = 0.0;
    double rho = 0.0;
    WeightSequence weights = WeightSequence::linear();
    std::size_t components = 20; // N
    std::size_t intervals = 256; // M
    double tol = 1e-10;
    std::size_t max_iter = 200;
    std::string output = "json";
};

/// Parses a JSON configuration document. Registry defaults fill beta/mu/rho
/// when the document omits them. Unknown keys are rejected; invariant
/// violations name the offending field.
ProblemConfig parse_config(const std::string& text);

/// Builds the full problem instance from a parsed configuration.
BvpSpec make_spec(const ProblemConfig& config);

} // namespace fde
