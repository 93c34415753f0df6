#pragma once

#include "fde/bvp_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace fde {

/// Parameters a registry factory may consume (already validated as numbers).
using FamilyParams = std::map<std::string, double>;

/// Registry metadata for one problem family: default parameters and the
/// declared constants.
struct RegistryEntry {
    std::string key;
    double default_beta;
    double default_mu;
    double default_rho;
    std::string description;
};

const std::vector<RegistryEntry>& registry_entries();

bool registry_has(const std::string& key);

const RegistryEntry& registry_entry(const std::string& key);

/// Builds the right-hand-side family. `rho_effective` is the grid-snapped
/// value; the manufactured family derives its linear coefficient from it so
/// that its closed-form solution matches the operator actually applied.
RhsFamily make_family(const std::string& key, const FamilyParams& params, double beta,
                      double mu, double rho_effective);

/// Coefficient c = (1 - mu rho^3/3) / (1 - mu rho^2/2) of the manufactured
/// solution m*(xi) = xi^2 - c xi.
double manufactured_coefficient(double mu, double rho);

double manufactured_solution(double c, double xi);

/// Forcing whose Caputo antiderivative is m*: 2 s^(2-b)/Gamma(3-b) - c s^(1-b)/Gamma(2-b).
double manufactured_forcing(double beta, double c, double s);

} // namespace fde
