#include "fde/registry.hpp"

#include "fde/errors.hpp"
#include "fde/fraccalc.hpp"

#include <cmath>
#include <stdexcept>

namespace fde {

namespace {

double param_or(const FamilyParams& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

} // namespace

const std::vector<RegistryEntry>& registry_entries() {
    static const std::vector<RegistryEntry> entries = {
        {"example71", 0.25, 1.0, 1.0 / 3.0,
         "componentwise linear family exp(-4s)/(i+3)^2 cos(s+exp(2s)) m_i"},
        {"example72", 0.2, 0.5, 1.0 / 6.0,
         "arctan/log family arctan(5/(1+(5i+2)(5i-3))) exp(-3s) ln(8/9+|m_i|)"},
        {"manufactured", 0.25, 1.0, 1.0 / 3.0,
         "m-independent forcing with closed-form solution xi^2 - c xi"},
        {"zero", 0.5, 0.5, 0.5, "phi identically zero"},
        {"constant", 0.5, 0.5, 0.5, "phi identically equal to `value` (default 1)"},
        {"gain", 0.5, 0.5, 0.5, "phi_i = lambda m_i + offset; divergence probe"},
    };
    return entries;
}

bool registry_has(const std::string& key) {
    for (const auto& e : registry_entries())
        if (e.key == key) return true;
    return false;
}

const RegistryEntry& registry_entry(const std::string& key) {
    for (const auto& e : registry_entries())
        if (e.key == key) return e;
    throw config_error("unknown problem key '" + key + "'");
}

double manufactured_coefficient(double mu, double rho) {
    const double den = 1.0 - mu * rho * rho / 2.0;
    if (std::abs(den) < 1e-12)
        throw singular_parameter_error("manufactured coefficient undefined: mu*rho^2 = 2");
    return (1.0 - mu * rho * rho * rho / 3.0) / den;
}

double manufactured_solution(double c, double xi) { return xi * xi - c * xi; }

double manufactured_forcing(double beta, double c, double s) {
    return 2.0 * std::pow(s, 2.0 - beta) / gamma(3.0 - beta) -
           c * std::pow(s, 1.0 - beta) / gamma(2.0 - beta);
}

RhsFamily make_family(const std::string& key, const FamilyParams& params, double beta,
                      double mu, double rho_effective) {
    RhsFamily fam;
    fam.key = key;

    if (key == "example71") {
        fam.equibound_A = 1.0 / 9.0;
        fam.lipschitz_L = 1.0 / 9.0;
        fam.quoted_product = 0.370;
        fam.eval = [](std::size_t i, double s, std::span<const double> m) {
            const double id = static_cast<double>(i);
            return std::exp(-4.0 * s) / ((id + 3.0) * (id + 3.0)) *
                   std::cos(s + std::exp(2.0 * s)) * m[i - 1];
        };
        return fam;
    }
    if (key == "example72") {
        fam.equibound_A = 1.0 / 3.0;
        fam.lipschitz_L = 1.0 / 3.0;
        fam.quoted_product = 0.016;
        fam.eval = [](std::size_t i, double s, std::span<const double> m) {
            const double l = static_cast<double>(i);
            const double coeff = std::atan(5.0 / (1.0 + (5.0 * l + 2.0) * (5.0 * l - 3.0)));
            return coeff * std::exp(-3.0 * s) * std::log(8.0 / 9.0 + std::abs(m[i - 1]));
        };
        return fam;
    }
    if (key == "manufactured") {
        const double c = manufactured_coefficient(mu, rho_effective);
        fam.equibound_A = 0.0;
        fam.lipschitz_L = 0.0;
        fam.eval = [beta, c](std::size_t, double s, std::span<const double>) {
            return manufactured_forcing(beta, c, s);
        };
        return fam;
    }
    if (key == "zero") {
        fam.equibound_A = 0.0;
        fam.lipschitz_L = 0.0;
        fam.eval = [](std::size_t, double, std::span<const double>) { return 0.0; };
        return fam;
    }
    if (key == "constant") {
        const double value = param_or(params, "value", 1.0);
        fam.equibound_A = 0.0;
        fam.lipschitz_L = 0.0;
        fam.eval = [value](std::size_t, double, std::span<const double>) { return value; };
        return fam;
    }
    if (key == "gain") {
        const double lambda = param_or(params, "lambda", 1.0);
        const double offset = param_or(params, "offset", 0.0);
        fam.equibound_A = std::abs(lambda);
        fam.lipschitz_L = std::abs(lambda);
        fam.eval = [lambda, offset](std::size_t i, double, std::span<const double> m) {
            return lambda * m[i - 1] + offset;
        };
        return fam;
    }
    throw config_error("unknown problem key '" + key + "'");
}

} // namespace fde
