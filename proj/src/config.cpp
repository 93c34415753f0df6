#include "fde/config.hpp"

#include "fde/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <set>
#include <string>

namespace fde {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw config_error("field '" + path + "' must be a number");
    return j.get<double>();
}

std::size_t require_positive_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() <= 0)
        throw config_error("field '" + path + "' must be a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

WeightSequence parse_weights(const json& j) {
    if (!j.is_object()) throw config_error("field 'weights' must be an object");
    static const std::set<std::string> allowed = {"kind", "p", "table"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw config_error("unknown key 'weights." + it.key() + "'");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw config_error("field 'weights.kind' must be a string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "linear") return WeightSequence::linear();
    if (kind == "constant") return WeightSequence::constant();
    if (kind == "power") {
        if (!j.contains("p")) throw config_error("weights of kind 'power' need field 'weights.p'");
        const double p = require_number(j["p"], "weights.p");
        if (!(p >= 0.0)) throw config_error("field 'weights.p' must be >= 0");
        return WeightSequence::power(p);
    }
    if (kind == "table") {
        if (!j.contains("table") || !j["table"].is_array())
            throw config_error("weights of kind 'table' need array field 'weights.table'");
        std::vector<double> t;
        for (const auto& v : j["table"]) t.push_back(require_number(v, "weights.table[]"));
        try {
            return WeightSequence::table(std::move(t));
        } catch (const std::exception& e) {
            throw config_error(std::string("field 'weights.table': ") + e.what());
        }
    }
    throw config_error("field 'weights.kind' must be one of linear, power, constant, table");
}

} // namespace

ProblemConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("configuration must be a JSON object");

    static const std::set<std::string> allowed = {"problem", "params", "beta",     "mu",
                                                  "rho",     "weights", "N",       "M",
                                                  "tol",     "max_iter", "output"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw config_error("unknown key '" + it.key() + "'");

    ProblemConfig cfg;
    if (!j.contains("problem") || !j["problem"].is_string())
        throw config_error("field 'problem' must name a registry entry");
    cfg.problem = j["problem"].get<std::string>();
    if (!registry_has(cfg.problem)) throw config_error("unknown problem key '" + cfg.problem + "'");
    const RegistryEntry& entry = registry_entry(cfg.problem);

    cfg.beta = entry.default_beta;
    cfg.mu = entry.default_mu;
    cfg.rho = entry.default_rho;

    if (j.contains("params")) {
        if (!j["params"].is_object()) throw config_error("field 'params' must be an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
            cfg.params[it.key()] = require_number(it.value(), "params." + it.key());
    }
    if (j.contains("beta")) cfg.beta = require_number(j["beta"], "beta");
    if (j.contains("mu")) cfg.mu = require_number(j["mu"], "mu");
    if (j.contains("rho")) cfg.rho = require_number(j["rho"], "rho");
    if (j.contains("weights")) cfg.weights = parse_weights(j["weights"]);
    if (j.contains("N")) cfg.components = require_positive_integer(j["N"], "N");
    if (j.contains("M")) cfg.intervals = require_positive_integer(j["M"], "M");
    if (j.contains("tol")) {
        cfg.tol = require_number(j["tol"], "tol");
        if (!(cfg.tol > 0.0)) throw config_error("field 'tol' must be positive");
    }
    if (j.contains("max_iter")) cfg.max_iter = require_positive_integer(j["max_iter"], "max_iter");
    if (j.contains("output")) {
        if (!j["output"].is_string()) throw config_error("field 'output' must be a string");
        cfg.output = j["output"].get<std::string>();
        if (cfg.output != "json" && cfg.output != "csv")
            throw config_error("field 'output' must be 'json' or 'csv'");
    }

    if (!(cfg.beta > 0.0 && cfg.beta <= 1.0))
        throw config_error("field 'beta' must lie in (0, 1]");
    if (!(cfg.rho > 0.0 && cfg.rho < 1.0)) throw config_error("field 'rho' must lie in (0, 1)");
    if (!std::isfinite(cfg.mu)) throw config_error("field 'mu' must be finite");
    if (std::abs(2.0 - cfg.mu * cfg.rho * cfg.rho) <= 1e-9)
        throw singular_parameter_error("fields 'mu' and 'rho' give mu*rho^2 = 2");
    return cfg;
}

BvpSpec make_spec(const ProblemConfig& cfg) {
    const Grid grid(cfg.intervals);
    const std::size_t ridx = snap_rho_index(cfg.rho, cfg.intervals);
    const double rho_eff = static_cast<double>(ridx) * grid.spacing();
    RhsFamily fam = make_family(cfg.problem, cfg.params, cfg.beta, cfg.mu, rho_eff);
    return BvpSpec(FractionalOrder(cfg.beta), cfg.mu, cfg.rho, std::move(fam), cfg.weights,
                   cfg.components, grid);
}

} // namespace fde
