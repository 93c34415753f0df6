#include "fde/json_io.hpp"

#include <cstdio>

namespace fde {

using nlohmann::json;

namespace {

json grid_to_json(const GridFunction& u, const Grid& grid) {
    json out;
    std::vector<double> xi(grid.points());
    for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = grid.node(j);
    out["xi"] = xi;
    json comps = json::array();
    for (std::size_t i = 0; i < u.components(); ++i) {
        std::vector<double> row(u.points());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = u.at(i, j);
        comps.push_back(row);
    }
    out["components"] = comps;
    return out;
}

} // namespace

json to_json(const ConstantsReport& r) {
    json j;
    j["kappa_signed"] = r.kappa_signed;
    j["kappa_abs"] = r.kappa_abs;
    j["equibound_A"] = r.equibound_A;
    j["lipschitz_L"] = r.lipschitz_L;
    j["product_signed"] = r.product_signed;
    j["product_abs"] = r.product_abs;
    j["exists_flag"] = r.exists_flag;
    j["unique_flag"] = r.unique_flag;
    j["G"] = r.G;
    if (r.G0) j["G0"] = *r.G0;
    j["bracket_sup"] = r.bracket_sup;
    j["bracket_sup_xi"] = r.bracket_sup_xi;
    j["sup_at_right_end"] = r.sup_at_right_end;
    j["advisories"] = r.advisories;
    return j;
}

json to_json(const SolveReport& r, const BvpSpec& spec) {
    json j;
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["residual_history"] = r.residual_history;
    j["empirical_contraction"] = r.empirical_contraction;
    j["rho_requested"] = spec.rho;
    j["rho_effective"] = spec.rho_effective;
    j["solution"] = grid_to_json(r.solution, spec.grid);
    return j;
}

json to_json(const MncEstimate& e, const VectorFamily& family) {
    json j;
    j["tail_sup"] = e.tail_sup;
    j["limit_estimate"] = e.limit_estimate;
    j["k_max"] = e.k_max;
    j["is_lower_bound"] = e.is_lower_bound;
    j["generator"] = family.generator;
    j["members"] = family.members.size();
    return j;
}

json to_json(const HuExperimentReport& r, const BvpSpec& spec) {
    json j;
    j["epsilon"] = r.epsilon;
    j["shape"] = shape_name(r.shape);
    j["gap"] = r.gap;
    j["bound"] = r.bound;
    j["bound_satisfied"] = r.bound_satisfied;
    j["G"] = r.G;
    j["G0"] = r.G0;
    j["perturbation_hd_norm"] = r.perturbation_hd_norm;
    j["iterations_unperturbed"] = r.iterations_unperturbed;
    j["iterations_perturbed"] = r.iterations_perturbed;
    j["unperturbed"] = grid_to_json(r.unperturbed, spec.grid);
    j["perturbed"] = grid_to_json(r.perturbed, spec.grid);
    return j;
}

json to_json(const std::vector<TruncationRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json j;
        j["N"] = row.components;
        j["solution_norm"] = row.solution_norm;
        j["delta_to_previous"] = row.delta_to_previous;
        j["converged"] = row.converged;
        arr.push_back(j);
    }
    return arr;
}

std::string solution_csv(const GridFunction& u, const Grid& grid) {
    std::string out = "xi";
    char buf[64];
    for (std::size_t i = 1; i <= u.components(); ++i) {
        std::snprintf(buf, sizeof(buf), ",m_%zu", i);
        out += buf;
    }
    out += '\n';
    for (std::size_t j = 0; j < grid.points(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", grid.node(j));
        out += buf;
        for (std::size_t i = 0; i < u.components(); ++i) {
            std::snprintf(buf, sizeof(buf), ",%.17g", u.at(i, j));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace fde
