#include "fde/config.hpp"
#include "fde/errors.hpp"
#include "fde/json_io.hpp"
#include "fde/mnc_stability.hpp"
#include "fde/picard_solver.hpp"
#include "fde/registry.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fde::config_error("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw fde::config_error("cannot open output file '" + out_path + "'");
        out << text << '\n';
    }
}

json problem_header(const fde::ProblemConfig& cfg, const char* command) {
    json j;
    j["command"] = command;
    j["problem"] = cfg.problem;
    j["beta"] = cfg.beta;
    j["mu"] = cfg.mu;
    j["rho"] = cfg.rho;
    j["N"] = cfg.components;
    j["M"] = cfg.intervals;
    j["weights"] = cfg.weights.kind_name();
    return j;
}

int run_verify(const fde::ProblemConfig& cfg, const std::string& out_path) {
    fde::BvpSpec spec = fde::make_spec(cfg);
    fde::ConstantsReport report = fde::check_existence(spec);
    json j = problem_header(cfg, "verify");
    j["constants"] = fde::to_json(report);
    emit(j.dump(2), out_path);
    return report.exists_flag ? 0 : 1;
}

int run_solve(const fde::ProblemConfig& cfg, const std::string& output,
              const std::string& out_path) {
    fde::BvpSpec spec = fde::make_spec(cfg);
    fde::SolveReport report = fde::picard_solve(spec, cfg.tol, cfg.max_iter);
    if (output == "csv") {
        emit(fde::solution_csv(report.solution, spec.grid), out_path);
    } else {
        json j = problem_header(cfg, "solve");
        j["tol"] = cfg.tol;
        j["max_iter"] = cfg.max_iter;
        j["report"] = fde::to_json(report, spec);
        j["final_residual"] = fde::residual(spec, report.solution);
        emit(j.dump(2), out_path);
    }
    return report.converged ? 0 : 1;
}

int run_mnc(const fde::ProblemConfig& cfg, const std::string& generator, std::size_t count,
            std::size_t kmax, const std::string& out_path) {
    if (generator != "unit-sphere")
        throw fde::config_error("unknown family generator '" + generator + "'");
    fde::VectorFamily family = fde::VectorFamily::unit_sphere(cfg.weights, count);
    fde::MncEstimate est = fde::hausdorff_mnc(family, cfg.weights, kmax);
    json j = problem_header(cfg, "mnc");
    j["estimate"] = fde::to_json(est, family);
    emit(j.dump(2), out_path);
    return 0;
}

int run_stability(const fde::ProblemConfig& cfg, double epsilon, const std::string& shape,
                  const std::string& out_path) {
    fde::PerturbationShape s;
    if (shape == "constant") {
        s = fde::PerturbationShape::constant;
    } else if (shape == "sine") {
        s = fde::PerturbationShape::sine;
    } else {
        throw fde::config_error("field '--shape' must be 'constant' or 'sine'");
    }
    fde::BvpSpec spec = fde::make_spec(cfg);
    fde::HuExperimentReport rep = fde::hu_experiment(spec, s, epsilon, cfg.tol, cfg.max_iter);
    json j = problem_header(cfg, "stability");
    j["experiment"] = fde::to_json(rep, spec);
    emit(j.dump(2), out_path);
    if (!rep.bound_satisfied) {
        std::cerr << "stability bound violated: gap " << rep.gap << " > bound " << rep.bound
                  << " (G0 = " << rep.G0 << ", epsilon = " << rep.epsilon << ")\n";
        return 1;
    }
    return 0;
}

int run_study(const fde::ProblemConfig& cfg, std::vector<std::size_t> Ns,
              std::vector<std::size_t> Ms, const std::string& out_path) {
    json j = problem_header(cfg, "study");

    if (!Ns.empty()) {
        fde::BvpSpec spec = fde::make_spec(cfg);
        auto rows = fde::truncation_study(spec, Ns, cfg.tol, cfg.max_iter);
        j["truncation_table"] = fde::to_json(rows);
    }

    if (!Ms.empty()) {
        json table = json::array();
        fde::GridFunction prev;
        std::size_t prev_m = 0;
        double prev_measure = 0.0;
        for (std::size_t m : Ms) {
            fde::ProblemConfig sub = cfg;
            sub.intervals = m;
            fde::BvpSpec spec = fde::make_spec(sub);
            fde::SolveReport rep = fde::picard_solve(spec, sub.tol, sub.max_iter);

            json row;
            row["M"] = m;
            row["converged"] = rep.converged;
            double measure = 0.0;
            if (cfg.problem == "manufactured") {
                const double c = fde::manufactured_coefficient(cfg.mu, spec.rho_effective);
                for (std::size_t i = 0; i < rep.solution.components(); ++i)
                    for (std::size_t jn = 0; jn < rep.solution.points(); ++jn)
                        measure = std::max(measure,
                                           std::abs(rep.solution.at(i, jn) -
                                                    fde::manufactured_solution(
                                                        c, spec.grid.node(jn))));
                row["max_abs_error"] = measure;
            } else if (prev_m != 0 && m % prev_m == 0) {
                // compare on the shared (coarser) nodes
                const std::size_t stride = m / prev_m;
                fde::GridFunction diff(rep.solution.components(), prev_m + 1);
                for (std::size_t i = 0; i < diff.components(); ++i)
                    for (std::size_t jn = 0; jn <= prev_m; ++jn)
                        diff.at(i, jn) = rep.solution.at(i, jn * stride) - prev.at(i, jn);
                measure = fde::sup_hahn_norm(diff, cfg.weights);
                row["delta_to_previous"] = measure;
            }
            if (prev_m != 0 && prev_measure > 0.0 && measure > 0.0)
                row["observed_order"] = std::log2(prev_measure / measure) /
                                        std::log2(static_cast<double>(m) /
                                                  static_cast<double>(prev_m));
            table.push_back(row);
            prev = rep.solution;
            prev_m = m;
            prev_measure = measure;
        }
        j["grid_table"] = table;
    }

    if (Ns.empty() && Ms.empty())
        throw fde::config_error("study needs at least one of --Ns or --Ms");
    emit(j.dump(2), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for infinite systems of Caputo fractional boundary-value "
                 "problems in generalized Hahn sequence spaces"};
    app.require_subcommand(1);

    std::string config_path, out_path, output_override;
    std::string generator = "unit-sphere", shape = "constant";
    std::size_t count = 50, kmax = 40;
    double epsilon = 1e-3;
    std::vector<std::size_t> Ns, Ms;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "problem configuration (JSON)")->required();
        cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
        cmd->add_option("--output", output_override, "output format: json or csv");
    };

    CLI::App* verify = app.add_subcommand("verify", "existence/uniqueness constants and flags");
    add_common(verify);

    CLI::App* solve = app.add_subcommand("solve", "fixed-point solve of the truncated system");
    add_common(solve);

    CLI::App* mnc = app.add_subcommand("mnc", "noncompactness estimate for a family generator");
    add_common(mnc);
    mnc->add_option("--generator", generator, "family generator (unit-sphere)");
    mnc->add_option("--count", count, "number of sampled members");
    mnc->add_option("--kmax", kmax, "largest tail index");

    CLI::App* stability = app.add_subcommand("stability", "perturbation experiment");
    add_common(stability);
    stability->add_option("--epsilon", epsilon, "perturbation amplitude");
    stability->add_option("--shape", shape, "perturbation shape: constant or sine");

    CLI::App* study = app.add_subcommand("study", "truncation and grid refinement tables");
    add_common(study);
    study->add_option("--Ns", Ns, "truncation sizes")->delimiter(',');
    study->add_option("--Ms", Ms, "grid sizes")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        fde::ProblemConfig cfg = fde::parse_config(read_file(config_path));
        if (!output_override.empty()) {
            if (output_override != "json" && output_override != "csv")
                throw fde::config_error("field '--output' must be 'json' or 'csv'");
            cfg.output = output_override;
        }
        if (verify->parsed()) return run_verify(cfg, out_path);
        if (solve->parsed()) return run_solve(cfg, cfg.output, out_path);
        if (mnc->parsed()) return run_mnc(cfg, generator, count, kmax, out_path);
        if (stability->parsed()) return run_stability(cfg, epsilon, shape, out_path);
        if (study->parsed()) return run_study(cfg, Ns, Ms, out_path);
        return 2;
    } catch (const fde::singular_parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const fde::divergence_error& e) {
        std::cerr << "error: " << e.what() << "\nresidual history:";
        for (double r : e.residual_history) std::cerr << ' ' << r;
        std::cerr << '\n';
        return 4;
    } catch (const fde::stability_condition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const fde::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
