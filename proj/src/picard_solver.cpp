#include "fde/picard_solver.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fde {

SolveReport picard_solve(const BvpSpec& spec, const GridFunction* init, double tol,
                         std::size_t max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iter == 0) throw std::invalid_argument("max_iter must be >= 1");

    const GreenOperator op(spec);
    GridFunction cur = init ? *init : GridFunction(spec.components, spec.grid.points());
    if (cur.components() != spec.components || cur.points() != spec.grid.points())
        throw std::invalid_argument("initial iterate does not match the problem shape");

    SolveReport report;
    for (std::size_t k = 0; k < max_iter; ++k) {
        GridFunction next = op.apply(cur);
        const double res = sup_hahn_norm(next - cur, spec.weights);
        if (!std::isfinite(res))
            throw evaluation_error("non-finite iterate in fixed-point iteration");
        report.residual_history.push_back(res);
        cur = std::move(next);
        report.iterations = k + 1;
        if (res <= tol) {
            report.converged = true;
            break;
        }
        const auto& h = report.residual_history;
        if (h.size() >= 6) {
            const double base = h[h.size() - 6];
            if (base > tol && h.back() > 10.0 * base) {
                std::ostringstream os;
                os << "fixed-point iteration diverges: residual grew from " << base << " to "
                   << h.back() << " over 5 iterations";
                throw divergence_error(os.str(), h);
            }
        }
    }
    report.solution = std::move(cur);

    for (std::size_t k = 0; k + 1 < report.residual_history.size(); ++k) {
        const double denom = report.residual_history[k];
        if (denom > 1e-14)
            report.empirical_contraction =
                std::max(report.empirical_contraction, report.residual_history[k + 1] / denom);
    }
    return report;
}

double residual(const BvpSpec& spec, const GridFunction& m) {
    return sup_hahn_norm(m - green_apply(spec, m), spec.weights);
}

std::vector<TruncationRow> truncation_study(const BvpSpec& spec,
                                            std::span<const std::size_t> sizes, double tol,
                                            std::size_t max_iter) {
    if (sizes.empty()) throw std::invalid_argument("truncation study needs at least one size");
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k)
        if (sizes[k + 1] < sizes[k])
            throw std::invalid_argument("truncation sizes must be nondecreasing");

    std::vector<TruncationRow> rows;
    GridFunction prev;
    for (std::size_t n : sizes) {
        BvpSpec sub(spec.beta, spec.mu, spec.rho, spec.rhs, spec.weights, n, spec.grid);
        SolveReport rep = picard_solve(sub, nullptr, tol, max_iter);

        TruncationRow row{};
        row.components = n;
        row.converged = rep.converged;
        row.solution_norm = sup_hahn_norm(rep.solution, spec.weights);
        if (!rows.empty()) {
            const std::size_t shared = std::min(prev.components(), rep.solution.components());
            GridFunction diff(shared, spec.grid.points());
            for (std::size_t i = 0; i < shared; ++i)
                for (std::size_t j = 0; j < spec.grid.points(); ++j)
                    diff.at(i, j) = rep.solution.at(i, j) - prev.at(i, j);
            row.delta_to_previous = sup_hahn_norm(diff, spec.weights);
        }
        rows.push_back(row);
        prev = std::move(rep.solution);
    }
    return rows;
}

} // namespace fde
