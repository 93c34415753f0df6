#pragma once

#include "fde/bvp_core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fde {

/// Result of a fixed-point solve. residual_history holds the
/// C(kappa, h_d) norms of successive iterate differences; converged means
/// the last entry reached the tolerance. empirical_contraction is the
/// largest consecutive-residual ratio with denominator above 1e-14
/// (zero when no ratio is defined).
struct SolveReport {
    GridFunction solution;
    std::size_t iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
    double empirical_contraction = 0.0;
};

/// Picard iteration m^(k+1) = F m^(k) starting from `init` (zero function
/// when null). Stops when the successive-difference norm reaches tol or
/// max_iter is exhausted. Throws divergence_error when the residual grows
/// by more than 10x over 5 consecutive iterations while still above tol.
SolveReport picard_solve(const BvpSpec& spec, const GridFunction* init, double tol,
                         std::size_t max_iter);

inline SolveReport picard_solve(const BvpSpec& spec, double tol, std::size_t max_iter) {
    return picard_solve(spec, nullptr, tol, max_iter);
}

/// sup-node h_d norm of m - F m.
double residual(const BvpSpec& spec, const GridFunction& m);

struct TruncationRow {
    std::size_t components;
    double solution_norm;
    double delta_to_previous; // 0 for the first row
    bool converged;
};

/// Solves the problem at each truncation size and reports the norm
/// differences between consecutive solutions restricted to shared
/// components. Sizes must be nondecreasing.
std::vector<TruncationRow> truncation_study(const BvpSpec& spec,
                                            std::span<const std::size_t> sizes, double tol,
                                            std::size_t max_iter);

} // namespace fde
