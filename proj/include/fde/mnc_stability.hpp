#pragma once

#include "fde/bvp_core.hpp"
#include "fde/seqspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fde {

/// A finite indexed collection of sequences, possibly the sampled prefix of
/// a countable generator. Sampled families only bound the true measure from
/// below, which the estimate records.
struct VectorFamily {
    std::vector<HahnVector> members;
    std::string generator;          // empty for fixed families
    std::size_t sample_count = 0;
    bool sampled_from_generator = false;

    static VectorFamily fixed(std::vector<HahnVector> members);

    /// {e^(j) / (d_{j-1} + d_j) : j = 1..J} with d_0 = 0; every member has
    /// unit h_d norm.
    static VectorFamily unit_sphere(const WeightSequence& d, std::size_t J);
};

/// Tail sup-sums sup_m sum_{n>=k} d_n |Delta m_n| for k = 1..k_max.
struct MncEstimate {
    std::vector<double> tail_sup; // entry t-1 holds the value for k = t
    double limit_estimate = 0.0;  // tail_sup at k_max
    std::size_t k_max = 0;
    bool is_lower_bound = false;
};

/// Hausdorff measure-of-noncompactness estimator on h_d: finite supports
/// make every tail an exact finite sum. Throws for an empty family.
MncEstimate hausdorff_mnc(const VectorFamily& family, const WeightSequence& d,
                          std::size_t k_max);

struct MncAxiomReport {
    bool monotonicity_ok = false;
    bool convexity_ok = false;
    double family_estimate = 0.0;
    double subfamily_estimate = 0.0;
};

/// Checks the estimator against the monotonicity axiom (subfamily estimate
/// never exceeds the family estimate, at every k) and spot-checks convexity
/// on theta in {0, 1/4, 1/2, 3/4, 1}.
MncAxiomReport mnc_axiom_suite(const VectorFamily& family, const VectorFamily& subfamily,
                               const WeightSequence& d, std::size_t k_max);

struct HuConstants {
    double G = 0.0;
    double G0 = 0.0;
};

/// G is the bound bracket at xi = 1 (the constant kappa); G0 = G/(1 - G*L).
/// Throws stability_condition_error when G*L >= 1.
HuConstants hu_constants(const BvpSpec& spec, double L);

enum class PerturbationShape { constant, sine };

std::string shape_name(PerturbationShape s);

struct HuExperimentReport {
    double epsilon = 0.0;
    PerturbationShape shape = PerturbationShape::constant;
    GridFunction unperturbed;
    GridFunction perturbed;
    std::size_t iterations_unperturbed = 0;
    std::size_t iterations_perturbed = 0;
    double gap = 0.0;            // ||m - z|| in C(kappa, h_d)
    double G = 0.0;
    double G0 = 0.0;
    double bound = 0.0;          // G0 * epsilon * 1.1
    bool bound_satisfied = false;
    double perturbation_hd_norm = 0.0; // sup_xi h_d norm of the perturbation vector
};

/// Solves the problem and its perturbation (right side phi_i + g with the
/// same scalar shape added to every component, |g| <= epsilon) and measures
/// the solution gap against G0 * epsilon * 1.1. A violated bound is reported
/// in the flags, not thrown. Requires the uniqueness condition to hold.
HuExperimentReport hu_experiment(const BvpSpec& spec, PerturbationShape shape, double epsilon,
                                 double tol, std::size_t max_iter);

} // namespace fde
