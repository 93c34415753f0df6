#include "fde/mnc_stability.hpp"

#include "fde/errors.hpp"
#include "fde/picard_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fde {

namespace {

// sum_{n>=k} d_n |Delta m_n| for one member; exact for finite support
double tail_sum(const HahnVector& m, const WeightSequence& d, std::size_t k) {
    const auto& v = m.values;
    const std::size_t len = v.size();
    if (k > len) return 0.0;
    double s = 0.0;
    for (std::size_t n = std::max<std::size_t>(k, 1); n < len; ++n)
        s += d(n) * std::abs(v[n - 1] - v[n]);
    if (len >= 1 && k <= len) s += d(len) * std::abs(v[len - 1]);
    return s;
}

} // namespace

VectorFamily VectorFamily::fixed(std::vector<HahnVector> members) {
    VectorFamily f;
    f.members = std::move(members);
    return f;
}

VectorFamily VectorFamily::unit_sphere(const WeightSequence& d, std::size_t J) {
    if (J == 0) throw std::invalid_argument("unit sphere family needs J >= 1");
    VectorFamily f;
    f.generator = "unit-sphere";
    f.sample_count = J;
    f.sampled_from_generator = true;
    for (std::size_t j = 1; j <= J; ++j) {
        const double scale = (j > 1 ? d(j - 1) : 0.0) + d(j);
        f.members.push_back((1.0 / scale) * HahnVector::basis(j, j));
    }
    return f;
}

MncEstimate hausdorff_mnc(const VectorFamily& family, const WeightSequence& d,
                          std::size_t k_max) {
    if (family.members.empty()) throw std::invalid_argument("family must be nonempty");
    if (k_max == 0) throw std::invalid_argument("k_max must be >= 1");
    MncEstimate est;
    est.k_max = k_max;
    est.is_lower_bound = family.sampled_from_generator;
    est.tail_sup.assign(k_max, 0.0);
    for (std::size_t k = 1; k <= k_max; ++k) {
        double sup = 0.0;
        for (const auto& m : family.members) sup = std::max(sup, tail_sum(m, d, k));
        est.tail_sup[k - 1] = sup;
    }
    est.limit_estimate = est.tail_sup.back();
    return est;
}

MncAxiomReport mnc_axiom_suite(const VectorFamily& family, const VectorFamily& subfamily,
                               const WeightSequence& d, std::size_t k_max) {
    const MncEstimate full = hausdorff_mnc(family, d, k_max);
    const MncEstimate sub = hausdorff_mnc(subfamily, d, k_max);

    MncAxiomReport rep;
    rep.family_estimate = full.limit_estimate;
    rep.subfamily_estimate = sub.limit_estimate;

    rep.monotonicity_ok = true;
    for (std::size_t k = 0; k < k_max; ++k)
        if (sub.tail_sup[k] > full.tail_sup[k] + 1e-12) rep.monotonicity_ok = false;

    rep.convexity_ok = true;
    for (double theta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        VectorFamily combo;
        for (const auto& a : family.members)
            for (const auto& b : subfamily.members)
                combo.members.push_back(theta * a + (1.0 - theta) * b);
        const MncEstimate mixed = hausdorff_mnc(combo, d, k_max);
        for (std::size_t k = 0; k < k_max; ++k) {
            const double rhs = theta * full.tail_sup[k] + (1.0 - theta) * sub.tail_sup[k];
            if (mixed.tail_sup[k] > rhs + 1e-12) rep.convexity_ok = false;
        }
    }
    return rep;
}

HuConstants hu_constants(const BvpSpec& spec, double L) {
    if (L < 0.0) throw std::invalid_argument("Lipschitz constant must be nonnegative");
    HuConstants c;
    c.G = kappa(spec.beta, spec.mu, spec.rho);
    const double gl = c.G * L;
    if (gl >= 1.0) {
        std::ostringstream os;
        os << "stability condition violated: G*L = " << gl << " >= 1";
        throw stability_condition_error(os.str());
    }
    c.G0 = c.G / (1.0 - gl);
    return c;
}

std::string shape_name(PerturbationShape s) {
    return s == PerturbationShape::constant ? "constant" : "sine";
}

HuExperimentReport hu_experiment(const BvpSpec& spec, PerturbationShape shape, double epsilon,
                                 double tol, std::size_t max_iter) {
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
    const ConstantsReport constants = check_existence(spec);
    if (!constants.unique_flag)
        throw stability_condition_error("uniqueness condition fails; experiment not defined");
    const HuConstants c = hu_constants(spec, spec.rhs.lipschitz_L);

    auto g = [shape, epsilon](double s) {
        return shape == PerturbationShape::constant ? epsilon
                                                    : epsilon * std::sin(2.0 * M_PI * s);
    };

    HuExperimentReport rep;
    rep.epsilon = epsilon;
    rep.shape = shape;
    rep.G = c.G;
    rep.G0 = c.G0;

    SolveReport base = picard_solve(spec, nullptr, tol, max_iter);

    RhsFamily perturbed = spec.rhs;
    auto inner = spec.rhs.eval;
    perturbed.eval = [inner, g](std::size_t i, double s, std::span<const double> m) {
        return inner(i, s, m) + g(s);
    };
    BvpSpec pspec(spec.beta, spec.mu, spec.rho, perturbed, spec.weights, spec.components,
                  spec.grid);
    SolveReport pert = picard_solve(pspec, nullptr, tol, max_iter);

    rep.iterations_unperturbed = base.iterations;
    rep.iterations_perturbed = pert.iterations;
    rep.gap = sup_hahn_norm(pert.solution - base.solution, spec.weights);
    rep.bound = c.G0 * epsilon * 1.1;
    rep.bound_satisfied = rep.gap <= rep.bound;

    // the perturbation vector (g, ..., g, 0, ...) as the norms actually see it
    {
        GridFunction gv(spec.components, spec.grid.points());
        for (std::size_t j = 0; j < spec.grid.points(); ++j) {
            const double val = g(spec.grid.node(j));
            for (std::size_t i = 0; i < spec.components; ++i) gv.at(i, j) = val;
        }
        rep.perturbation_hd_norm = sup_hahn_norm(gv, spec.weights);
    }

    rep.unperturbed = std::move(base.solution);
    rep.perturbed = std::move(pert.solution);
    return rep;
}

} // namespace fde
