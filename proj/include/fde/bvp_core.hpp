#pragma once

#include "fde/fraccalc.hpp"
#include "fde/seqspace.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fde {

/// One family of right-hand sides phi_i(s, m). `eval` receives the 1-based
/// component index, the time s, and the vector of all component values at s.
/// Each family declares its equiboundedness and Lipschitz constants; they are
/// registry metadata, not derived from the callable.
struct RhsFamily {
    std::string key;
    std::function<double(std::size_t i, double s, std::span<const double> m)> eval;
    double equibound_A = 0.0;
    double lipschitz_L = 0.0;
    std::optional<double> quoted_product; // condition product quoted with the source example
};

/// Values u[i][j] = m_i(xi_j) of the truncated system on the grid.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(std::size_t components, std::size_t points)
        : n_(components), p_(points), data_(components * points, 0.0) {}

    std::size_t components() const { return n_; }
    std::size_t points() const { return p_; }

    double& at(std::size_t i, std::size_t j) { return data_[i * p_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * p_ + j]; }

    /// Component values at node j as a finitely supported sequence.
    HahnVector column(std::size_t j) const;

    const std::vector<double>& raw() const { return data_; }
    std::vector<double>& raw() { return data_; }

private:
    std::size_t n_ = 0, p_ = 0;
    std::vector<double> data_;
};

GridFunction operator-(const GridFunction& a, const GridFunction& b);

/// sup over grid nodes of the h_d norm of the component vector.
double sup_hahn_norm(const GridFunction& u, const WeightSequence& d);

/// Nearest-node snap of rho; the snapped index is clamped to [1, M-1].
std::size_t snap_rho_index(double rho, std::size_t intervals);

/// Full problem instance. rho is stored as requested and as snapped to the
/// grid; the snapped value is the one the integral operator uses.
struct BvpSpec {
    FractionalOrder beta;
    double mu;
    double rho;
    RhsFamily rhs;
    WeightSequence weights;
    std::size_t components; // truncation size N
    Grid grid;

    std::size_t rho_index;
    double rho_effective;

    BvpSpec(FractionalOrder beta_, double mu_, double rho_, RhsFamily rhs_,
            WeightSequence weights_, std::size_t components_, Grid grid_);
};

/// Existence/uniqueness constants and stability constants for one problem.
struct ConstantsReport {
    double kappa_signed = 0.0;
    double kappa_abs = 0.0;
    double equibound_A = 0.0;
    double lipschitz_L = 0.0;
    double product_signed = 0.0;
    double product_abs = 0.0;
    bool exists_flag = false;
    bool unique_flag = false;
    double G = 0.0;
    std::optional<double> G0;
    double bracket_sup = 0.0;    // max of the xi-dependent bound factor on a fine grid
    double bracket_sup_xi = 0.0; // where that max is attained
    bool sup_at_right_end = false;
    std::vector<std::string> advisories;
};

/// The signed constant
///   1/Gamma(b+1) - 2/((2-mu rho^2) Gamma(b+1)) + 2 mu rho^(b+1)/((2-mu rho^2) Gamma(b+2)).
/// Exactly zero when mu == 0. Throws singular_parameter_error when
/// |2 - mu rho^2| <= 1e-9.
double kappa(FractionalOrder beta, double mu, double rho);

/// Triangle-inequality-safe variant: absolute values of all three terms.
double kappa_abs(FractionalOrder beta, double mu, double rho);

/// The xi-dependent bound factor whose value at xi = 1 is kappa().
double hu_bracket(double xi, FractionalOrder beta, double mu, double rho);

/// Evaluates the constants, the condition flags and the stability constants
/// for a problem. Also scans the bracket over xi and records where its
/// maximum sits; an advisory is emitted when the maximum is interior.
ConstantsReport check_existence(const BvpSpec& spec);

/// The integral operator of the boundary-value representation:
///   (F m)(xi) = I^b[phi](xi)
///             - 2 xi/((2-mu r^2) Gamma(b)) * integral_0^1 (1-s)^(b-1) phi ds
///             + 2 mu xi/((2-mu r^2) Gamma(b)) * integral_0^r (r-n)^b/b phi dn
/// discretized with product-trapezoidal rules. The first two terms carry a
/// three-node starting correction that makes them exact also for the
/// s^(1-b) endpoint layer the forcing terms of this problem class exhibit;
/// without it the scheme drops below the required accuracy near s = 0.
class GreenOperator {
public:
    explicit GreenOperator(const BvpSpec& spec);

    GridFunction apply(const GridFunction& m) const;

    double rho_effective() const { return spec_.rho_effective; }
    std::size_t rho_index() const { return spec_.rho_index; }
    const BvpSpec& spec() const { return spec_; }

private:
    BvpSpec spec_;
    detail::KernelMoments mom_;       // kernel order beta
    std::vector<double> w2_;          // full-range row, upper = 1
    std::vector<double> w3_;          // reduced third-term row on [0, rho]
    bool corrected_ = false;
    std::array<double, 3> corr_v_{};  // correction weights at nodes 1..3, scaled by E
    std::vector<double> corr_E_;      // per-upper-node defect of s^(1-b)
    double inv_gamma_beta_ = 0.0;
    double denom_ = 0.0;
};

/// Convenience wrapper: one operator application.
GridFunction green_apply(const BvpSpec& spec, const GridFunction& m);

struct CrosscheckResult {
    double reduced;
    double nested;
};

/// Evaluates the third-term double integral two ways on the same samples:
/// `reduced` uses the analytic order swap (single weakly singular pass),
/// `nested` integrates the piecewise-linear interpolant cell by cell in the
/// outer variable with closed-form inner moments, never using the swap.
CrosscheckResult double_integral_crosscheck(const BvpSpec& spec,
                                            std::span<const double> phi_samples);

} // namespace fde
