#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fde {

/// Fractional differentiation order, restricted to (0, 1].
struct FractionalOrder {
    double beta;

    explicit FractionalOrder(double b);
};

/// Uniform grid xi_j = j/M on [0, 1].
struct Grid {
    std::size_t intervals; // M

    explicit Grid(std::size_t m);

    std::size_t points() const { return intervals + 1; }
    double spacing() const { return 1.0 / static_cast<double>(intervals); }
    double node(std::size_t j) const { return static_cast<double>(j) * spacing(); }

    /// Index of the node equal to x; throws std::invalid_argument if x is
    /// not a grid node (tolerance 1e-9).
    std::size_t node_index(double x) const;
};

/// Gamma function for x > 0 (Lanczos approximation, relative error well
/// below 1e-12). Throws std::domain_error for x <= 0.
double gamma(double x);

namespace detail {

/// Per-interval moments of the kernel (t - s)^(order-1) against the linear
/// interpolation basis, on a uniform grid with spacing h. For the interval
/// whose right end is r steps below t:
///   p0[r] = integral of the kernel over the interval,
///   p1[r] = integral of the kernel times the rising hat (s - s_left)/h.
/// Valid for any kernel order > 0, r = 1..rmax.
struct KernelMoments {
    std::vector<double> p0;
    std::vector<double> p1;
};

KernelMoments kernel_moments(std::size_t rmax, double h, double order);

} // namespace detail

/// Product-trapezoidal weights w_j with
///   sum_j w_j f(xi_j) = integral_0^upper (upper - s)^(beta-1) f(s) ds
/// exactly for piecewise-linear f. `upper` must be a grid node in (0, 1].
std::vector<double> kernel_weights(const Grid& grid, double upper, FractionalOrder beta);

/// Riemann-Liouville integral I^beta f at a grid node:
/// (1/Gamma(beta)) sum_j w_j f_j. Exact for piecewise-linear f.
/// upper == 0 returns 0.
double rl_integral(std::span<const double> f, FractionalOrder beta, const Grid& grid,
                   double upper);

/// Caputo derivative of s^p at xi for p >= 1:
/// Gamma(p+1)/Gamma(p+1-beta) * xi^(p-beta). Throws std::domain_error for p < 1.
double caputo_monomial(double p, FractionalOrder beta, double xi);

/// Caputo derivative of a constant vanishes for every order in (0, 1].
constexpr double caputo_constant() { return 0.0; }

} // namespace fde
