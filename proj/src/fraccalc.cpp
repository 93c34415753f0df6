#include "fde/fraccalc.hpp"

#include <cmath>
#include <stdexcept>

namespace fde {

FractionalOrder::FractionalOrder(double b) : beta(b) {
    if (!(b > 0.0 && b <= 1.0))
        throw std::domain_error("fractional order must lie in (0, 1]");
}

Grid::Grid(std::size_t m) : intervals(m) {
    if (m == 0) throw std::invalid_argument("grid needs at least one interval");
}

std::size_t Grid::node_index(double x) const {
    const double scaled = x * static_cast<double>(intervals);
    const auto j = static_cast<long long>(std::llround(scaled));
    if (j < 0 || j > static_cast<long long>(intervals) || std::abs(scaled - static_cast<double>(j)) > 1e-9)
        throw std::invalid_argument("value is not a grid node");
    return static_cast<std::size_t>(j);
}

namespace {

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_gamma(double x) {
    // valid for x >= 0.5
    double a = kLanczos[0];
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (x - 1.0 + static_cast<double>(k));
    const double t = x + kLanczosG - 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma requires a positive argument");
    if (x < 0.5) return lanczos_gamma(x + 1.0) / x;
    return lanczos_gamma(x);
}

namespace detail {

KernelMoments kernel_moments(std::size_t rmax, double h, double order) {
    if (!(order > 0.0)) throw std::domain_error("kernel order must be positive");
    KernelMoments m;
    m.p0.assign(rmax + 1, 0.0);
    m.p1.assign(rmax + 1, 0.0);
    const double hs = std::pow(h, order);
    double prev_pow = 0.0;      // (r-1)^order
    double prev_pow1 = 0.0;     // (r-1)^(order+1)
    for (std::size_t r = 1; r <= rmax; ++r) {
        const double rd = static_cast<double>(r);
        const double cur_pow = std::pow(rd, order);
        const double cur_pow1 = std::pow(rd, order + 1.0);
        const double d0 = (cur_pow - prev_pow) / order;
        const double d1 = (cur_pow1 - prev_pow1) / (order + 1.0);
        m.p0[r] = hs * d0;
        m.p1[r] = hs * (rd * d0 - d1);
        prev_pow = cur_pow;
        prev_pow1 = cur_pow1;
    }
    return m;
}

} // namespace detail

std::vector<double> kernel_weights(const Grid& grid, double upper, FractionalOrder beta) {
    if (!(upper > 0.0 && upper <= 1.0))
        throw std::invalid_argument("upper limit must lie in (0, 1]");
    const std::size_t J = grid.node_index(upper);
    if (J == 0) throw std::invalid_argument("upper limit must be a positive grid node");
    const auto m = detail::kernel_moments(J, grid.spacing(), beta.beta);
    std::vector<double> w(grid.points(), 0.0);
    for (std::size_t k = 0; k < J; ++k) {
        const std::size_t r = J - k;
        w[k] += m.p0[r] - m.p1[r];
        w[k + 1] += m.p1[r];
    }
    return w;
}

double rl_integral(std::span<const double> f, FractionalOrder beta, const Grid& grid,
                   double upper) {
    if (f.size() != grid.points())
        throw std::invalid_argument("f must be sampled on every grid node");
    if (upper == 0.0) return 0.0;
    const auto w = kernel_weights(grid, upper, beta);
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * f[j];
    return s / gamma(beta.beta);
}

double caputo_monomial(double p, FractionalOrder beta, double xi) {
    if (!(p >= 1.0)) throw std::domain_error("caputo_monomial requires p >= 1");
    return gamma(p + 1.0) / gamma(p + 1.0 - beta.beta) * std::pow(xi, p - beta.beta);
}

} // namespace fde
