#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fde/fraccalc.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace fde;

namespace {

// reference values computed with 40-digit arithmetic ahead of the build
constexpr double kGammaHalf = 1.7724538509055160273;   // sqrt(pi)
constexpr double kGamma125 = 0.90640247705547707798;
constexpr double kGamma12 = 0.91816874239976062243;
constexpr double kGamma225 = 1.1330030963193463475;
constexpr double kGamma275 = 1.6083594219855456592;

std::vector<double> sample(const Grid& g, double (*f)(double)) {
    std::vector<double> v(g.points());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(g.node(j));
    return v;
}

} // namespace

TEST_CASE("gamma reference values") {
    CHECK(fde::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fde::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fde::gamma(0.5) == doctest::Approx(kGammaHalf).epsilon(1e-13));
    CHECK(fde::gamma(1.25) == doctest::Approx(kGamma125).epsilon(1e-13));
    CHECK(fde::gamma(1.2) == doctest::Approx(kGamma12).epsilon(1e-13));
    CHECK(fde::gamma(2.25) == doctest::Approx(kGamma225).epsilon(1e-13));
    CHECK(fde::gamma(2.75) == doctest::Approx(kGamma275).epsilon(1e-13));
    CHECK(fde::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK_THROWS_AS(fde::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(fde::gamma(-1.5), std::domain_error);
}

TEST_CASE("gamma recurrence and libm cross-check") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> xs(0.1, 10.0);
    for (int t = 0; t < 1000; ++t) {
        const double x = xs(rng);
        CHECK(fde::gamma(x + 1.0) == doctest::Approx(x * fde::gamma(x)).epsilon(1e-11));
        CHECK(fde::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(5e-13));
    }
}

TEST_CASE("fractional order and grid validation") {
    CHECK_THROWS_AS(FractionalOrder(0.0), std::domain_error);
    CHECK_THROWS_AS(FractionalOrder(1.5), std::domain_error);
    CHECK_NOTHROW(FractionalOrder(1.0));

    const Grid g(8);
    CHECK(g.points() == 9);
    CHECK(g.node_index(0.5) == 4);
    CHECK(g.node_index(1.0) == 8);
    CHECK_THROWS_AS(g.node_index(0.3), std::invalid_argument);
    CHECK_THROWS_AS(Grid(0), std::invalid_argument);
}

TEST_CASE("kernel weights integrate the constant exactly") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> bs(0.05, 1.0);
    const Grid g(64);
    std::uniform_int_distribution<std::size_t> js(1, 64);
    for (int t = 0; t < 50; ++t) {
        const double beta = bs(rng);
        const std::size_t J = js(rng);
        const double upper = g.node(J);
        const auto w = kernel_weights(g, upper, FractionalOrder(beta));
        double s = 0.0;
        for (double x : w) s += x;
        CHECK(s == doctest::Approx(std::pow(upper, beta) / beta).epsilon(1e-12));
    }
}

TEST_CASE("kernel weights reproduce first moments") {
    const Grid g(128);
    // plain integral of s over [0,1]
    {
        const auto w = kernel_weights(g, 1.0, FractionalOrder(1.0));
        double s = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * g.node(j);
        CHECK(s == doctest::Approx(0.5).epsilon(1e-13));
    }
    // Beta-function value: integral_0^1 (1-s)^(-1/2) s ds = B(2, 1/2) = 4/3
    {
        const auto w = kernel_weights(g, 1.0, FractionalOrder(0.5));
        double s = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * g.node(j);
        CHECK(s == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(kernel_weights(g, 0.7001 / 128.0, FractionalOrder(0.5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_weights(g, 0.0, FractionalOrder(0.5)), std::invalid_argument);
}

TEST_CASE("riemann-liouville integral on monomials") {
    const Grid g(128);
    const auto ones = sample(g, +[](double) { return 1.0; });
    const auto lin = sample(g, +[](double s) { return s; });

    CHECK(rl_integral(ones, FractionalOrder(1.0), g, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rl_integral(ones, FractionalOrder(0.5), g, 0.25) ==
          doctest::Approx(std::pow(0.25, 0.5) / fde::gamma(1.5)).epsilon(1e-13));
    CHECK(rl_integral(lin, FractionalOrder(0.25), g, 1.0) ==
          doctest::Approx(1.0 / kGamma225).epsilon(1e-12));
    CHECK(rl_integral(ones, FractionalOrder(0.5), g, 0.0) == 0.0);

    // exactness for p in {0, 1} at random (beta, t)
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> bs(0.05, 1.0);
    std::uniform_int_distribution<std::size_t> js(1, 128);
    for (int t = 0; t < 20; ++t) {
        const double beta = bs(rng);
        const double upper = g.node(js(rng));
        for (int p = 0; p <= 1; ++p) {
            const auto& f = p == 0 ? ones : lin;
            const double got = rl_integral(f, FractionalOrder(beta), g, upper);
            const double want = fde::gamma(p + 1.0) / fde::gamma(p + 1.0 + beta) *
                                std::pow(upper, p + beta);
            CHECK(std::abs(got - want) <= 1e-12);
        }
    }
}

TEST_CASE("quadrature converges at second order on s^2") {
    for (double beta : {0.25, 0.5, 0.9}) {
        const double exact = fde::gamma(3.0) / fde::gamma(3.0 + beta);
        std::vector<double> errs;
        for (std::size_t M : {64u, 128u, 256u}) {
            const Grid g(M);
            std::vector<double> f(g.points());
            for (std::size_t j = 0; j < f.size(); ++j) f[j] = g.node(j) * g.node(j);
            errs.push_back(std::abs(rl_integral(f, FractionalOrder(beta), g, 1.0) - exact));
        }
        CHECK(errs[0] / errs[1] >= std::pow(2.0, 1.5));
        CHECK(errs[1] / errs[2] >= std::pow(2.0, 1.5));
    }
}

TEST_CASE("iterated first-order integrals match the kernel form") {
    // I^1(I^1 f)(1) = integral_0^1 (1-s) f(s) ds for polynomial f
    const Grid g(256);
    const auto f = sample(g, +[](double s) { return 1.0 + 2.0 * s - s * s; });
    std::vector<double> inner(g.points(), 0.0);
    for (std::size_t j = 1; j < g.points(); ++j)
        inner[j] = rl_integral(f, FractionalOrder(1.0), g, g.node(j));
    const double twice = rl_integral(inner, FractionalOrder(1.0), g, 1.0);
    // integral_0^1 (1-s)(1+2s-s^2) ds = 3/4
    CHECK(twice == doctest::Approx(0.75).epsilon(1e-4));
}

TEST_CASE("caputo monomial oracle") {
    CHECK(fde::caputo_monomial(1.0, FractionalOrder(1.0), 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fde::caputo_monomial(2.0, FractionalOrder(0.25), 1.0) ==
          doctest::Approx(2.0 / kGamma275).epsilon(1e-12));
    CHECK(fde::caputo_monomial(2.0, FractionalOrder(1.0), 0.5) ==
          doctest::Approx(1.0).epsilon(1e-13)); // d/dxi xi^2 at 0.5
    CHECK(caputo_constant() == 0.0);
    CHECK_THROWS_AS(fde::caputo_monomial(0.5, FractionalOrder(0.5), 0.5), std::domain_error);
}
