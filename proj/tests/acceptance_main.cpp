// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include "fde/config.hpp"
#include "fde/errors.hpp"
#include "fde/mnc_stability.hpp"
#include "fde/picard_solver.hpp"
#include "fde/registry.hpp"
#include "fde/seqspace.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fde;

namespace {

struct Outcome {
    int id;
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

std::vector<Outcome> g_outcomes;

void run_criterion(int id, const std::string& name, double time_limit_s,
                   const std::function<bool(std::ostringstream&)>& body) {
    Outcome o;
    o.id = id;
    o.name = name;
    std::ostringstream detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
        ok = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    o.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (o.seconds >= time_limit_s) {
        ok = false;
        detail << " [time limit " << time_limit_s << "s exceeded]";
    }
    o.pass = ok;
    o.detail = detail.str();
    g_outcomes.push_back(o);
    std::printf("[%s] criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                o.seconds, o.detail.empty() ? "" : (" --" + o.detail).c_str());
    std::fflush(stdout);
}

BvpSpec spec_for(const std::string& key, double beta, double mu, double rho, std::size_t n,
                 std::size_t m) {
    const std::size_t ridx = snap_rho_index(rho, m);
    const double rho_eff = static_cast<double>(ridx) / static_cast<double>(m);
    auto fam = make_family(key, {}, beta, mu, rho_eff);
    return BvpSpec(FractionalOrder(beta), mu, rho, std::move(fam), WeightSequence::linear(), n,
                   Grid(m));
}

double manufactured_sup_error(double beta, double mu, double rho, std::size_t M) {
    auto spec = spec_for("manufactured", beta, mu, rho, 1, M);
    const double c = manufactured_coefficient(mu, spec.rho_effective);
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> vals(-1.0, 1.0);
    GridFunction any(1, M + 1);
    for (std::size_t j = 0; j <= M; ++j) any.at(0, j) = vals(rng);
    auto out = green_apply(spec, any);
    double err = 0.0;
    for (std::size_t j = 0; j <= M; ++j)
        err = std::max(err,
                       std::abs(out.at(0, j) - manufactured_solution(c, spec.grid.node(j))));
    return err;
}

} // namespace

int main() {
    std::printf("acceptance suite\n================\n");

    run_criterion(1, "constant reproduction (example72)", 1.0, [](std::ostringstream& d) {
        auto spec = spec_for("example72", 0.2, 0.5, 1.0 / 6.0, 20, 256);
        auto r = check_existence(spec);
        d << " product_signed = " << r.product_signed << " (target 0.016 +- 0.001)";
        return std::abs(r.product_signed - 0.016) <= 0.001 && r.exists_flag;
    });

    run_criterion(2, "constant discrepancy handling (example71)", 1.0,
                  [](std::ostringstream& d) {
                      auto spec = spec_for("example71", 0.25, 1.0, 1.0 / 3.0, 20, 256);
                      auto r = check_existence(spec);
                      bool advisory = false;
                      for (const auto& a : r.advisories)
                          if (a.find("0.370") != std::string::npos) advisory = true;
                      d << " product_signed = " << r.product_signed
                        << " (target 0.0191 +- 0.001), advisory " << (advisory ? "yes" : "no");
                      return std::abs(r.product_signed - 0.0191) <= 0.001 &&
                             r.product_signed < 1.0 && advisory;
                  });

    run_criterion(3, "operator correctness via manufactured solution", 10.0,
                  [](std::ostringstream& d) {
                      struct Triple { double beta, mu, rho; };
                      bool ok = true;
                      for (const Triple& t : {Triple{0.25, 1.0, 1.0 / 3.0},
                                              Triple{0.5, 0.5, 0.5}, Triple{1.0, 0.0, 0.5}}) {
                          const double e512 = manufactured_sup_error(t.beta, t.mu, t.rho, 512);
                          const double e1024 = manufactured_sup_error(t.beta, t.mu, t.rho, 1024);
                          const bool small = e512 <= 1e-4;
                          const bool roundoff = e512 <= 1e-12 && e1024 <= 1e-12;
                          const double need = std::pow(2.0, 1.0 + t.beta) * 0.8;
                          const bool order_ok = roundoff || e512 / e1024 >= need;
                          d << " [beta=" << t.beta << ": e512=" << e512
                            << " ratio=" << (roundoff ? 0.0 : e512 / e1024) << " need>=" << need
                            << "]";
                          ok = ok && small && order_ok;
                      }
                      return ok;
                  });

    run_criterion(4, "quadrature exactness for p in {0,1}", 1.0, [](std::ostringstream& d) {
        std::mt19937 rng(42);
        std::uniform_real_distribution<double> bs(0.05, 1.0);
        const Grid g(128);
        std::uniform_int_distribution<std::size_t> js(1, 128);
        std::vector<double> ones(g.points(), 1.0), lin(g.points());
        for (std::size_t j = 0; j < lin.size(); ++j) lin[j] = g.node(j);
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const double beta = bs(rng);
            const double upper = g.node(js(rng));
            for (int p = 0; p <= 1; ++p) {
                const double got =
                    rl_integral(p == 0 ? ones : lin, FractionalOrder(beta), g, upper);
                const double want =
                    fde::gamma(p + 1.0) / fde::gamma(p + 1.0 + beta) * std::pow(upper, p + beta);
                worst = std::max(worst, std::abs(got - want));
            }
        }
        d << " worst |error| = " << worst;
        return worst <= 1e-12;
    });

    run_criterion(5, "double-integral reduction agreement", 5.0, [](std::ostringstream& d) {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> cs(-1.0, 1.0), bs(0.05, 1.0);
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            auto spec = spec_for("zero", bs(rng), 0.5, 1.0 / 3.0, 1, 512);
            std::vector<double> phi(spec.grid.points());
            const double c0 = cs(rng), c1 = cs(rng), c2 = cs(rng), c3 = cs(rng);
            for (std::size_t j = 0; j < phi.size(); ++j) {
                const double s = spec.grid.node(j);
                phi[j] = c0 + c1 * s + c2 * s * s + c3 * s * s * s;
            }
            auto r = double_integral_crosscheck(spec, phi);
            worst = std::max(worst, std::abs(r.reduced - r.nested));
        }
        d << " worst |reduced - nested| = " << worst;
        return worst <= 1e-8;
    });

    run_criterion(6, "picard convergence and contraction (example72)", 30.0,
                  [](std::ostringstream& d) {
                      auto spec = spec_for("example72", 0.2, 0.5, 1.0 / 6.0, 20, 256);
                      auto rep = picard_solve(spec, 1e-10, 200);
                      const double res = residual(spec, rep.solution);
                      const double bound =
                          kappa_abs(spec.beta, spec.mu, spec.rho) / 3.0 + 0.05;
                      d << " converged=" << rep.converged << " iters=" << rep.iterations
                        << " final_residual=" << res << " contraction="
                        << rep.empirical_contraction << " (<= " << bound << ")";
                      return rep.converged && res <= 2e-10 &&
                             rep.empirical_contraction <= bound;
                  });

    run_criterion(7, "noncompactness estimator", 5.0, [](std::ostringstream& d) {
        const auto dw = WeightSequence::linear();
        // (a) fixed family flattens to zero beyond its support
        bool a_ok = true;
        {
            auto fam = VectorFamily::fixed(
                {HahnVector({1.0, -2.0, 0.5}), HahnVector({0.0, 3.0})});
            auto est = hausdorff_mnc(fam, dw, 8);
            a_ok = est.limit_estimate == 0.0 && est.tail_sup[3] == 0.0;
        }
        // (b) normalized basis family
        bool b_ok = true;
        {
            auto fam = VectorFamily::unit_sphere(dw, 50);
            auto est = hausdorff_mnc(fam, dw, 40);
            for (double v : est.tail_sup) b_ok = b_ok && std::abs(v - 1.0) <= 1e-12;
        }
        // (c) monotonicity and homogeneity on random pairs
        bool c_ok = true;
        std::mt19937 rng(99);
        std::uniform_int_distribution<std::size_t> cnt(2, 8), len(1, 10);
        std::uniform_real_distribution<double> val(-3.0, 3.0), alpha(-2.0, 2.0);
        for (int t = 0; t < 100; ++t) {
            VectorFamily fam;
            const std::size_t n = cnt(rng);
            for (std::size_t q = 0; q < n; ++q) {
                std::vector<double> v(len(rng));
                for (double& x : v) x = val(rng);
                fam.members.emplace_back(std::move(v));
            }
            std::uniform_int_distribution<std::size_t> keep(1, fam.members.size());
            VectorFamily sub;
            sub.members.assign(fam.members.begin(),
                               fam.members.begin() +
                                   static_cast<std::ptrdiff_t>(keep(rng)));
            auto rep = mnc_axiom_suite(fam, sub, dw, 12);
            c_ok = c_ok && rep.monotonicity_ok;

            const double a = alpha(rng);
            VectorFamily scaled;
            for (const auto& m : fam.members) scaled.members.push_back(a * m);
            auto e0 = hausdorff_mnc(fam, dw, 12);
            auto e1 = hausdorff_mnc(scaled, dw, 12);
            for (std::size_t k = 0; k < 12; ++k)
                c_ok = c_ok && std::abs(e1.tail_sup[k] - std::abs(a) * e0.tail_sup[k]) <=
                                   1e-12 * (1.0 + std::abs(a) * e0.tail_sup[k]);
        }
        d << " a=" << a_ok << " b=" << b_ok << " c=" << c_ok;
        return a_ok && b_ok && c_ok;
    });

    run_criterion(8, "hyers-ulam experiment (example72)", 120.0, [](std::ostringstream& d) {
        auto spec = spec_for("example72", 0.2, 0.5, 1.0 / 6.0, 20, 256);
        bool bounds_ok = true;
        bool scaling_ok = true;
        for (auto shape : {PerturbationShape::constant, PerturbationShape::sine}) {
            std::vector<double> ratios;
            for (double eps : {1e-2, 1e-3, 1e-4}) {
                auto rep = hu_experiment(spec, shape, eps, 1e-12, 200);
                d << " [" << shape_name(shape) << " eps=" << eps << ": gap=" << rep.gap
                  << " bound=" << rep.bound << "]";
                bounds_ok = bounds_ok && rep.bound_satisfied;
                ratios.push_back(rep.gap / eps);
            }
            for (std::size_t k = 0; k + 1 < ratios.size(); ++k)
                scaling_ok = scaling_ok &&
                             std::abs(ratios[k] / ratios[k + 1] - 1.0) <= 0.05;
        }
        d << " bounds_ok=" << bounds_ok << " linear_scaling_ok=" << scaling_ok;
        return bounds_ok && scaling_ok;
    });

    run_criterion(9, "sequence-space suite", 5.0, [](std::ostringstream& d) {
        std::mt19937 rng(20250810);
        const auto dn = WeightSequence::linear();
        const auto ones = WeightSequence::constant();
        std::uniform_int_distribution<std::size_t> len(1, 14);
        std::uniform_real_distribution<double> val(-5.0, 5.0), as(-3.0, 3.0);
        bool ok = true;
        for (int t = 0; t < 1000; ++t) {
            std::vector<double> v(len(rng));
            for (double& x : v) x = val(rng);
            HahnVector m(v);
            std::vector<double> w(len(rng));
            for (double& x : w) x = val(rng);
            HahnVector x(w);

            const double nm = hahn_norm(m, dn);
            const double a = as(rng);
            ok = ok && std::abs(hahn_norm(a * m, dn) - std::abs(a) * nm) <=
                           1e-12 * (1.0 + std::abs(a) * nm);
            ok = ok && hahn_norm(m + x, dn) <=
                           nm + hahn_norm(x, dn) + 1e-12 * (1.0 + nm);
            bool nonzero = false;
            for (double y : v) nonzero = nonzero || y != 0.0;
            if (nonzero) ok = ok && nm > 0.0;

            ok = ok && ak_defect(m, m.support_length(), dn) == 0.0;
            ok = ok && ak_defect(m, m.support_length() + 2, dn) == 0.0;

            double bv = 0.0;
            for (std::size_t n = 0; n + 1 < v.size(); ++n) bv += std::abs(v[n] - v[n + 1]);
            bv += std::abs(v.back());
            ok = ok && std::abs(hahn_norm(m, ones) - bv) <= 1e-12 * (1.0 + bv);
        }
        d << " all randomized checks " << (ok ? "hold" : "violated");
        return ok;
    });

    std::size_t failed = 0;
    for (const auto& o : g_outcomes)
        if (!o.pass) ++failed;
    std::printf("================\n%zu/%zu criteria passed\n", g_outcomes.size() - failed,
                g_outcomes.size());
    return failed == 0 ? 0 : 1;
}
