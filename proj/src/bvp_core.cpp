#include "fde/bvp_core.hpp"

#include "fde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fde {

namespace {

constexpr double kSingularTol = 1e-9;

double denominator_or_throw(double mu, double rho) {
    const double den = 2.0 - mu * rho * rho;
    if (std::abs(den) <= kSingularTol) {
        std::ostringstream os;
        os << "singular parameters: |2 - mu*rho^2| = " << std::abs(den)
           << " with mu = " << mu << ", rho = " << rho;
        throw singular_parameter_error(os.str());
    }
    return den;
}

} // namespace

HahnVector GridFunction::column(std::size_t j) const {
    std::vector<double> v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = at(i, j);
    return HahnVector(std::move(v));
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    if (a.components() != b.components() || a.points() != b.points())
        throw std::invalid_argument("grid function shapes differ");
    GridFunction r(a.components(), a.points());
    for (std::size_t k = 0; k < r.raw().size(); ++k) r.raw()[k] = a.raw()[k] - b.raw()[k];
    return r;
}

double sup_hahn_norm(const GridFunction& u, const WeightSequence& d) {
    const std::size_t n = u.components();
    std::vector<double> dn(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) dn[k] = d(k);
    double best = 0.0;
    for (std::size_t j = 0; j < u.points(); ++j) {
        double s = 0.0;
        for (std::size_t i = 1; i < n; ++i) s += dn[i] * std::abs(u.at(i - 1, j) - u.at(i, j));
        s += dn[n] * std::abs(u.at(n - 1, j));
        best = std::max(best, s);
    }
    return best;
}

std::size_t snap_rho_index(double rho, std::size_t intervals) {
    auto idx = static_cast<long long>(std::llround(rho * static_cast<double>(intervals)));
    idx = std::max<long long>(1, std::min<long long>(idx, static_cast<long long>(intervals) - 1));
    return static_cast<std::size_t>(idx);
}

BvpSpec::BvpSpec(FractionalOrder beta_, double mu_, double rho_, RhsFamily rhs_,
                 WeightSequence weights_, std::size_t components_, Grid grid_)
    : beta(beta_), mu(mu_), rho(rho_), rhs(std::move(rhs_)), weights(std::move(weights_)),
      components(components_), grid(grid_),
      rho_index(snap_rho_index(rho_, grid_.intervals)),
      rho_effective(static_cast<double>(rho_index) * grid.spacing()) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
    if (grid.intervals < 2)
        throw std::invalid_argument("grid needs at least 2 intervals to hold an interior rho");
    if (components == 0) throw std::invalid_argument("truncation size must be >= 1");
    denominator_or_throw(mu, rho);
    denominator_or_throw(mu, rho_effective);
}

double kappa(FractionalOrder beta, double mu, double rho) {
    const double den = denominator_or_throw(mu, rho);
    const double g1 = gamma(beta.beta + 1.0);
    const double g2 = gamma(beta.beta + 2.0);
    return 1.0 / g1 - 2.0 / (den * g1) + 2.0 * mu * std::pow(rho, beta.beta + 1.0) / (den * g2);
}

double kappa_abs(FractionalOrder beta, double mu, double rho) {
    const double den = denominator_or_throw(mu, rho);
    const double g1 = gamma(beta.beta + 1.0);
    const double g2 = gamma(beta.beta + 2.0);
    return 1.0 / g1 + std::abs(2.0 / (den * g1)) +
           std::abs(2.0 * mu * std::pow(rho, beta.beta + 1.0) / (den * g2));
}

double hu_bracket(double xi, FractionalOrder beta, double mu, double rho) {
    const double den = denominator_or_throw(mu, rho);
    const double g1 = gamma(beta.beta + 1.0);
    const double g2 = gamma(beta.beta + 2.0);
    return std::pow(xi, beta.beta) / g1 - 2.0 * xi / (den * g1) +
           2.0 * mu * xi * std::pow(rho, beta.beta + 1.0) / (den * g2);
}

ConstantsReport check_existence(const BvpSpec& spec) {
    ConstantsReport r;
    r.kappa_signed = kappa(spec.beta, spec.mu, spec.rho);
    r.kappa_abs = kappa_abs(spec.beta, spec.mu, spec.rho);
    r.equibound_A = spec.rhs.equibound_A;
    r.lipschitz_L = spec.rhs.lipschitz_L;
    r.product_signed = r.kappa_signed * r.equibound_A;
    r.product_abs = r.kappa_abs * r.equibound_A;
    r.exists_flag = r.product_signed < 1.0;
    r.unique_flag = r.kappa_signed * r.lipschitz_L < 1.0;
    r.G = r.kappa_signed;
    const double gl = r.G * r.lipschitz_L;
    if (gl < 1.0) r.G0 = r.G / (1.0 - gl);

    // scan the bracket; its supremum is what a sharp pointwise bound would use
    const std::size_t scan = 4096;
    r.bracket_sup = 0.0;
    r.bracket_sup_xi = 0.0;
    for (std::size_t j = 0; j <= scan; ++j) {
        const double xi = static_cast<double>(j) / static_cast<double>(scan);
        const double b = hu_bracket(xi, spec.beta, spec.mu, spec.rho);
        if (b > r.bracket_sup) {
            r.bracket_sup = b;
            r.bracket_sup_xi = xi;
        }
    }
    r.sup_at_right_end = r.bracket_sup <= r.G * (1.0 + 1e-12) + 1e-15;
    if (!r.sup_at_right_end) {
        std::ostringstream os;
        os << "bound factor attains its maximum " << r.bracket_sup << " at xi = "
           << r.bracket_sup_xi << " rather than at xi = 1 (value " << r.G
           << "); G is reported at xi = 1 by definition";
        r.advisories.push_back(os.str());
    }
    if (spec.rhs.quoted_product &&
        std::abs(r.product_signed - *spec.rhs.quoted_product) > 1e-3) {
        char quoted[32];
        std::snprintf(quoted, sizeof(quoted), "%.3f", *spec.rhs.quoted_product);
        std::ostringstream os;
        os << "recomputed condition product " << r.product_signed << " differs from the value "
           << quoted << " quoted with this example; the recomputed value is reported";
        r.advisories.push_back(os.str());
    }
    return r;
}

GreenOperator::GreenOperator(const BvpSpec& spec) : spec_(spec) {
    const std::size_t M = spec_.grid.intervals;
    const double h = spec_.grid.spacing();
    const double b = spec_.beta.beta;

    denom_ = denominator_or_throw(spec_.mu, spec_.rho_effective);
    inv_gamma_beta_ = 1.0 / gamma(b);
    mom_ = detail::kernel_moments(M, h, b);

    w2_.assign(M + 1, 0.0);
    for (std::size_t k = 0; k < M; ++k) {
        const std::size_t r = M - k;
        w2_[k] += mom_.p0[r] - mom_.p1[r];
        w2_[k + 1] += mom_.p1[r];
    }

    const auto mom3 = detail::kernel_moments(spec_.rho_index, h, b + 1.0);
    w3_.assign(M + 1, 0.0);
    for (std::size_t k = 0; k < spec_.rho_index; ++k) {
        const std::size_t r = spec_.rho_index - k;
        w3_[k] += (mom3.p0[r] - mom3.p1[r]) / b;
        w3_[k + 1] += mom3.p1[r] / b;
    }

    // Starting correction: the base rule is exact for 1 and s; one extra
    // condition makes it exact for s^(1-b) as well. Solving the 3x3 system
    // with right-hand side (0, 0, 1) keeps the first two exactness
    // conditions intact. Skipped where the basis degenerates (b near 0 or 1).
    corrected_ = b >= 0.05 && b <= 0.95 && M >= 3;
    if (corrected_) {
        const double x1 = h, x2 = 2.0 * h, x3 = 3.0 * h;
        const double s1 = std::pow(x1, 1.0 - b), s2 = std::pow(x2, 1.0 - b),
                     s3 = std::pow(x3, 1.0 - b);
        // solve [[1,1,1],[x1,x2,x3],[s1,s2,s3]] v = (0,0,1) by elimination
        const double a21 = x2 - x1, a31 = x3 - x1;
        const double b21 = s2 - s1, b31 = s3 - s1;
        const double det = a21 * b31 - a31 * b21;
        if (std::abs(det) < 1e-300) {
            corrected_ = false;
        } else {
            // v2, v3 from the reduced 2x2 system; v1 = -(v2+v3)
            const double v3 = a21 / det;
            const double v2 = -a31 / det;
            corr_v_ = {-(v2 + v3), v2, v3};

            corr_E_.assign(M + 1, 0.0);
            std::vector<double> fs(M + 1);
            for (std::size_t j = 0; j <= M; ++j)
                fs[j] = std::pow(static_cast<double>(j) * h, 1.0 - b);
            const double exact_slope = gamma(2.0 - b) * gamma(b); // B(2-b, b)
            for (std::size_t J = 1; J <= M; ++J) {
                double q = 0.0;
                for (std::size_t k = 0; k < J; ++k) {
                    const std::size_t r = J - k;
                    q += (mom_.p0[r] - mom_.p1[r]) * fs[k] + mom_.p1[r] * fs[k + 1];
                }
                corr_E_[J] = exact_slope * (static_cast<double>(J) * h) - q;
            }
        }
    }
}

GridFunction GreenOperator::apply(const GridFunction& m) const {
    const std::size_t M = spec_.grid.intervals;
    const std::size_t N = spec_.components;
    if (m.components() != N || m.points() != M + 1)
        throw std::invalid_argument("grid function does not match the problem grid");

    // sample the right-hand side
    GridFunction phi(N, M + 1);
    {
        std::vector<double> col(N);
        for (std::size_t j = 0; j <= M; ++j) {
            const double s = spec_.grid.node(j);
            for (std::size_t i = 0; i < N; ++i) col[i] = m.at(i, j);
            for (std::size_t i = 0; i < N; ++i) {
                const double v = spec_.rhs.eval(i + 1, s, col);
                if (!std::isfinite(v)) {
                    std::ostringstream os;
                    os << "right-hand side returned a non-finite value at component "
                       << (i + 1) << ", node " << j << " (s = " << s << ")";
                    throw evaluation_error(os.str());
                }
                phi.at(i, j) = v;
            }
        }
    }

    GridFunction out(N, M + 1);
    const double two_over_den = 2.0 / denom_;
    for (std::size_t i = 0; i < N; ++i) {
        const double* f = &phi.raw()[i * (M + 1)];

        double corr13 = 0.0;
        if (corrected_) corr13 = corr_v_[0] * f[1] + corr_v_[1] * f[2] + corr_v_[2] * f[3];

        double t2 = 0.0;
        for (std::size_t j = 0; j <= M; ++j) t2 += w2_[j] * f[j];
        if (corrected_) t2 += corr_E_[M] * corr13;

        double t3 = 0.0;
        for (std::size_t j = 0; j <= spec_.rho_index; ++j) t3 += w3_[j] * f[j];

        const double slope = inv_gamma_beta_ * (-two_over_den * t2 + spec_.mu * two_over_den * t3);

        out.at(i, 0) = 0.0;
        for (std::size_t J = 1; J <= M; ++J) {
            double q = 0.0;
            for (std::size_t k = 0; k < J; ++k) {
                const std::size_t r = J - k;
                q += (mom_.p0[r] - mom_.p1[r]) * f[k] + mom_.p1[r] * f[k + 1];
            }
            if (corrected_) q += corr_E_[J] * corr13;
            out.at(i, J) = inv_gamma_beta_ * q + spec_.grid.node(J) * slope;
        }
    }
    return out;
}

GridFunction green_apply(const BvpSpec& spec, const GridFunction& m) {
    return GreenOperator(spec).apply(m);
}

CrosscheckResult double_integral_crosscheck(const BvpSpec& spec,
                                            std::span<const double> phi_samples) {
    const std::size_t M = spec.grid.intervals;
    if (phi_samples.size() != M + 1)
        throw std::invalid_argument("phi must be sampled on every grid node");
    const double b = spec.beta.beta;
    const double h = spec.grid.spacing();
    const std::size_t R = spec.rho_index;

    CrosscheckResult out{0.0, 0.0};

    // reduced: single pass with kernel (rho - n)^b / b
    {
        const auto mom3 = detail::kernel_moments(R, h, b + 1.0);
        double s = 0.0;
        for (std::size_t k = 0; k < R; ++k) {
            const std::size_t r = R - k;
            s += ((mom3.p0[r] - mom3.p1[r]) * phi_samples[k] + mom3.p1[r] * phi_samples[k + 1]) / b;
        }
        out.reduced = s;
    }

    // nested: outer integration cell by cell; the inner integral of the
    // piecewise-linear interpolant has closed-form s-dependence, integrated
    // again in closed form over each outer cell.
    {
        double total = 0.0;
        for (std::size_t j = 0; j < R; ++j) {
            const double sj = static_cast<double>(j) * h;
            const double sj1 = sj + h;
            const double gj = (phi_samples[j + 1] - phi_samples[j]) / h;
            const double aj = phi_samples[j] - gj * sj;

            // partial inner piece [n_j, s], integrated over s in [s_j, s_j1]
            const double t1 = (aj + gj * sj) * std::pow(h, b + 1.0) / (b * (b + 1.0)) +
                              gj * std::pow(h, b + 2.0) / (b * (b + 2.0));
            const double t2 = gj * std::pow(h, b + 2.0) / ((b + 1.0) * (b + 2.0));
            total += t1 - t2;

            for (std::size_t k = 0; k < j; ++k) {
                const double nk = static_cast<double>(k) * h;
                const double nk1 = nk + h;
                const double gk = (phi_samples[k + 1] - phi_samples[k]) / h;
                const double ak = phi_samples[k] - gk * nk;

                auto moments = [&](double nref, double& i1, double& i2) {
                    const double va = sj - nref;
                    const double vb = sj1 - nref;
                    const double d1 = std::pow(vb, b + 1.0) - std::pow(va, b + 1.0);
                    const double d2 = std::pow(vb, b + 2.0) - std::pow(va, b + 2.0);
                    i1 = (ak + gk * nref) * d1 / (b + 1.0) + gk * d2 / (b + 2.0);
                    i2 = d2 / (b + 2.0);
                };
                double i1a, i2a, i1b, i2b;
                moments(nk, i1a, i2a);
                moments(nk1, i1b, i2b);
                total += (i1a - i1b) / b - gk * (i2a - i2b) / (b + 1.0);
            }
        }
        out.nested = total;
    }
    return out;
}

} // namespace fde
