#include "bsw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bsw/linop.hpp"

namespace bsw {

namespace {

std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

double ResidualReport::total() const {
    return std::sqrt(eta_norm * eta_norm + v_norm * v_norm);
}

Field residual_field(const Field& u, double beta, const LatticeConfig& cfg) {
    const Field lin = apply_L(u, beta, cfg);
    const Field quad = apply_G(quadratic_B(u), cfg);
    return prune(field_sum(lin, scaled(quad, beta)), 0.0);
}

ResidualReport nonlinear_residual(const StandingWaveSolution& sol) {
    ResidualReport rep;
    rep.mu = sol.mu;
    const double beta = sol.bp.beta0 + sol.mu;
    const Field r = residual_field(sol.field, beta, sol.bp.cfg);
    double eta2 = 0.0, v2 = 0.0;
    for (const auto& [idx, c] : r) {
        const double w = idx.q == 0 ? 1.0 : 0.5;
        eta2 += w * std::norm(c.g);
        v2 += w * (std::norm(c.f1) + std::norm(c.f2));
    }
    rep.eta_norm = std::sqrt(eta2);
    rep.v_norm = std::sqrt(v2);
    return rep;
}

OrderFit order_fit(const BranchPoint& bp, double C, int order,
                   const std::vector<double>& mu_list) {
    if (mu_list.size() < 5)
        throw std::runtime_error("order fit needs at least five mu samples : got " +
                                 std::to_string(mu_list.size()));
    double lo = 0.0, hi = 0.0;
    for (double mu : mu_list) {
        const double m = std::abs(mu);
        if (m == 0.0 || m > 0.01)
            throw std::runtime_error(
                "order fit samples must satisfy 0 < |mu| <= 0.01 : mu = " + num_str(mu));
        lo = lo == 0.0 ? m : std::min(lo, m);
        hi = std::max(hi, m);
    }
    if (hi < 100.0 * lo)
        throw std::runtime_error("order fit samples must span at least two decades : ratio = " +
                                 num_str(hi / lo));

    const CubicCoefficients ls =
        cubic_coefficients(bp, second_order_coefficients(bp));
    OrderFit fit;
    std::vector<double> xs, ys;
    for (double mu : mu_list) {
        const Amplitudes amps = solve_amplitudes(bp, ls, mu, C);
        const StandingWaveSolution sol = synthesize(bp, amps, {0.0, 0.0}, order);
        const double total = nonlinear_residual(sol).total();
        fit.mu_samples.push_back(mu);
        fit.residuals.push_back(total);
        xs.push_back(std::log(std::abs(mu)));
        ys.push_back(std::log(total));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        syy += ys[i] * ys[i];
    }
    const double vxx = n * sxx - sx * sx;
    const double vxy = n * sxy - sx * sy;
    const double vyy = n * syy - sy * sy;
    fit.slope = vxy / vxx;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.r_squared = vyy == 0.0 ? 1.0 : (vxy * vxy) / (vxx * vyy);
    return fit;
}

double kernel_certificate(const BranchPoint& bp) {
    return kernel_certificate(bp, bp.beta0);
}

double kernel_certificate(const BranchPoint& bp, double beta_eval) {
    const KernelBasis kb = kernel_basis(bp.beta0, bp.cfg);
    double worst = field_norm(apply_L(kb.zeta0, beta_eval, bp.cfg));
    for (const Field& xi : kb.xis)
        worst = std::max(worst, field_norm(apply_L(xi, beta_eval, bp.cfg)));
    return worst;
}

}  // namespace bsw
