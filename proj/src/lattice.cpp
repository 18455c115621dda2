#include "bsw/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace bsw {

namespace {

std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void LatticeConfig::validate() const {
    auto need_positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw std::runtime_error(std::string("lattice parameter must be positive : ") +
                                     name + " = " + std::to_string(v));
    };
    need_positive(omega, "omega");
    need_positive(k1, "k1");
    need_positive(k2, "k2");
    need_positive(tau1, "tau1");
    need_positive(tau2, "tau2");
    // determinant of (P1, P2) is -(tau1 + tau2) k1 k2, nonzero whenever the
    // parameters are positive; asserted anyway.
    if (!((tau1 + tau2) * k1 * k2 != 0.0))
        throw std::runtime_error("lattice generators are parallel : determinant = 0");
}

double WaveVector::norm() const { return std::hypot(p1, p2); }

WaveVector wavevector(const LatticeConfig& cfg, int n1, int n2) {
    return {cfg.k1 * n1 + cfg.k2 * n2, cfg.tau1 * cfg.k1 * n1 - cfg.tau2 * cfg.k2 * n2};
}

double dispersion_delta(const WaveVector& p, int q, double beta, double omega) {
    const double t = q * (1.0 + omega * p.norm_sq());
    return t * t - beta * beta * p.norm_sq();
}

double resonance_offset(const WaveVector& p, int q, double beta, double omega) {
    return q * (1.0 + omega * p.norm_sq()) - beta * p.norm();
}

std::vector<ModeIndex> enumerate_resonance_set(double beta, const LatticeConfig& cfg,
                                               double eps_res) {
    if (!(beta > 0.0))
        throw std::runtime_error("enumerate_resonance_set needs beta > 0 : beta = " +
                                 std::to_string(beta));
    cfg.validate();
    const double w = cfg.omega;
    std::vector<ModeIndex> out;
    const int qmax = static_cast<int>(std::floor(beta / (2.0 * std::sqrt(w)) + 1e-12));
    for (int q = 1; q <= qmax; ++q) {
        // real roots of omega q r^2 - beta r + q = 0 bound the admissible |p|
        double disc = beta * beta - 4.0 * w * q * q;
        if (disc < -eps_res * beta * beta) continue;
        disc = std::max(disc, 0.0);
        const double rmax = (beta + std::sqrt(disc)) / (2.0 * w * q);
        const double K = rmax * rmax * (1.0 + 10.0 * eps_res);
        // candidate bounds: same-sign (n1,n2) have (k1|n1|+k2|n2|)^2 <= K,
        // opposite-sign have (tau1 k1|n1| + tau2 k2|n2|)^2 <= K
        const int nb1 = static_cast<int>(std::floor(
                            std::sqrt(K) / std::min(cfg.k1, cfg.tau1 * cfg.k1))) + 1;
        const int nb2 = static_cast<int>(std::floor(
                            std::sqrt(K) / std::min(cfg.k2, cfg.tau2 * cfg.k2))) + 1;
        for (int n1 = -nb1; n1 <= nb1; ++n1)
            for (int n2 = -nb2; n2 <= nb2; ++n2) {
                if (n1 == 0 && n2 == 0) continue;
                const WaveVector p = wavevector(cfg, n1, n2);
                if (std::abs(resonance_offset(p, q, beta, w)) <= eps_res * beta)
                    out.push_back({n1, n2, q});
            }
    }
    std::sort(out.begin(), out.end(), [](const ModeIndex& a, const ModeIndex& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.n1 != b.n1) return a.n1 < b.n1;
        return a.n2 < b.n2;
    });
    return out;
}

double operator_bound(double beta, const LatticeConfig& cfg, double eps_res) {
    cfg.validate();
    const double w = cfg.omega;
    const auto resonant = enumerate_resonance_set(beta, cfg, eps_res);
    auto is_resonant = [&](int n1, int n2, int q) {
        return std::binary_search(resonant.begin(), resonant.end(), ModeIndex{n1, n2, q},
                                  [](const ModeIndex& a, const ModeIndex& b) {
                                      if (a.q != b.q) return a.q < b.q;
                                      if (a.n1 != b.n1) return a.n1 < b.n1;
                                      return a.n2 < b.n2;
                                  });
    };
    // the exhaustive region is q|p| <= 2 beta / omega with q >= 1, so
    // |p| <= 2 beta / omega; the same quadrant bounds as the enumeration apply
    const double pmax = 2.0 * beta / w;
    const double K = pmax * pmax;
    const int nb1 = static_cast<int>(std::floor(
                        std::sqrt(K) / std::min(cfg.k1, cfg.tau1 * cfg.k1))) + 1;
    const int nb2 = static_cast<int>(std::floor(
                        std::sqrt(K) / std::min(cfg.k2, cfg.tau2 * cfg.k2))) + 1;
    double best = 0.0;
    for (int n1 = -nb1; n1 <= nb1; ++n1)
        for (int n2 = -nb2; n2 <= nb2; ++n2) {
            if (n1 == 0 && n2 == 0) continue;  // |p| = 0 contributes ratio 0
            const WaveVector p = wavevector(cfg, n1, n2);
            const double ap = p.norm();
            if (ap > pmax + 1e-12) continue;
            const int qtop = static_cast<int>(std::floor(pmax / ap + 1e-12));
            for (int q = 1; q <= qtop; ++q) {
                if (is_resonant(n1, n2, q)) continue;
                const double den = std::abs(resonance_offset(p, q, beta, w));
                if (den < eps_res)
                    throw std::runtime_error(
                        "operator_bound hit a near-resonant denominator : mode (" +
                        std::to_string(n1) + "," + std::to_string(n2) + "," +
                        std::to_string(q) + "), offset = " + num_str(den));
                best = std::max(best, ap / den);
            }
        }
    return std::max(1.0 / beta, best);
}

double beta0_for_unit_modes(const LatticeConfig& cfg, int q, double eps_res) {
    cfg.validate();
    if (q < 1)
        throw std::runtime_error("beta0_for_unit_modes needs q >= 1 : q = " +
                                 std::to_string(q));
    auto candidate = [&](const WaveVector& p) {
        return q * (1.0 + cfg.omega * p.norm_sq()) / p.norm();
    };
    const double c1 = candidate(wavevector(cfg, 1, 0));
    const double c2 = candidate(wavevector(cfg, 0, 1));
    if (std::abs(c1 - c2) > eps_res * std::max(c1, c2))
        throw std::runtime_error("unit modes give inconsistent beta0 : " + num_str(c1) +
                                 " vs " + num_str(c2));
    return 0.5 * (c1 + c2);
}

}  // namespace bsw
