#include "bsw/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bsw {

namespace {

std::string mode_str(const ModeIndex& idx) {
    return "(" + std::to_string(idx.n1) + "," + std::to_string(idx.n2) + "," +
           std::to_string(idx.q) + ")";
}

std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Kernel combination A1 xi1 + conj + A2 xi2 + conj + C zeta0 at unit modes.
Field unit_X(const BranchPoint& bp, Complex A1, Complex A2, double C) {
    const Field x1 = scaled(xi_field(bp.cfg, {1, 0, bp.q}), A1);
    const Field x2 = scaled(xi_field(bp.cfg, {0, 1, bp.q}), A2);
    Field X = field_sum(field_sum(x1, conj_reflect(x1)),
                        field_sum(x2, conj_reflect(x2)));
    if (C != 0.0) X = field_sum(X, scaled(zeta0_field(), C));
    return prune(X, 0.0);
}

// Raw (unweighted) coefficient pairing; the projection brackets of the
// reduction hold verbatim under this functional.
Complex pair_raw(const Field& a, const Field& b) {
    Complex s = 0.0;
    for (const auto& [idx, ca] : a) {
        auto it = b.find(idx);
        if (it == b.end()) continue;
        const Coeff& cb = it->second;
        s += ca.g * std::conj(cb.g) + ca.f1 * std::conj(cb.f1) +
             ca.f2 * std::conj(cb.f2);
    }
    return s;
}

// Generic route: read l1, l2, l3 off the kernel projections of the
// second-order correction with unit amplitudes.
void pipeline_ls(const BranchPoint& bp, double& l1, double& l2, double& l3) {
    const std::vector<ModeIndex> res{{-1, 0, bp.q}, {0, -1, bp.q},
                                     {0, 1, bp.q}, {1, 0, bp.q}};
    const Field x1 = xi_field(bp.cfg, {1, 0, bp.q});
    const Field x2 = xi_field(bp.cfg, {0, 1, bp.q});
    const Field X = unit_X(bp, 1.0, 1.0, 0.0);
    const Field V2 = scaled(solve_T(quadratic_B(X), bp.beta0, bp.cfg, res), bp.beta0);
    auto proj = [&](const Field& u, const Field& onto) {
        return pair_raw(scaled(quadratic_B(u, V2), 2.0), onto);
    };
    l1 = proj(conj_reflect(x1), x1).real();
    l3 = proj(conj_reflect(x2), x2).real();
    l2 = (proj(x2, x1) + proj(conj_reflect(x2), x1)).real();
}

}  // namespace

BranchPoint validate_branch_point(const LatticeConfig& cfg, double beta0, int q,
                                  double eps_res) {
    cfg.validate();
    if (q < 1)
        throw std::runtime_error("branch point needs q >= 1 : q = " + std::to_string(q));
    const auto found = enumerate_resonance_set(beta0, cfg, eps_res);
    const std::vector<ModeIndex> expected{{-1, 0, q}, {0, -1, q}, {0, 1, q}, {1, 0, q}};
    std::string missing, extra;
    for (const ModeIndex& idx : expected) {
        if (std::find(found.begin(), found.end(), idx) == found.end())
            missing += (missing.empty() ? "" : " ") + mode_str(idx);
    }
    for (const ModeIndex& idx : found) {
        if (std::find(expected.begin(), expected.end(), idx) == expected.end())
            extra += (extra.empty() ? "" : " ") + mode_str(idx);
    }
    if (!missing.empty() || !extra.empty())
        throw std::runtime_error(
            "resonance set is not the four unit modes : missing [" + missing +
            "] extra [" + extra + "] at beta0 = " + num_str(beta0));
    return {cfg, beta0, q};
}

BifurcationCoefficients second_order_coefficients(const BranchPoint& bp) {
    const LatticeConfig& c = bp.cfg;
    const double w = c.omega, b0 = bp.beta0;
    const double q = bp.q;
    const double s1 = std::sqrt(1.0 + c.tau1 * c.tau1);
    const double s2 = std::sqrt(1.0 + c.tau2 * c.tau2);
    const double r1 = c.k1 * s1, r2 = c.k2 * s2;
    const WaveVector Pp = wavevector(c, 1, 1);
    const WaveVector Pm = wavevector(c, 1, -1);
    const double pp2 = Pp.norm_sq(), pm2 = Pm.norm_sq();

    auto check = [](double den, double scale, const char* name) {
        if (std::abs(den) < 1e-12 * scale)
            throw std::runtime_error(std::string("second harmonic is resonant : ") +
                                     name + " = " + num_str(den));
    };
    const int q2 = 2 * bp.q;
    const double d1 = dispersion_delta(Pp, q2, b0, w);
    const double d2 = dispersion_delta(Pm, q2, b0, w);
    check(d1, q2 * q2 * (1 + w * pp2) * (1 + w * pp2) + b0 * b0 * pp2, "d1");
    check(d2, q2 * q2 * (1 + w * pm2) * (1 + w * pm2) + b0 * b0 * pm2, "d2");

    const double e1 = 1.0 + 4.0 * w * r1 * r1;
    const double e2 = 1.0 + 4.0 * w * r2 * r2;
    const double D21 = 4.0 * q * q * e1 * e1 - 4.0 * b0 * b0 * r1 * r1;
    const double D22 = 4.0 * q * q * e2 * e2 - 4.0 * b0 * b0 * r2 * r2;
    check(D21, 4.0 * q * q * e1 * e1 + 4.0 * b0 * b0 * r1 * r1, "a-denominator 1");
    check(D22, 4.0 * q * q * e2 * e2 + 4.0 * b0 * b0 * r2 * r2, "a-denominator 2");

    BifurcationCoefficients co;
    co.d1 = d1;
    co.d2 = d2;
    co.a1 = -(b0 * r1 * r1 * r1 * r1 + 2.0 * q * r1 * r1 * r1 * e1) / D21;
    co.a2 = (2.0 * b0 * c.k1 * r1 * r1 * r1 + q * c.k1 * r1 * r1 * e1) / D21;
    co.a3 = -(b0 * r2 * r2 * r2 * r2 + 2.0 * q * r2 * r2 * r2 * e2) / D22;
    co.a4 = (2.0 * b0 * c.k2 * r2 * r2 * r2 + q * c.k2 * r2 * r2 * e2) / D22;

    const double pdot = c.k1 * c.k2 * (1.0 - c.tau1 * c.tau2);
    const double mp = 2.0 * q * (1.0 + w * pp2);
    const double mm = 2.0 * q * (1.0 + w * pm2);
    co.b1 = -(mp * (r1 + r2) * (pdot + r1 * r2) + b0 * pdot * pp2) / (2.0 * d1);
    const double cb2 = (mp * pdot + b0 * (r1 + r2) * (pdot + r1 * r2)) / (2.0 * d1);
    co.b2 = Pp.p1 * cb2;
    co.b3 = Pp.p2 * cb2;
    co.b4 = (-mm * (r1 + r2) * (r1 * r2 - pdot) + b0 * pdot * pm2) / (2.0 * d2);
    const double cb5 = (-mm * pdot + b0 * (r1 + r2) * (r1 * r2 - pdot)) / (2.0 * d2);
    co.b5 = Pm.p1 * cb5;
    co.b6 = Pm.p2 * cb5;
    return co;
}

CubicCoefficients cubic_coefficients(const BranchPoint& bp,
                                     const BifurcationCoefficients& co) {
    const LatticeConfig& c = bp.cfg;
    const double b0 = bp.beta0;
    const double s1 = std::sqrt(1.0 + c.tau1 * c.tau1);
    const double s2 = std::sqrt(1.0 + c.tau2 * c.tau2);
    const double K1 = c.k1 * c.k1 * (1.0 + c.tau1 * c.tau1);
    const double K2 = c.k2 * c.k2 * (1.0 + c.tau2 * c.tau2);
    const double kk = c.k1 * c.k2;
    const double tt = 1.0 - c.tau1 * c.tau2;

    CubicCoefficients ls;
    ls.l1 = 0.25 * K1 * K1 - b0 * co.a2 * K1 * s1 + 0.5 * b0 * co.a1 * K1;
    // quarter leading coefficient, mirroring l1 (confirmed by the pipeline)
    ls.l3 = 0.25 * K2 * K2 - b0 * co.a4 * K2 * s2 + 0.5 * b0 * co.a3 * K2;
    ls.l2 = kk * kk * tt * tt + 0.5 * b0 * (co.b1 - co.b4) * kk * tt -
            0.5 * b0 * co.b2 * kk * (s1 + s2) -
            0.5 * b0 * co.b3 * kk * (c.tau1 * s2 - c.tau2 * s1) +
            0.5 * b0 * co.b5 * kk * (s1 - s2) -
            0.5 * b0 * co.b6 * kk * (c.tau1 * s2 + c.tau2 * s1);

    double p1 = 0, p2 = 0, p3 = 0;
    pipeline_ls(bp, p1, p2, p3);
    auto agree = [](double closed, double pipe) {
        return std::abs(closed - pipe) <= 1e-9 * std::max(1.0, std::abs(closed));
    };
    if (!agree(ls.l1, p1) || !agree(ls.l2, p2) || !agree(ls.l3, p3))
        throw std::runtime_error(
            "closed-form and pipeline cubic coefficients disagree : closed (" +
            num_str(ls.l1) + ", " + num_str(ls.l2) + ", " + num_str(ls.l3) +
            ") pipeline (" + num_str(p1) + ", " + num_str(p2) + ", " + num_str(p3) + ")");
    ls.variant = "l3-lead-1/4; pipeline-confirmed";
    return ls;
}

double Amplitudes::A1() const { return std::sqrt(A1_sq); }
double Amplitudes::A2() const { return std::sqrt(A2_sq); }

Amplitudes solve_amplitudes(const BranchPoint& bp, const CubicCoefficients& ls,
                            double mu, double C) {
    const LatticeConfig& c = bp.cfg;
    const double K1 = c.k1 * c.k1 * (1.0 + c.tau1 * c.tau1);
    const double K2 = c.k2 * c.k2 * (1.0 + c.tau2 * c.tau2);
    const double det = ls.l1 * ls.l3 - ls.l2 * ls.l2;
    const double det_scale = std::abs(ls.l1 * ls.l3) + ls.l2 * ls.l2;
    if (std::abs(det) <= 1e-12 * std::max(1.0, det_scale))
        throw std::runtime_error("cubic coefficient matrix is degenerate : l1 l3 - l2^2 = " +
                                 num_str(det));
    const double factor = (mu + C * bp.beta0) / (bp.beta0 * det);
    double A1_sq = factor * (ls.l3 * K1 - ls.l2 * K2);
    double A2_sq = factor * (ls.l1 * K2 - ls.l2 * K1);
    auto settle = [&](double& v, const char* name) {
        if (v >= 0.0) return;
        if (v >= -1e-14) {
            v = 0.0;  // rounding, not a missing branch
            return;
        }
        throw std::runtime_error(std::string("branch does not exist for this sign of "
                                             "mu + C beta0 : ") +
                                 name + " = " + num_str(v));
    };
    settle(A1_sq, "|A1|^2");
    settle(A2_sq, "|A2|^2");
    return {A1_sq, A2_sq, mu, C};
}

std::pair<double, double> bifurcation_polynomials(const CubicCoefficients& ls,
                                                  const BranchPoint& bp,
                                                  const Amplitudes& amps) {
    const LatticeConfig& c = bp.cfg;
    const double K1 = c.k1 * c.k1 * (1.0 + c.tau1 * c.tau1);
    const double K2 = c.k2 * c.k2 * (1.0 + c.tau2 * c.tau2);
    const double lead = amps.mu + amps.C * bp.beta0;
    const double P1 = lead * K1 - bp.beta0 * (ls.l1 * amps.A1_sq + ls.l2 * amps.A2_sq);
    const double P2 = lead * K2 - bp.beta0 * (ls.l2 * amps.A1_sq + ls.l3 * amps.A2_sq);
    return {P1, P2};
}

}  // namespace bsw
