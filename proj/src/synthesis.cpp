#include "bsw/synthesis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bsw {

namespace {

std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<ModeIndex> unit_modes(int q) {
    return {{-1, 0, q}, {0, -1, q}, {0, 1, q}, {1, 0, q}};
}

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    Field d = field_sum(a, scaled(b, -1.0));
    for (const auto& [idx, c] : d) m = std::max(m, c.max_abs());
    return m;
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (const auto& [idx, c] : f) m = std::max(m, c.max_abs());
    return m;
}

// Reads the kernel amplitudes back off a kernel combination X.
void kernel_amplitudes(const BranchPoint& bp, const Field& X,
                       Complex& A1, Complex& A2, double& C) {
    auto coeff_at = [&](const ModeIndex& idx) {
        auto it = X.find(idx);
        return it == X.end() ? Coeff{} : it->second;
    };
    const double r1 = wavevector(bp.cfg, 1, 0).norm();
    const double r2 = wavevector(bp.cfg, 0, 1).norm();
    A1 = coeff_at({1, 0, bp.q}).g / r1;
    A2 = coeff_at({0, 1, bp.q}).g / r2;
    C = coeff_at({0, 0, 0}).g.real();
}

}  // namespace

Field assemble_X(const BranchPoint& bp, Complex A1, Complex A2, double C) {
    const Field x1 = scaled(xi_field(bp.cfg, {1, 0, bp.q}), A1);
    const Field x2 = scaled(xi_field(bp.cfg, {0, 1, bp.q}), A2);
    Field X = field_sum(field_sum(x1, conj_reflect(x1)),
                        field_sum(x2, conj_reflect(x2)));
    if (C != 0.0) X = field_sum(X, scaled(zeta0_field(), C));
    return prune(X, 0.0);
}

Field correction_V1(const BranchPoint& bp, const Field& X, double mu) {
    const Field generic =
        scaled(solve_T(X, bp.beta0, bp.cfg, unit_modes(bp.q)), mu);
    // closed display: eta-only, mu/beta0 times X's eta coefficients at q > 0
    Field closed;
    for (const auto& [idx, c] : X) {
        if (idx.q == 0) continue;  // the C zeta0 part maps to zero
        if (c.g != Complex{})
            closed[idx] = Coeff{mu * c.g / bp.beta0, 0.0, 0.0};
    }
    const double diff = max_diff(generic, closed);
    if (diff > 1e-13)
        throw std::runtime_error("first correction disagrees with its closed display : " +
                                 num_str(diff));
    return generic;
}

Field second_order_closed(const BranchPoint& bp, const BifurcationCoefficients& co,
                          Complex A1, Complex A2) {
    const LatticeConfig& c = bp.cfg;
    const double K1 = c.k1 * c.k1 * (1.0 + c.tau1 * c.tau1);
    const double K2 = c.k2 * c.k2 * (1.0 + c.tau2 * c.tau2);
    const double pdot = c.k1 * c.k2 * (1.0 - c.tau1 * c.tau2);
    const Complex i(0.0, 1.0);
    const int q2 = 2 * bp.q;
    Field out;
    auto put_pair = [&](int n1, int n2, int q, const Coeff& v) {
        out[{n1, n2, q}] += v;
        out[{-n1, -n2, q}] +=
            Coeff{std::conj(v.g), std::conj(v.f1), std::conj(v.f2)};
    };
    // q = 0 part: quadratic means of the surface elevation, eta only
    put_pair(2, 0, 0, Coeff{-0.25 * K1 * A1 * A1, 0.0, 0.0});
    put_pair(0, 2, 0, Coeff{-0.25 * K2 * A2 * A2, 0.0, 0.0});
    put_pair(1, 1, 0, Coeff{-0.5 * pdot * A1 * A2, 0.0, 0.0});
    put_pair(1, -1, 0, Coeff{0.5 * pdot * A1 * std::conj(A2), 0.0, 0.0});
    // 2q part: coefficient triples delta_1..delta_4 scaled by beta0
    auto put_harmonic = [&](int n1, int n2, Complex amp, const Coeff& delta) {
        put_pair(n1, n2, q2, Coeff{bp.beta0 * amp * delta.g,
                                   bp.beta0 * amp * delta.f1,
                                   bp.beta0 * amp * delta.f2});
    };
    put_harmonic(2, 0, A1 * A1, Coeff{co.a1, i * co.a2, i * c.tau1 * co.a2});
    put_harmonic(0, 2, A2 * A2, Coeff{co.a3, i * co.a4, -i * c.tau2 * co.a4});
    put_harmonic(1, 1, A1 * A2, Coeff{co.b1, i * co.b2, i * co.b3});
    put_harmonic(1, -1, A1 * std::conj(A2), Coeff{co.b4, i * co.b5, i * co.b6});
    return prune(out, 0.0);
}

Field correction_V2(const BranchPoint& bp, const Field& X) {
    const Field generic = prune(
        scaled(solve_T(quadratic_B(X), bp.beta0, bp.cfg, unit_modes(bp.q)), bp.beta0),
        0.0);
    Complex A1, A2;
    double C = 0.0;
    kernel_amplitudes(bp, X, A1, A2, C);
    const Field closed =
        second_order_closed(bp, second_order_coefficients(bp), A1, A2);
    const double scale = std::max(1.0, max_abs(closed));
    const double diff = max_diff(generic, closed);
    if (diff > 1e-9 * scale)
        throw std::runtime_error(
            "second correction disagrees with its closed coefficient table : " +
            num_str(diff));
    return generic;
}

Field apply_shift(const Field& f, const LatticeConfig& cfg,
                  const std::array<double, 2>& sigma) {
    if (sigma[0] == 0.0 && sigma[1] == 0.0) return f;
    Field out;
    for (const auto& [idx, c] : f) {
        const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
        const Complex phase = std::exp(Complex(0.0, -(p.p1 * sigma[0] + p.p2 * sigma[1])));
        out[idx] = c * phase;
    }
    return out;
}

StandingWaveSolution synthesize(const BranchPoint& bp, const Amplitudes& amps,
                                const std::array<double, 2>& sigma, int order) {
    if (order != 1 && order != 2)
        throw std::runtime_error("synthesize order must be 1 or 2 : " +
                                 std::to_string(order));
    StandingWaveSolution sol;
    sol.bp = bp;
    sol.mu = amps.mu;
    sol.C = amps.C;
    sol.A1 = amps.A1();
    sol.A2 = amps.A2();
    sol.sigma = sigma;
    sol.order = order;
    const Field X = assemble_X(bp, sol.A1, sol.A2, amps.C);
    Field U = X;
    if (order == 2) {
        const Field V1 = correction_V1(bp, X, amps.mu);
        const Field V2 = correction_V2(bp, X);
        U = field_sum(U, scaled(field_sum(V1, V2), -1.0));
    }
    sol.field = prune(apply_shift(U, bp.cfg, sigma), 0.0);
    return sol;
}

Field corollary_surface(const BranchPoint& bp, const Amplitudes& amps) {
    if (amps.C != 0.0)
        throw std::runtime_error("the second-order surface expansion requires C = 0 : C = " +
                                 num_str(amps.C));
    const LatticeConfig& c = bp.cfg;
    const double A1 = amps.A1(), A2 = amps.A2();
    const double r1 = wavevector(c, 1, 0).norm();
    const double r2 = wavevector(c, 0, 1).norm();
    Field out;
    auto put_pair = [&](int n1, int n2, int q, Complex eta) {
        out[{n1, n2, q}] += Coeff{eta, 0.0, 0.0};
        out[{-n1, -n2, q}] += Coeff{std::conj(eta), 0.0, 0.0};
    };
    // fundamentals from X
    put_pair(1, 0, bp.q, r1 * A1);
    put_pair(0, 1, bp.q, r2 * A2);
    // quadratic terms: exactly the eta part of -V2 = -(V3 + V4)
    const Field v34 = second_order_closed(bp, second_order_coefficients(bp), A1, A2);
    for (const auto& [idx, cf] : v34)
        if (cf.g != Complex{}) out[idx] += Coeff{-cf.g, 0.0, 0.0};
    return prune(out, 0.0);
}

}  // namespace bsw
