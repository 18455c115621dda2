#include "bsw/linop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bsw {

namespace {

bool contains(const std::vector<ModeIndex>& set, const ModeIndex& idx) {
    return std::find(set.begin(), set.end(), idx) != set.end();
}

std::string mode_str(const ModeIndex& idx) {
    return "(" + std::to_string(idx.n1) + "," + std::to_string(idx.n2) + "," +
           std::to_string(idx.q) + ")";
}

}  // namespace

Field apply_L(const Field& u, double beta, const LatticeConfig& cfg) {
    Field out;
    for (const auto& [idx, c] : u) {
        const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
        const double m = idx.q * (1.0 + cfg.omega * p.norm_sq());
        const Complex pf = p.p1 * c.f1 + p.p2 * c.f2;
        const Complex ib(0.0, beta);
        Coeff r;
        r.g = idx.q > 0 ? -m * c.g + ib * pf : Complex{};
        r.f1 = m * c.f1 + ib * c.g * p.p1;
        r.f2 = m * c.f2 + ib * c.g * p.p2;
        out[idx] += r;
    }
    return out;
}

Field apply_G(const Field& f, const LatticeConfig& cfg) {
    Field out;
    for (const auto& [idx, c] : f) {
        const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
        const Complex i(0.0, 1.0);
        Coeff r;
        r.g = idx.q > 0 ? i * (p.p1 * c.f1 + p.p2 * c.f2) : Complex{};
        r.f1 = i * c.g * p.p1;
        r.f2 = i * c.g * p.p2;
        out[idx] += r;
    }
    return out;
}

Complex compatibility_residue(const Field& f, const LatticeConfig& cfg,
                              const ModeIndex& idx) {
    auto it = f.find(idx);
    if (it == f.end()) return {};
    const Coeff& c = it->second;
    const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
    return p.norm() * c.g + Complex(0.0, 1.0) * (p.p1 * c.f1 + p.p2 * c.f2);
}

std::vector<CompatViolation> check_compatibility(
    const Field& f, const LatticeConfig& cfg,
    const std::vector<ModeIndex>& resonant, double tol) {
    const double scale = std::max(1.0, field_norm(f));
    std::vector<CompatViolation> out;
    for (const ModeIndex& idx : resonant) {
        const Complex r = compatibility_residue(f, cfg, idx);
        if (std::abs(r) > tol * scale) out.push_back({idx, r});
    }
    return out;
}

Field solve_T(const Field& f, double beta, const LatticeConfig& cfg,
              const std::vector<ModeIndex>& resonant) {
    Field out;
    for (const auto& [idx, c] : f) {
        if (idx.n1 == 0 && idx.n2 == 0 && idx.q == 0) continue;
        const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
        if (idx.q == 0 || contains(resonant, idx)) {
            if (c.g != Complex{}) out[idx] += Coeff{c.g / beta, 0.0, 0.0};
            continue;
        }
        const double D = dispersion_delta(p, idx.q, beta, cfg.omega);
        const double m = idx.q * (1.0 + cfg.omega * p.norm_sq());
        const Complex pf = p.p1 * c.f1 + p.p2 * c.f2;
        const Complex i(0.0, 1.0);
        Coeff r;
        r.g = -(i * m * pf + beta * p.norm_sq() * c.g) / D;
        r.f1 = -(-i * m * c.g * p.p1 + beta * pf * p.p1) / D;
        r.f2 = -(-i * m * c.g * p.p2 + beta * pf * p.p2) / D;
        out[idx] += r;
    }
    return out;
}

Field xi_field(const LatticeConfig& cfg, const ModeIndex& idx) {
    const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
    Field out;
    out[idx] = Coeff{p.norm(), Complex(0.0, -p.p1), Complex(0.0, -p.p2)};
    return out;
}

Field zeta0_field() {
    Field out;
    out[{0, 0, 0}] = Coeff{1.0, 0.0, 0.0};
    return out;
}

KernelBasis kernel_basis(double beta0, const LatticeConfig& cfg, double eps_res) {
    const auto resonant = enumerate_resonance_set(beta0, cfg, eps_res);
    if (resonant.empty())
        throw std::runtime_error("kernel_basis needs a nonempty resonance set : beta0 = " +
                                 std::to_string(beta0));
    KernelBasis kb;
    kb.zeta0 = zeta0_field();
    for (const ModeIndex& idx : resonant) {
        kb.indices.push_back(idx);
        kb.xis.push_back(xi_field(cfg, idx));
    }
    return kb;
}

Field general_solution(const Field& f, double beta0, const LatticeConfig& cfg,
                       const std::vector<ModeIndex>& resonant,
                       const std::map<ModeIndex, Complex>& amplitudes,
                       double C) {
    const auto violations = check_compatibility(f, cfg, resonant);
    if (!violations.empty()) {
        std::string detail;
        for (const auto& v : violations) {
            if (!detail.empty()) detail += ", ";
            detail += mode_str(v.idx) + " residue " + std::to_string(std::abs(v.residue));
        }
        throw std::runtime_error("forcing violates the compatibility condition : " + detail);
    }
    Field out = solve_T(f, beta0, cfg, resonant);
    for (const auto& [idx, amp] : amplitudes) {
        if (!contains(resonant, idx))
            throw std::runtime_error("amplitude attached to a nonresonant index : " +
                                     mode_str(idx));
        const Field xi = scaled(xi_field(cfg, idx), amp);
        out = field_sum(out, field_sum(xi, conj_reflect(xi)));
    }
    if (C != 0.0) out = field_sum(out, scaled(zeta0_field(), C));
    return prune(out, 0.0);
}

}  // namespace bsw
