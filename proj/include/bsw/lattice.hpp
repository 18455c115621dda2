#pragma once

#include <compare>
#include <vector>

namespace bsw {

// Doubly periodic lattice geometry. The two generating wave vectors are
// P1 = k1*(1, tau1) and P2 = k2*(1, -tau2); omega is the squared inverse
// period ratio entering the dispersion relation.
struct LatticeConfig {
    double omega = 1.0;
    double k1 = 1.0;
    double k2 = 1.0;
    double tau1 = 1.0;
    double tau2 = 1.0;

    // Throws if any parameter is non-positive or the generators are parallel.
    void validate() const;
};

// Integer mode index: spatial lattice coordinates (n1, n2) and temporal
// harmonic q >= 0. Negative q is never stored; time parity is fixed by the
// field kind (eta ~ cos(q t), v ~ sin(q t)).
struct ModeIndex {
    int n1 = 0;
    int n2 = 0;
    int q = 0;

    auto operator<=>(const ModeIndex&) const = default;
};

struct WaveVector {
    double p1 = 0.0;
    double p2 = 0.0;

    double norm_sq() const { return p1 * p1 + p2 * p2; }
    double norm() const;
};

// p(n1, n2) = n1*P1 + n2*P2 = (k1*n1 + k2*n2, tau1*k1*n1 - tau2*k2*n2).
WaveVector wavevector(const LatticeConfig& cfg, int n1, int n2);

// Dispersion function Delta(p, q) = q^2 (1 + omega |p|^2)^2 - beta^2 |p|^2.
// Its zeros with q > 0 are the resonant modes of the linearized system.
double dispersion_delta(const WaveVector& p, int q, double beta, double omega);

// Signed distance to resonance: q (1 + omega |p|^2) - beta |p|.
double resonance_offset(const WaveVector& p, int q, double beta, double omega);

// All mode indices with q >= 1 whose |p| lies within eps_res (relative to
// beta) of a root of omega*q*r^2 - beta*r + q = 0. Sorted by (q, n1, n2).
std::vector<ModeIndex> enumerate_resonance_set(double beta,
                                               const LatticeConfig& cfg,
                                               double eps_res = 1e-9);

// Bound M = max(1/beta, S) for the mode-wise solve, where S is the exhaustive
// maximum of |p| / |q (1 + omega |p|^2) - beta |p||
// over the finite set {(n1,n2,q) not resonant : q |p| <= 2 beta / omega,
// (n1,n2) != (0,0)}; outside that set the ratio is below 1/beta.
// Throws if an enumerated denominator falls under eps_res*beta (unresolved
// near-resonance; the caller must move beta).
double operator_bound(double beta, const LatticeConfig& cfg,
                      double eps_res = 1e-9);

// The beta at which the four unit modes (+-1,0,q), (0,+-1,q) are resonant:
// q (1 + omega |Pj|^2) / |Pj| must agree for j = 1, 2. Throws when the two
// candidates disagree beyond eps_res (relative).
double beta0_for_unit_modes(const LatticeConfig& cfg, int q,
                            double eps_res = 1e-9);

}  // namespace bsw
