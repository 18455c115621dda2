#pragma once

#include <string>
#include <utility>

#include "bsw/linop.hpp"

namespace bsw {

// A (beta0, q, lattice) triple whose resonance set is exactly the four unit
// modes (+-1,0,q), (0,+-1,q) - the hypothesis behind the reduced amplitude
// equations.
struct BranchPoint {
    LatticeConfig cfg;
    double beta0 = 0.0;
    int q = 1;
};

// Checks the four-unit-mode hypothesis; throws listing extra or missing
// resonances otherwise.
BranchPoint validate_branch_point(const LatticeConfig& cfg, double beta0, int q,
                                  double eps_res = 1e-9);

// Scalar coefficients of the second-order correction. The d's are the
// dispersion denominators at the combined second-harmonic modes.
struct BifurcationCoefficients {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
    double b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
    double d1 = 0, d2 = 0;
};

// Closed-form tables. b2/b3 and b5/b6 are evaluated in cancelled form as the
// components of (P1 + P2) resp. (P1 - P2) times a shared scalar, so symmetric
// lattices produce exact zeros instead of 0/0. Throws a degenerate-
// denominator error when a second harmonic is (near-)resonant.
BifurcationCoefficients second_order_coefficients(const BranchPoint& bp);

// Cubic coefficients of the reduced amplitude equations.
struct CubicCoefficients {
    double l1 = 0, l2 = 0, l3 = 0;
    std::string variant;  // which closed-form convention the pipeline confirmed
};

// Evaluates l1, l2, l3 twice - literal closed forms and the generic
// projection pipeline (assemble X with unit amplitudes, V2 = beta0 T B(X,X),
// read the l's off the kernel projections) - and throws if the two routes
// disagree beyond 1e-9.
CubicCoefficients cubic_coefficients(const BranchPoint& bp,
                                     const BifurcationCoefficients& co);

struct Amplitudes {
    double A1_sq = 0.0;
    double A2_sq = 0.0;
    double mu = 0.0;
    double C = 0.0;

    double A1() const;
    double A2() const;
};

// Solves the truncated amplitude equations
//   l1 |A1|^2 + l2 |A2|^2 = (mu + C beta0) K1 / beta0
//   l2 |A1|^2 + l3 |A2|^2 = (mu + C beta0) K2 / beta0
// with K_j = k_j^2 (1 + tau_j^2). Throws a degenerate error when
// l1 l3 - l2^2 vanishes, and a nonexistence error naming the negative square
// when a solution square is below -1e-14 (values in [-1e-14, 0) clamp to 0).
Amplitudes solve_amplitudes(const BranchPoint& bp, const CubicCoefficients& ls,
                            double mu, double C);

// The truncated bifurcation polynomials
//   P_j = mu K_j + C beta0 K_j - beta0 (l_j1 |A1|^2 + l_j2 |A2|^2);
// both vanish at the output of solve_amplitudes.
std::pair<double, double> bifurcation_polynomials(const CubicCoefficients& ls,
                                                  const BranchPoint& bp,
                                                  const Amplitudes& amps);

}  // namespace bsw
