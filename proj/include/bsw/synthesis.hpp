#pragma once

#include <array>

#include "bsw/bifurcation.hpp"

namespace bsw {

// Kernel combination X = A1 xi1 + conj + A2 xi2 + conj + C zeta0, with
// xi1 at (1,0,q) and xi2 at (0,1,q).
Field assemble_X(const BranchPoint& bp, Complex A1, Complex A2, double C);

// First correction V1 = mu T X. Computed generically through solve_T and
// checked against the closed display (eta = mu |p| A / beta0 at each
// fundamental mode) to 1e-13; throws on mismatch.
Field correction_V1(const BranchPoint& bp, const Field& X, double mu);

// Second correction V2 = beta0 T B(X, X). Computed generically and checked
// against the closed coefficient tables (the d/a/b scalars) to 1e-9
// relative; throws on mismatch. X must be a kernel combination.
Field correction_V2(const BranchPoint& bp, const Field& X);

// The closed-form table for V2 given explicit amplitudes: the q = 0 part
// (quadratic eta means) plus the 2q part assembled from a1..a4, b1..b6.
Field second_order_closed(const BranchPoint& bp, const BifurcationCoefficients& co,
                          Complex A1, Complex A2);

// Per-mode phase shift c_p -> c_p e^{-i p.sigma}, so that
// evaluate(shifted, x, t) = evaluate(original, x - sigma, t).
Field apply_shift(const Field& f, const LatticeConfig& cfg,
                  const std::array<double, 2>& sigma);

struct StandingWaveSolution {
    BranchPoint bp;
    double mu = 0.0;
    double C = 0.0;
    Complex A1{};
    Complex A2{};
    std::array<double, 2> sigma{0.0, 0.0};
    int order = 2;
    Field field;
};

// Builds the standing-wave field: order 1 gives X, order 2 gives
// X - V1 - V2, then applies the sigma phase shift.
StandingWaveSolution synthesize(const BranchPoint& bp, const Amplitudes& amps,
                                const std::array<double, 2>& sigma, int order);

// The explicit second-order free-surface expansion for C = 0: fundamental
// modes of X plus the eight quadratic cosine terms, as an eta-only field.
// Excludes V1 (order mu^{3/2} there) by construction.
Field corollary_surface(const BranchPoint& bp, const Amplitudes& amps);

}  // namespace bsw
