#pragma once

#include <vector>

#include "bsw/bifurcation.hpp"
#include "bsw/synthesis.hpp"

namespace bsw {

// Norms of the equation residual split by component.
struct ResidualReport {
    double mu = 0.0;
    double eta_norm = 0.0;
    double v_norm = 0.0;
    double total() const;
};

// Residual field L_beta U + beta G B(U, U) of a candidate solution U.
Field residual_field(const Field& u, double beta, const LatticeConfig& cfg);

// Evaluates the residual of a synthesized solution at beta = beta0 + mu.
ResidualReport nonlinear_residual(const StandingWaveSolution& sol);

// Log-log least-squares fit of residual size against |mu|.
struct OrderFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> mu_samples;
    std::vector<double> residuals;
};

// Synthesizes the branch at each mu in mu_list and fits log(residual) vs log|mu|.
// Requires at least five samples spanning two decades with |mu| <= 0.01.
OrderFit order_fit(const BranchPoint& bp, double C, int order,
                   const std::vector<double>& mu_list);

// Largest norm of L applied to a kernel basis field; beta_eval defaults to beta0.
double kernel_certificate(const BranchPoint& bp);
double kernel_certificate(const BranchPoint& bp, double beta_eval);

}  // namespace bsw
