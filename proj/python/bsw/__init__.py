"""Bifurcating doubly periodic standing waves of a 2-D Boussinesq system."""

from ._core import (
    Amplitudes,
    BifurcationCoefficients,
    BranchPoint,
    CubicCoefficients,
    FigurePreset,
    LatticeConfig,
    ModeIndex,
    OrderFit,
    ResidualReport,
    StandingWaveSolution,
    corollary_surface,
    cubic_coefficients,
    enumerate_resonance_set,
    evaluate_field,
    figure_preset,
    kernel_certificate,
    nonlinear_residual,
    operator_bound,
    order_fit,
    second_order_coefficients,
    solve_amplitudes,
    synthesize,
    validate_branch_point,
)

__all__ = [
    "Amplitudes",
    "BifurcationCoefficients",
    "BranchPoint",
    "CubicCoefficients",
    "FigurePreset",
    "LatticeConfig",
    "ModeIndex",
    "OrderFit",
    "ResidualReport",
    "StandingWaveSolution",
    "corollary_surface",
    "cubic_coefficients",
    "enumerate_resonance_set",
    "evaluate_field",
    "figure_preset",
    "kernel_certificate",
    "nonlinear_residual",
    "operator_bound",
    "order_fit",
    "second_order_coefficients",
    "solve_amplitudes",
    "synthesize",
    "validate_branch_point",
]
