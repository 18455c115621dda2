#pragma once

#include <vector>

#include "bsw/spectral.hpp"

namespace bsw {

// Mode-wise action of the linearized operator at beta:
//   eta-equation (sin parity): -q (1 + omega |p|^2) g + i beta p . f
//   v-equation  (cos parity):  q (1 + omega |p|^2) f + i beta g p
// The eta-equation vanishes identically at q = 0 (sin parity) and is stored
// as zero there.
Field apply_L(const Field& u, double beta, const LatticeConfig& cfg);

// Right-hand-side operator G F = (div f, grad g) mode-wise:
//   (i p . f  for q > 0,  i g p).
Field apply_G(const Field& f, const LatticeConfig& cfg);

// Complex solvability residue |p| g + i p . f of one mode. Zero at a
// resonant mode exactly when the forcing is orthogonal to the kernel there.
Complex compatibility_residue(const Field& f, const LatticeConfig& cfg,
                              const ModeIndex& idx);

struct CompatViolation {
    ModeIndex idx;
    Complex residue;
};

// Residues at every resonant index whose magnitude exceeds
// tol * max(1, field_norm(F)); an empty list means F is compatible.
std::vector<CompatViolation> check_compatibility(
    const Field& f, const LatticeConfig& cfg,
    const std::vector<ModeIndex>& resonant, double tol = 1e-12);

// Mode-wise pseudo-inverse T: returns U with apply_L(U, beta) = apply_G(F)
// wherever that is solvable.
//   - origin (0,0,0): 0
//   - q = 0 or resonant: (g / beta, 0, 0)  (exact for compatible F)
//   - otherwise: the closed per-mode solve with denominator Delta(p, q)
// Defined for every F; only compatible forcings make L(TF) = GF hold at the
// resonant modes too.
Field solve_T(const Field& f, double beta, const LatticeConfig& cfg,
              const std::vector<ModeIndex>& resonant);

struct KernelBasis {
    Field zeta0;                     // constant eta field (1, 0, 0)
    std::vector<ModeIndex> indices;  // resonant index of each xi
    std::vector<Field> xis;         // xi = (|p|, -i p1, -i p2) at its index
};

// Single-mode kernel field at idx: eta = |p| cos(q t), v = -i p sin(q t),
// both times e^{i p.x}.
Field xi_field(const LatticeConfig& cfg, const ModeIndex& idx);

// Constant field eta = 1.
Field zeta0_field();

// zeta0 plus one xi per element of the resonance set at beta0.
// Throws when the resonance set is empty.
KernelBasis kernel_basis(double beta0, const LatticeConfig& cfg,
                         double eps_res = 1e-9);

// T F + sum_j (A_j xi_j + conj pair) + C zeta0. The amplitude map carries one
// representative per conjugate pair of resonant indices; the reflected
// partner is added automatically. Throws when F is incompatible, listing the
// violations.
Field general_solution(const Field& f, double beta0, const LatticeConfig& cfg,
                       const std::vector<ModeIndex>& resonant,
                       const std::map<ModeIndex, Complex>& amplitudes,
                       double C);

}  // namespace bsw
