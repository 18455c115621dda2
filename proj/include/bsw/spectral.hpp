#pragma once

#include <complex>
#include <map>

#include "bsw/lattice.hpp"

namespace bsw {

using Complex = std::complex<double>;

// Coefficient triple at one mode. For a wave field the slots are
// (eta, v1, v2) with eta ~ cos(q t) and v ~ sin(q t); for a forcing field
// they are (g, f1, f2) with the same parities. Residual fields reuse the
// layout with swapped parities (eta-equation ~ sin, v-equation ~ cos).
struct Coeff {
    Complex g{};
    Complex f1{};
    Complex f2{};

    Coeff& operator+=(const Coeff& o);
    Coeff operator*(const Complex& s) const;
    double max_abs() const;
};

// Sparse coefficient map with lexicographic (n1, n2, q) canonical ordering.
using Field = std::map<ModeIndex, Coeff>;

// out[idx] += c, dropping nothing (zeros are pruned separately).
void add_to(Field& out, const ModeIndex& idx, const Coeff& c);

Field scaled(const Field& f, const Complex& s);
Field field_sum(const Field& a, const Field& b);

// Drops coefficients with all slots below rel_tol times the largest slot
// magnitude in the field. rel_tol = 0 keeps exact zeros out only.
Field prune(const Field& f, double rel_tol = 1e-15);

// Reality partner: coefficient at (-n1,-n2,q) conjugated. A field is real
// exactly when conj_reflect(f) == f.
Field conj_reflect(const Field& f);

struct PointValue {
    double eta = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
};

// Pointwise sum of the finite series
//   eta(x,t) = sum g e^{i p.x} cos(q t),  v(x,t) = sum f e^{i p.x} sin(q t).
// The input must satisfy the reality invariant; the real parts are returned.
PointValue evaluate(const Field& f, const LatticeConfig& cfg,
                    double x1, double x2, double t);

// Quadratic form B(u, w) = 1/2 (v_u . v_w, eta_u v_w + eta_w v_u), computed
// exactly in coefficient space: spatial indices convolve on the lattice and
// time products expand by the product-to-sum identities, e.g.
// sin(a t) sin(b t) = 1/2 cos((a-b) t) - 1/2 cos((a+b) t).
Field quadratic_B(const Field& u, const Field& w);

// B(u, u).
Field quadratic_B(const Field& u);

// Coefficient pairing sum_modes w_q (g conj(g') + f . conj(f')) with time
// weights w_0 = 1 and w_q = 1/2 for q > 0. The weights fix the pairing so
// that <A1 xi1, xi1> = A1 k1^2 (1 + tau1^2) exactly.
Complex inner_product(const Field& a, const Field& b);

// sqrt(inner_product(f, f)); the weighted coefficient l2 norm.
double field_norm(const Field& f);

}  // namespace bsw
