#include "bsw/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace bsw {

Coeff& Coeff::operator+=(const Coeff& o) {
    g += o.g;
    f1 += o.f1;
    f2 += o.f2;
    return *this;
}

Coeff Coeff::operator*(const Complex& s) const { return {g * s, f1 * s, f2 * s}; }

double Coeff::max_abs() const {
    return std::max({std::abs(g), std::abs(f1), std::abs(f2)});
}

void add_to(Field& out, const ModeIndex& idx, const Coeff& c) { out[idx] += c; }

Field scaled(const Field& f, const Complex& s) {
    Field out;
    for (const auto& [idx, c] : f) out.emplace(idx, c * s);
    return out;
}

Field field_sum(const Field& a, const Field& b) {
    Field out = a;
    for (const auto& [idx, c] : b) out[idx] += c;
    return out;
}

Field prune(const Field& f, double rel_tol) {
    double mx = 0.0;
    for (const auto& [idx, c] : f) mx = std::max(mx, c.max_abs());
    Field out;
    if (mx == 0.0) return out;
    for (const auto& [idx, c] : f)
        if (c.max_abs() > rel_tol * mx) out.emplace(idx, c);
    return out;
}

Field conj_reflect(const Field& f) {
    Field out;
    for (const auto& [idx, c] : f)
        out[{-idx.n1, -idx.n2, idx.q}] +=
            Coeff{std::conj(c.g), std::conj(c.f1), std::conj(c.f2)};
    return out;
}

PointValue evaluate(const Field& f, const LatticeConfig& cfg,
                    double x1, double x2, double t) {
    Complex eta = 0.0, v1 = 0.0, v2 = 0.0;
    for (const auto& [idx, c] : f) {
        const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
        const Complex phase = std::exp(Complex(0.0, p.p1 * x1 + p.p2 * x2));
        eta += c.g * phase * std::cos(idx.q * t);
        const Complex s = phase * std::sin(idx.q * t);
        v1 += c.f1 * s;
        v2 += c.f2 * s;
    }
    return {eta.real(), v1.real(), v2.real()};
}

Field quadratic_B(const Field& u, const Field& w) {
    Field out;
    for (const auto& [ia, ca] : u) {
        for (const auto& [ib, cb] : w) {
            const ModeIndex m{ia.n1 + ib.n1, ia.n2 + ib.n2, 0};
            const int qs = ia.q + ib.q;
            const int qd = ia.q - ib.q;
            // g-slot: 1/2 v_u . v_w ; sin(qa t) sin(qb t) splits into
            // +1/2 cos(|qa-qb| t) - 1/2 cos((qa+qb) t)
            const Complex dot = ca.f1 * cb.f1 + ca.f2 * cb.f2;
            if (dot != Complex{}) {
                const Complex base = 0.25 * dot;
                out[{m.n1, m.n2, std::abs(qd)}] += Coeff{base, 0.0, 0.0};
                out[{m.n1, m.n2, qs}] += Coeff{-base, 0.0, 0.0};
            }
            // f-slot: 1/2 (eta_u v_w + eta_w v_u); cos(qa t) sin(qb t) splits
            // into +1/2 sin((qa+qb) t) - 1/2 sin((qa-qb) t)
            const struct {
                Complex g, h1, h2;
                int qa, qb;
            } terms[2] = {{ca.g, cb.f1, cb.f2, ia.q, ib.q},
                          {cb.g, ca.f1, ca.f2, ib.q, ia.q}};
            for (const auto& tm : terms) {
                if (tm.g == Complex{} || (tm.h1 == Complex{} && tm.h2 == Complex{}))
                    continue;
                const Complex base = 0.25 * tm.g;
                if (qs > 0)
                    out[{m.n1, m.n2, qs}] += Coeff{0.0, base * tm.h1, base * tm.h2};
                const int dd = tm.qa - tm.qb;
                if (dd > 0)
                    out[{m.n1, m.n2, dd}] += Coeff{0.0, -base * tm.h1, -base * tm.h2};
                else if (dd < 0)
                    out[{m.n1, m.n2, -dd}] += Coeff{0.0, base * tm.h1, base * tm.h2};
            }
        }
    }
    return prune(out, 0.0);
}

Field quadratic_B(const Field& u) { return quadratic_B(u, u); }

Complex inner_product(const Field& a, const Field& b) {
    Complex s = 0.0;
    for (const auto& [idx, ca] : a) {
        auto it = b.find(idx);
        if (it == b.end()) continue;
        const Coeff& cb = it->second;
        const double wq = idx.q == 0 ? 1.0 : 0.5;
        s += wq * (ca.g * std::conj(cb.g) + ca.f1 * std::conj(cb.f1) +
                   ca.f2 * std::conj(cb.f2));
    }
    return s;
}

double field_norm(const Field& f) {
    double s = 0.0;
    for (const auto& [idx, c] : f) {
        const double wq = idx.q == 0 ? 1.0 : 0.5;
        s += wq * (std::norm(c.g) + std::norm(c.f1) + std::norm(c.f2));
    }
    return std::sqrt(s);
}

}  // namespace bsw
