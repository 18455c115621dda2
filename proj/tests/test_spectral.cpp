#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "bsw/linop.hpp"
#include "bsw/presets.hpp"
#include "bsw/spectral.hpp"
#include "doctest.h"

using namespace bsw;

namespace {

constexpr double kPi = 3.14159265358979323846;

Field with_reflection(const Field& f) { return field_sum(f, conj_reflect(f)); }

double max_coeff_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (const auto& [idx, c] : field_sum(a, scaled(b, -1.0)))
        m = std::max(m, c.max_abs());
    return m;
}

// random reality-symmetric field on small modes, v-free at q = 0
Field random_symmetric_field(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto c = [&] { return Complex(u(rng), u(rng)); };
    Field f;
    f[{0, 0, 0}] = Coeff{Complex(u(rng), 0.0), 0.0, 0.0};
    f[{1, 0, 1}] = Coeff{c(), c(), c()};
    f[{0, 1, 2}] = Coeff{c(), c(), c()};
    f[{1, -1, 1}] = Coeff{c(), c(), c()};
    f[{2, 1, 3}] = Coeff{c(), c(), c()};
    return with_reflection(f);
}

}  // namespace

TEST_CASE("pointwise evaluation of elementary fields") {
    const LatticeConfig cfg = figure_preset(1).cfg;
    SUBCASE("zero field") {
        const PointValue pv = evaluate(Field{}, cfg, 0.3, -0.7, 0.2);
        CHECK(pv.eta == 0.0);
        CHECK(pv.v1 == 0.0);
        CHECK(pv.v2 == 0.0);
    }
    SUBCASE("single conjugate pair gives cos(p.x) cos(t)") {
        Field f;
        f[{1, 0, 1}] = Coeff{0.5, 0.0, 0.0};
        f = with_reflection(f);
        const WaveVector p = wavevector(cfg, 1, 0);
        for (double x1 : {0.0, 0.4, 1.7})
            for (double t : {0.0, 0.3, 2.1}) {
                const PointValue pv = evaluate(f, cfg, x1, 0.25, t);
                CHECK(pv.eta == doctest::Approx(std::cos(p.p1 * x1 + p.p2 * 0.25) *
                                                std::cos(t))
                                    .epsilon(1e-14));
            }
    }
    SUBCASE("kernel field pair at the origin") {
        const Field xi = with_reflection(xi_field(cfg, {1, 0, 1}));
        CHECK(evaluate(xi, cfg, 0.0, 0.0, 0.0).eta == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("evaluation of reality-symmetric fields is real") {
    const LatticeConfig cfg = figure_preset(3).cfg;
    std::mt19937_64 rng(77u);
    const Field f = random_symmetric_field(rng);
    for (int s = 0; s < 20; ++s) {
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        const double x1 = u(rng), x2 = u(rng), t = u(rng);
        // reconstruct the complex sums directly and compare
        Complex eta = 0.0, v1 = 0.0, v2 = 0.0;
        for (const auto& [idx, c] : f) {
            const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
            const Complex ph = std::exp(Complex(0.0, p.p1 * x1 + p.p2 * x2));
            eta += c.g * ph * std::cos(idx.q * t);
            v1 += c.f1 * ph * std::sin(idx.q * t);
            v2 += c.f2 * ph * std::sin(idx.q * t);
        }
        CHECK(std::abs(eta.imag()) < 1e-13);
        CHECK(std::abs(v1.imag()) < 1e-13);
        CHECK(std::abs(v2.imag()) < 1e-13);
        const PointValue pv = evaluate(f, cfg, x1, x2, t);
        CHECK(pv.eta == doctest::Approx(eta.real()).epsilon(1e-13));
        CHECK(pv.v1 == doctest::Approx(v1.real()).epsilon(1e-13));
    }
}

TEST_CASE("quadratic form vanishes on constant surface offsets") {
    Field z;
    z[{0, 0, 0}] = Coeff{1.7, 0.0, 0.0};
    CHECK(quadratic_B(z).empty());
}

TEST_CASE("quadratic form matches the grid-sampled product") {
    const LatticeConfig cfg = figure_preset(1).cfg;
    const Field u = with_reflection(scaled(xi_field(cfg, {1, 0, 1}), 0.7));
    const Field b = quadratic_B(u);
    const int n = 32;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                const double x1 = 2.0 * kPi * i / n, x2 = 2.0 * kPi * j / n;
                const double t = 2.0 * kPi * s / n;
                const PointValue pu = evaluate(u, cfg, x1, x2, t);
                const PointValue pb = evaluate(b, cfg, x1, x2, t);
                worst = std::max(worst,
                                 std::abs(pb.eta - 0.5 * (pu.v1 * pu.v1 + pu.v2 * pu.v2)));
                worst = std::max(worst, std::abs(pb.v1 - pu.eta * pu.v1));
                worst = std::max(worst, std::abs(pb.v2 - pu.eta * pu.v2));
            }
    CHECK(worst < 1e-12);
}

TEST_CASE("quadratic form matches the grid-sampled product on a random field") {
    const LatticeConfig cfg = figure_preset(4).cfg;
    std::mt19937_64 rng(4242u);
    const Field u = random_symmetric_field(rng);
    const Field b = quadratic_B(u);
    const int n = 24;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                const double x1 = 2.0 * kPi * i / n, x2 = 2.0 * kPi * j / n;
                const double t = 2.0 * kPi * s / n;
                const PointValue pu = evaluate(u, cfg, x1, x2, t);
                const PointValue pb = evaluate(b, cfg, x1, x2, t);
                worst = std::max(worst,
                                 std::abs(pb.eta - 0.5 * (pu.v1 * pu.v1 + pu.v2 * pu.v2)));
                worst = std::max(worst, std::abs(pb.v1 - pu.eta * pu.v1));
                worst = std::max(worst, std::abs(pb.v2 - pu.eta * pu.v2));
            }
    CHECK(worst < 1e-12);
}

TEST_CASE("bilinearity identity for the symmetric cross term") {
    std::mt19937_64 rng(99u);
    for (int trial = 0; trial < 5; ++trial) {
        const Field u = random_symmetric_field(rng);
        const Field w = random_symmetric_field(rng);
        const Field lhs = field_sum(
            quadratic_B(field_sum(u, w)),
            scaled(field_sum(quadratic_B(u), quadratic_B(w)), -1.0));
        const Field rhs = scaled(quadratic_B(u, w), 2.0);
        CHECK(max_coeff_diff(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("pairing normalization against the kernel fields") {
    const LatticeConfig cfg = figure_preset(1).cfg;
    const Field xi1 = xi_field(cfg, {1, 0, 1});
    SUBCASE("empty and disjoint pairings vanish") {
        CHECK(inner_product(Field{}, xi1) == Complex{});
        Field far;
        far[{3, 2, 2}] = Coeff{1.0, 2.0, 3.0};
        CHECK(inner_product(far, xi1) == Complex{});
    }
    SUBCASE("kernel self-pairing reproduces K1") {
        const double K1 = wavevector(cfg, 1, 0).norm_sq();
        const Complex A1(0.83, 0.0);
        const Complex ip = inner_product(scaled(xi1, A1), xi1);
        CHECK(std::abs(ip - A1 * K1) < 1e-14);
        // the same identity scaled by mu, paired against the full kernel sum
        const double mu = -0.3;
        Field X = with_reflection(scaled(xi1, A1));
        const Complex ip2 = inner_product(scaled(X, mu), xi1);
        CHECK(std::abs(ip2 - mu * A1 * K1) < 1e-14);
    }
    SUBCASE("reflection conjugation identity") {
        std::mt19937_64 rng(31u);
        const Field f = random_symmetric_field(rng);
        const Complex lhs = inner_product(f, xi1);
        const Complex rhs = std::conj(inner_product(conj_reflect(f), conj_reflect(xi1)));
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("norm weights and Parseval consistency") {
    SUBCASE("elementary norms") {
        CHECK(field_norm(Field{}) == 0.0);
        Field f;
        f[{0, 0, 0}] = Coeff{3.0, 0.0, 0.0};
        CHECK(field_norm(f) == doctest::Approx(3.0).epsilon(1e-15));
    }
    SUBCASE("triangle inequality") {
        std::mt19937_64 rng(123u);
        for (int trial = 0; trial < 10; ++trial) {
            const Field a = random_symmetric_field(rng);
            const Field b = random_symmetric_field(rng);
            CHECK(field_norm(field_sum(a, b)) <=
                  field_norm(a) + field_norm(b) + 1e-12);
        }
    }
    SUBCASE("grid quadrature matches the weighted coefficient norm") {
        const LatticeConfig cfg = figure_preset(2).cfg;
        std::mt19937_64 rng(2025u);
        const Field f = random_symmetric_field(rng);
        // substitute y = (P1.x, P2.x): mode (n1,n2) becomes e^{i(n1 y1 + n2 y2)},
        // so a uniform y-grid integrates the trigonometric sum exactly
        const double det = -(cfg.tau1 + cfg.tau2) * cfg.k1 * cfg.k2;
        const double i11 = -cfg.k2 * cfg.tau2 / det, i12 = -cfg.k1 * cfg.tau1 / det;
        const double i21 = -cfg.k2 / det, i22 = cfg.k1 / det;
        {
            // sanity: the substitution really inverts the generator matrix
            const double y1 = 0.9, y2 = -1.3;
            const double x1 = i11 * y1 + i12 * y2, x2 = i21 * y1 + i22 * y2;
            const WaveVector p1 = wavevector(cfg, 1, 0), p2 = wavevector(cfg, 0, 1);
            REQUIRE(p1.p1 * x1 + p1.p2 * x2 == doctest::Approx(y1).epsilon(1e-12));
            REQUIRE(p2.p1 * x1 + p2.p2 * x2 == doctest::Approx(y2).epsilon(1e-12));
        }
        const int n = 64;
        double acc = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double y1 = 2.0 * kPi * i / n, y2 = 2.0 * kPi * j / n;
                const double x1 = i11 * y1 + i12 * y2, x2 = i21 * y1 + i22 * y2;
                for (int s = 0; s < n; ++s) {
                    const double t = 2.0 * kPi * s / n;
                    const PointValue pv = evaluate(f, cfg, x1, x2, t);
                    acc += pv.eta * pv.eta + pv.v1 * pv.v1 + pv.v2 * pv.v2;
                }
            }
        const double grid_mean = acc / (static_cast<double>(n) * n * n);
        const double norm2 = field_norm(f) * field_norm(f);
        CHECK(grid_mean == doctest::Approx(norm2).epsilon(1e-6));
    }
}

TEST_CASE("pruning drops relatively negligible coefficients") {
    Field f;
    f[{1, 0, 1}] = Coeff{1.0, 0.0, 0.0};
    f[{2, 0, 1}] = Coeff{1e-16, 0.0, 0.0};
    f[{3, 0, 1}] = Coeff{0.0, 1e-10, 0.0};
    const Field p = prune(f);
    CHECK(p.size() == 2);
    CHECK(p.count({2, 0, 1}) == 0);
    CHECK(p.count({3, 0, 1}) == 1);
    CHECK(prune(Field{}).empty());
    Field zeros;
    zeros[{1, 0, 1}] = Coeff{0.0, 0.0, 0.0};
    CHECK(prune(zeros, 0.0).empty());
}

TEST_CASE("conjugate reflection is an involution that fixes symmetric fields") {
    std::mt19937_64 rng(808u);
    const Field f = random_symmetric_field(rng);
    CHECK(max_coeff_diff(conj_reflect(f), f) < 1e-15);
    Field single;
    single[{1, 2, 1}] = Coeff{Complex(0.3, -0.4), Complex(0.0, 1.0), 2.0};
    CHECK(max_coeff_diff(conj_reflect(conj_reflect(single)), single) == 0.0);
}
