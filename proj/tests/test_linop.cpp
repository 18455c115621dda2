#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "bsw/linop.hpp"
#include "bsw/presets.hpp"
#include "doctest.h"

using namespace bsw;

namespace {

double field_diff(const Field& a, const Field& b) {
    return field_norm(field_sum(a, scaled(b, -1.0)));
}

// forcing with a random draw at each listed mode; resonant modes get their
// g adjusted so the solvability residue vanishes
Field random_compatible_forcing(std::mt19937_64& rng, const LatticeConfig& cfg,
                                const std::vector<ModeIndex>& modes,
                                const std::vector<ModeIndex>& resonant) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto c = [&] { return Complex(u(rng), u(rng)); };
    Field f;
    for (const ModeIndex& idx : modes) {
        Coeff co{c(), c(), c()};
        if (idx.q == 0) {
            co.f1 = co.f2 = 0.0;  // v-parity components vanish at q = 0
        }
        const bool res =
            std::find(resonant.begin(), resonant.end(), idx) != resonant.end();
        if (res) {
            const WaveVector p = wavevector(cfg, idx.n1, idx.n2);
            co.g = -Complex(0.0, 1.0) * (p.p1 * co.f1 + p.p2 * co.f2) / p.norm();
        }
        f[idx] += co;
    }
    return f;
}

}  // namespace

TEST_CASE("mode-wise solve at the worked example") {
    // wavevector (1,1) realized as index (1,0) on the unit lattice
    const LatticeConfig cfg{1.0, 1.0, 1.0, 1.0, 1.0};
    const double beta = 2.0;
    Field f;
    f[{1, 0, 1}] = Coeff{1.0, 0.0, 0.0};
    const Field u = solve_T(f, beta, cfg, {});
    REQUIRE(u.count({1, 0, 1}) == 1);
    const Coeff& c = u.at({1, 0, 1});
    CHECK(std::abs(c.g - Complex(-4.0, 0.0)) < 1e-14);
    CHECK(std::abs(c.f1 - Complex(0.0, 3.0)) < 1e-14);
    CHECK(std::abs(c.f2 - Complex(0.0, 3.0)) < 1e-14);
    // applying L recovers exactly the G-image of the forcing
    const Field lu = apply_L(u, beta, cfg);
    REQUIRE(lu.count({1, 0, 1}) == 1);
    const Coeff& r = lu.at({1, 0, 1});
    CHECK(std::abs(r.g) < 1e-14);
    CHECK(std::abs(r.f1 - Complex(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(r.f2 - Complex(0.0, 1.0)) < 1e-14);
}

TEST_CASE("resonant and q = 0 modes take the g/beta rule") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    Field f;
    f[{1, 0, 1}] = Coeff{5.0, 0.0, 0.0};
    f[{1, 1, 0}] = Coeff{2.0, 0.0, 0.0};
    f[{0, 0, 0}] = Coeff{9.0, 0.0, 0.0};  // origin maps to zero
    const Field u = solve_T(f, pr.beta0, pr.cfg, resonant);
    CHECK(u.count({0, 0, 0}) == 0);
    CHECK(std::abs(u.at({1, 0, 1}).g - Complex(2.5, 0.0)) < 1e-15);
    CHECK(std::abs(u.at({1, 0, 1}).f1) == 0.0);
    CHECK(std::abs(u.at({1, 1, 0}).g - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("mode-wise solve agrees with a dense 3x3 solve") {
    std::mt19937_64 rng(1337u);
    std::uniform_real_distribution<double> uk(0.4, 1.4), ut(0.4, 2.2), ub(1.2, 3.8),
        uc(-1.0, 1.0);
    std::uniform_int_distribution<int> un(-3, 3), uq(1, 4);
    int done = 0;
    while (done < 50) {
        const LatticeConfig cfg{1.0, uk(rng), uk(rng), ut(rng), ut(rng)};
        const double beta = ub(rng);
        const int n1 = un(rng), n2 = un(rng), q = uq(rng);
        if (n1 == 0 && n2 == 0) continue;
        const WaveVector p = wavevector(cfg, n1, n2);
        if (std::abs(dispersion_delta(p, q, beta, cfg.omega)) < 1e-3) continue;
        const Coeff force{Complex(uc(rng), uc(rng)), Complex(uc(rng), uc(rng)),
                          Complex(uc(rng), uc(rng))};
        Field f;
        f[{n1, n2, q}] = force;
        const Field u = solve_T(f, beta, cfg, {});
        // dense oracle: solve the per-mode linear system with elimination
        const double m = q * (1.0 + cfg.omega * p.norm_sq());
        const Complex i(0.0, 1.0);
        Complex A[3][4] = {
            {-m, i * beta * p.p1, i * beta * p.p2,
             i * (p.p1 * force.f1 + p.p2 * force.f2)},
            {i * beta * p.p1, m, 0.0, i * force.g * p.p1},
            {i * beta * p.p2, 0.0, m, i * force.g * p.p2}};
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r = col + 1; r < 3; ++r)
                if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
            for (int k = 0; k < 4; ++k) std::swap(A[col][k], A[piv][k]);
            for (int r = 0; r < 3; ++r) {
                if (r == col) continue;
                const Complex factor = A[r][col] / A[col][col];
                for (int k = col; k < 4; ++k) A[r][k] -= factor * A[col][k];
            }
        }
        const Complex eta = A[0][3] / A[0][0];
        const Complex v1 = A[1][3] / A[1][1];
        const Complex v2 = A[2][3] / A[2][2];
        const Coeff& got = u.at({n1, n2, q});
        const double scale = std::max({1.0, std::abs(eta), std::abs(v1), std::abs(v2)});
        CHECK(std::abs(got.g - eta) < 1e-10 * scale);
        CHECK(std::abs(got.f1 - v1) < 1e-10 * scale);
        CHECK(std::abs(got.f2 - v2) < 1e-10 * scale);
        ++done;
    }
}

TEST_CASE("right-inverse property on random compatible forcings") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    std::mt19937_64 rng(271828u);
    std::uniform_int_distribution<int> un(-6, 6), uq(0, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ModeIndex> modes = resonant;  // always include the kernel modes
        for (int m = 0; m < 30; ++m) {
            const int n1 = un(rng), n2 = un(rng), q = uq(rng);
            if (n1 == 0 && n2 == 0 && q == 0) continue;
            modes.push_back({n1, n2, q});
        }
        const Field f = random_compatible_forcing(rng, pr.cfg, modes, resonant);
        const Field u = solve_T(f, pr.beta0, pr.cfg, resonant);
        const Field lhs = apply_L(u, pr.beta0, pr.cfg);
        const Field rhs = apply_G(f, pr.cfg);
        CHECK(field_diff(lhs, rhs) < 1e-11 * field_norm(f));
    }
}

TEST_CASE("incompatible forcing leaves exactly the negative residue") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    const WaveVector p = wavevector(pr.cfg, 1, 0);
    Field f;  // kernel-aligned forcing: g = |p|, f = -i p
    f[{1, 0, 1}] = Coeff{p.norm(), Complex(0.0, -p.p1), Complex(0.0, -p.p2)};
    const Complex residue = compatibility_residue(f, pr.cfg, {1, 0, 1});
    CHECK(std::abs(residue - 2.0 * p.norm_sq()) < 1e-14);
    const Field u = solve_T(f, pr.beta0, pr.cfg, resonant);
    const Field gap =
        field_sum(apply_L(u, pr.beta0, pr.cfg), scaled(apply_G(f, pr.cfg), -1.0));
    REQUIRE(gap.count({1, 0, 1}) == 1);
    CHECK(std::abs(gap.at({1, 0, 1}).g - (-residue)) < 1e-14);
    CHECK(std::abs(gap.at({1, 0, 1}).f1) < 1e-14);
    CHECK(std::abs(gap.at({1, 0, 1}).f2) < 1e-14);
}

TEST_CASE("kernel fields are annihilated at the critical parameter") {
    for (int fig : {1, 3}) {
        const FigurePreset pr = figure_preset(fig);
        const KernelBasis kb = kernel_basis(pr.beta0, pr.cfg);
        CHECK(kb.xis.size() == 4);
        CHECK(field_norm(apply_L(kb.zeta0, pr.beta0, pr.cfg)) < 1e-13);
        for (const Field& xi : kb.xis)
            CHECK(field_norm(apply_L(xi, pr.beta0, pr.cfg)) < 1e-13);
    }
}

TEST_CASE("kernel basis fields carry the printed component signs") {
    const FigurePreset pr = figure_preset(2);
    const Field xi1 = xi_field(pr.cfg, {1, 0, 1});
    const WaveVector p1 = wavevector(pr.cfg, 1, 0);
    const Coeff& c1 = xi1.at({1, 0, 1});
    CHECK(c1.g == Complex(p1.norm(), 0.0));
    CHECK(c1.f1 == Complex(0.0, -p1.p1));
    CHECK(c1.f2 == Complex(0.0, -p1.p2));
    // second family: p = k2 (1, -tau2), so the v2 component is +i tau2 k2
    const Field xi2 = xi_field(pr.cfg, {0, 1, 1});
    const Coeff& c2 = xi2.at({0, 1, 1});
    CHECK(c2.f2.imag() == doctest::Approx(pr.cfg.tau2 * pr.cfg.k2).epsilon(1e-15));
    CHECK(c2.f1.imag() == doctest::Approx(-pr.cfg.k2).epsilon(1e-15));
    const Field z = zeta0_field();
    CHECK(z.at({0, 0, 0}).g == Complex(1.0, 0.0));
    CHECK_THROWS_WITH_AS(kernel_basis(1.5, pr.cfg),
                         doctest::Contains("nonempty resonance set"),
                         std::runtime_error);
}

TEST_CASE("general solution attaches kernel amplitudes and the constant") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    std::mt19937_64 rng(55u);
    const Field f = random_compatible_forcing(
        rng, pr.cfg, {resonant[0], resonant[3], ModeIndex{1, 1, 2}}, resonant);
    const Complex a(0.3, 0.1);
    const double C = 0.7;
    const Field u = general_solution(f, pr.beta0, pr.cfg, resonant,
                                     {{ModeIndex{1, 0, 1}, a}}, C);
    const Field t = solve_T(f, pr.beta0, pr.cfg, resonant);
    const WaveVector p = wavevector(pr.cfg, 1, 0);
    auto at = [](const Field& fld, const ModeIndex& i) {
        auto it = fld.find(i);
        return it == fld.end() ? Coeff{} : it->second;
    };
    CHECK(std::abs(u.at({0, 0, 0}).g - Complex(C, 0.0)) < 1e-15);
    CHECK(std::abs(at(u, {1, 0, 1}).g - (at(t, {1, 0, 1}).g + a * p.norm())) < 1e-14);
    CHECK(std::abs(at(u, {-1, 0, 1}).g -
                   (at(t, {-1, 0, 1}).g + std::conj(a * p.norm()))) < 1e-14);
    CHECK(std::abs(at(u, {1, 0, 1}).f1 -
                   (at(t, {1, 0, 1}).f1 + a * Complex(0.0, -p.p1))) < 1e-14);

    SUBCASE("incompatible forcing is rejected with the offending mode") {
        Field bad = f;
        bad[{0, 1, 1}] += Coeff{1.0, 0.0, 0.0};  // breaks the residue at (0,1,1)
        CHECK_THROWS_WITH_AS(
            general_solution(bad, pr.beta0, pr.cfg, resonant, {}, 0.0),
            doctest::Contains("violates the compatibility condition"),
            std::runtime_error);
    }
    SUBCASE("amplitudes must sit on resonant indices") {
        CHECK_THROWS_WITH_AS(
            general_solution(f, pr.beta0, pr.cfg, resonant,
                             {{ModeIndex{2, 0, 1}, Complex(1.0, 0.0)}}, 0.0),
            doctest::Contains("nonresonant index"), std::runtime_error);
    }
}

TEST_CASE("compatibility check flags only genuine violations") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    std::mt19937_64 rng(808u);
    const Field good = random_compatible_forcing(rng, pr.cfg, resonant, resonant);
    CHECK(check_compatibility(good, pr.cfg, resonant).empty());
    Field bad = good;
    bad[{1, 0, 1}] += Coeff{0.5, 0.0, 0.0};
    const auto v = check_compatibility(bad, pr.cfg, resonant);
    REQUIRE(v.size() == 1);
    CHECK(v[0].idx == ModeIndex{1, 0, 1});
    CHECK(std::abs(v[0].residue - Complex(0.5, 0.0)) < 1e-14);
}

TEST_CASE("the solve commutes with conjugate reflection") {
    const FigurePreset pr = figure_preset(3);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    std::mt19937_64 rng(616u);
    std::vector<ModeIndex> modes = resonant;
    modes.push_back({1, 1, 2});
    modes.push_back({-1, -1, 2});
    modes.push_back({2, -1, 0});
    const Field f = random_compatible_forcing(rng, pr.cfg, modes, resonant);
    const Field lhs = solve_T(conj_reflect(f), pr.beta0, pr.cfg, resonant);
    const Field rhs = conj_reflect(solve_T(f, pr.beta0, pr.cfg, resonant));
    CHECK(field_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("solve output obeys the operator bound") {
    const FigurePreset pr = figure_preset(1);
    const auto resonant = enumerate_resonance_set(pr.beta0, pr.cfg);
    const double M = operator_bound(pr.beta0, pr.cfg);
    std::mt19937_64 rng(31415u);
    std::uniform_int_distribution<int> un(-8, 8), uq(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ModeIndex> modes = resonant;
        for (int m = 0; m < 40; ++m) {
            const int n1 = un(rng), n2 = un(rng), q = uq(rng);
            if (n1 == 0 && n2 == 0 && q == 0) continue;
            modes.push_back({n1, n2, q});
        }
        const Field f = random_compatible_forcing(rng, pr.cfg, modes, resonant);
        const Field u = solve_T(f, pr.beta0, pr.cfg, resonant);
        CHECK(field_norm(u) <= (4.0 * M + 1.0 / pr.beta0) * field_norm(f));
    }
}
