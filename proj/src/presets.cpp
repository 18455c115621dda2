#include "bsw/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace bsw {

FigurePreset figure_preset(int figure, bool literal_fig5) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const double s5 = std::sqrt(5.0);
    FigurePreset p;
    p.figure = figure;
    p.q = 1;
    p.C = 0.0;
    switch (figure) {
        case 1:
            p.cfg = {1.0, 1.0 / s2, 1.0 / s2, 1.0, 1.0};
            p.beta0 = 2.0;
            p.mu = -0.3;
            p.published_A1 = p.published_A2 = 0.539972;
            break;
        case 2:
            p.cfg = {1.0, 1.0 / s5, 1.0 / s5, 2.0, 2.0};
            p.beta0 = 2.0;
            p.mu = -0.02;
            p.published_A1 = p.published_A2 = 0.397342;
            break;
        case 3:
            p.cfg = {1.0, phi / s2, (phi - 1.0) / s2, 1.0, 1.0};
            p.beta0 = s5;
            p.mu = -0.2;
            p.published_A1 = 0.18089;
            p.published_A2 = 0.784643;
            break;
        case 4:
            p.cfg = {1.0, phi / s3, (phi - 1.0) / s3, s2, s2};
            p.beta0 = s5;
            p.mu = -0.08;
            p.published_A1 = 0.186587;
            p.published_A2 = 0.730987;
            p.note =
                "figure-4 caption text says tau1 = tau2 = 2 but its parameter "
                "tuple says sqrt(2); the tuple satisfies the beta0 = sqrt(5) "
                "resonance and is used here";
            break;
        case 5:
            if (literal_fig5) {
                p.cfg = {1.0, 1.0, 1.0, phi, -1.0 / phi};
                p.note =
                    "literal figure-5 caption values tau1 = phi, tau2 = -1/phi; "
                    "these violate lattice positivity and the four-mode "
                    "resonance hypothesis and cannot be run";
            } else {
                p.cfg = {1.0, 1.0, 1.0, std::sqrt(phi), std::sqrt(phi)};
                p.note =
                    "figure-5 caption tau values fail validation; corrected "
                    "symmetric reading tau1 = tau2 = sqrt((1+sqrt(5))/2) "
                    "restores the four-mode resonance at beta0 = sqrt(5); the "
                    "published amplitudes are soft targets under this reading";
            }
            p.beta0 = s5;
            p.mu = 0.5;
            p.published_A1 = 0.47833;
            p.published_A2 = 0.620853;
            break;
        default:
            throw std::runtime_error("figure preset must be 1..5 : " +
                                     std::to_string(figure));
    }
    return p;
}

}  // namespace bsw
