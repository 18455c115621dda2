// Command-line front end: configuration ingestion, one subcommand per
// pipeline stage, figure presets, and deterministic CSV/JSON export.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsw/bifurcation.hpp"
#include "bsw/lattice.hpp"
#include "bsw/linop.hpp"
#include "bsw/presets.hpp"
#include "bsw/spectral.hpp"
#include "bsw/synthesis.hpp"
#include "bsw/verify.hpp"

namespace {

using namespace bsw;

// Problems with arguments, config files, or I/O exit with code 1;
// hypothesis/condition violations from the library exit with code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr double kPi = 3.14159265358979323846;

// Full run description; serialized as flat key = value text.
struct RunConfig {
    double omega = 1.0;
    double k1 = 0.0, k2 = 0.0;
    double tau1 = 0.0, tau2 = 0.0;
    double beta0 = 0.0;
    int q = 1;
    double mu = 0.0;
    double C = 0.0;
    double sigma1 = 0.0, sigma2 = 0.0;
    int order = 2;
    double x1_min = 0.0, x1_max = 2.0 * kPi;
    double x2_min = 0.0, x2_max = 2.0 * kPi;
    int nx1 = 64, nx2 = 64;
    double t = kPi / 20.0;
};

RunConfig from_preset(const FigurePreset& p) {
    RunConfig rc;
    rc.omega = p.cfg.omega;
    rc.k1 = p.cfg.k1;
    rc.k2 = p.cfg.k2;
    rc.tau1 = p.cfg.tau1;
    rc.tau2 = p.cfg.tau2;
    rc.beta0 = p.beta0;
    rc.q = p.q;
    rc.mu = p.mu;
    rc.C = p.C;
    return rc;
}

LatticeConfig lattice_of(const RunConfig& rc) {
    return LatticeConfig{rc.omega, rc.k1, rc.k2, rc.tau1, rc.tau2};
}

std::string num_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- config i/o

std::string serialize_config(const RunConfig& rc) {
    std::ostringstream os;
    os << "# bsw run configuration\n";
    os << "omega = " << num_str(rc.omega) << "\n";
    os << "k1 = " << num_str(rc.k1) << "\n";
    os << "k2 = " << num_str(rc.k2) << "\n";
    os << "tau1 = " << num_str(rc.tau1) << "\n";
    os << "tau2 = " << num_str(rc.tau2) << "\n";
    os << "beta0 = " << num_str(rc.beta0) << "\n";
    os << "q = " << rc.q << "\n";
    os << "mu = " << num_str(rc.mu) << "\n";
    os << "C = " << num_str(rc.C) << "\n";
    os << "sigma1 = " << num_str(rc.sigma1) << "\n";
    os << "sigma2 = " << num_str(rc.sigma2) << "\n";
    os << "order = " << rc.order << "\n";
    os << "x1_min = " << num_str(rc.x1_min) << "\n";
    os << "x1_max = " << num_str(rc.x1_max) << "\n";
    os << "x2_min = " << num_str(rc.x2_min) << "\n";
    os << "x2_max = " << num_str(rc.x2_max) << "\n";
    os << "nx1 = " << rc.nx1 << "\n";
    os << "nx2 = " << rc.nx2 << "\n";
    os << "t = " << num_str(rc.t) << "\n";
    return os.str();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void apply_config_line(RunConfig& rc, const std::string& key, const std::string& val) {
    auto as_double = [&](double& slot) {
        size_t pos = 0;
        slot = std::stod(val, &pos);
        if (trim(val.substr(pos)) != "")
            throw usage_error("config value is not a number : " + key + " = " + val);
    };
    auto as_int = [&](int& slot) {
        size_t pos = 0;
        slot = std::stoi(val, &pos);
        if (trim(val.substr(pos)) != "")
            throw usage_error("config value is not an integer : " + key + " = " + val);
    };
    if (key == "omega") as_double(rc.omega);
    else if (key == "k1") as_double(rc.k1);
    else if (key == "k2") as_double(rc.k2);
    else if (key == "tau1") as_double(rc.tau1);
    else if (key == "tau2") as_double(rc.tau2);
    else if (key == "beta0") as_double(rc.beta0);
    else if (key == "q") as_int(rc.q);
    else if (key == "mu") as_double(rc.mu);
    else if (key == "C") as_double(rc.C);
    else if (key == "sigma1") as_double(rc.sigma1);
    else if (key == "sigma2") as_double(rc.sigma2);
    else if (key == "order") as_int(rc.order);
    else if (key == "x1_min") as_double(rc.x1_min);
    else if (key == "x1_max") as_double(rc.x1_max);
    else if (key == "x2_min") as_double(rc.x2_min);
    else if (key == "x2_max") as_double(rc.x2_max);
    else if (key == "nx1") as_int(rc.nx1);
    else if (key == "nx2") as_int(rc.nx2);
    else if (key == "t") as_double(rc.t);
    else throw usage_error("unknown config key : " + key);
}

void load_config(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("could not open config file : " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw usage_error("config line " + std::to_string(lineno) +
                              " is not key = value : " + stripped);
        try {
            apply_config_line(rc, trim(stripped.substr(0, eq)),
                              trim(stripped.substr(eq + 1)));
        } catch (const std::invalid_argument&) {
            throw usage_error("config line " + std::to_string(lineno) +
                              " has a malformed value : " + stripped);
        }
    }
}

void check_run_config(const RunConfig& rc) {
    if (rc.order != 1 && rc.order != 2)
        throw usage_error("order must be 1 or 2 : " + std::to_string(rc.order));
    if (rc.nx1 < 2 || rc.nx2 < 2)
        throw usage_error("grid counts must be at least 2 : " +
                          std::to_string(rc.nx1) + "," + std::to_string(rc.nx2));
    if (rc.q < 1) throw usage_error("q must be a positive integer : " + std::to_string(rc.q));
}

// -------------------------------------------------------------- json summary

// Ordered key/value accumulator; values arrive already rendered as JSON.
struct Summary {
    std::vector<std::pair<std::string, std::string>> items;
    void add(const std::string& key, const std::string& rendered) {
        items.emplace_back(key, rendered);
    }
    std::string render() const {
        std::string out = "{\n";
        for (size_t i = 0; i < items.size(); ++i) {
            out += "  \"" + items[i].first + "\": " + items[i].second;
            out += i + 1 < items.size() ? ",\n" : "\n";
        }
        out += "}\n";
        return out;
    }
};

std::string json_config(const RunConfig& rc) {
    std::ostringstream os;
    os << "{\n"
       << "    \"omega\": " << num_str(rc.omega) << ",\n"
       << "    \"k1\": " << num_str(rc.k1) << ",\n"
       << "    \"k2\": " << num_str(rc.k2) << ",\n"
       << "    \"tau1\": " << num_str(rc.tau1) << ",\n"
       << "    \"tau2\": " << num_str(rc.tau2) << ",\n"
       << "    \"beta0\": " << num_str(rc.beta0) << ",\n"
       << "    \"q\": " << rc.q << ",\n"
       << "    \"mu\": " << num_str(rc.mu) << ",\n"
       << "    \"C\": " << num_str(rc.C) << ",\n"
       << "    \"sigma\": [" << num_str(rc.sigma1) << ", " << num_str(rc.sigma2) << "],\n"
       << "    \"order\": " << rc.order << ",\n"
       << "    \"grid\": {\"x1_min\": " << num_str(rc.x1_min)
       << ", \"x1_max\": " << num_str(rc.x1_max)
       << ", \"x2_min\": " << num_str(rc.x2_min)
       << ", \"x2_max\": " << num_str(rc.x2_max)
       << ", \"nx1\": " << rc.nx1 << ", \"nx2\": " << rc.nx2
       << ", \"t\": " << num_str(rc.t) << "}\n  }";
    return os.str();
}

std::string json_resonance(const std::vector<ModeIndex>& set) {
    std::string out = "[";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += "[" + std::to_string(set[i].n1) + ", " + std::to_string(set[i].n2) +
               ", " + std::to_string(set[i].q) + "]";
    }
    return out + "]";
}

std::string json_coefficients(const BifurcationCoefficients& co,
                              const CubicCoefficients& ls) {
    std::ostringstream os;
    os << "{\n"
       << "    \"a\": [" << num_str(co.a1) << ", " << num_str(co.a2) << ", "
       << num_str(co.a3) << ", " << num_str(co.a4) << "],\n"
       << "    \"b\": [" << num_str(co.b1) << ", " << num_str(co.b2) << ", "
       << num_str(co.b3) << ", " << num_str(co.b4) << ", " << num_str(co.b5)
       << ", " << num_str(co.b6) << "],\n"
       << "    \"d\": [" << num_str(co.d1) << ", " << num_str(co.d2) << "],\n"
       << "    \"l\": [" << num_str(ls.l1) << ", " << num_str(ls.l2) << ", "
       << num_str(ls.l3) << "],\n"
       << "    \"variant\": \"" << json_escape(ls.variant) << "\"\n  }";
    return os.str();
}

std::string json_amplitudes(const Amplitudes& amps) {
    std::ostringstream os;
    os << "{\"A1_sq\": " << num_str(amps.A1_sq) << ", \"A2_sq\": " << num_str(amps.A2_sq)
       << ", \"A1_abs\": " << num_str(amps.A1()) << ", \"A2_abs\": " << num_str(amps.A2())
       << ", \"mu\": " << num_str(amps.mu) << ", \"C\": " << num_str(amps.C) << "}";
    return os.str();
}

std::string json_residual(const std::vector<ResidualReport>& reports,
                          const OrderFit* fit) {
    std::ostringstream os;
    os << "{\n    \"norms\": [";
    for (size_t i = 0; i < reports.size(); ++i) {
        if (i) os << ", ";
        os << "{\"mu\": " << num_str(reports[i].mu)
           << ", \"eta_norm\": " << num_str(reports[i].eta_norm)
           << ", \"v_norm\": " << num_str(reports[i].v_norm)
           << ", \"total\": " << num_str(reports[i].total()) << "}";
    }
    os << "]";
    if (fit) {
        os << ",\n    \"slope\": " << num_str(fit->slope)
           << ",\n    \"intercept\": " << num_str(fit->intercept)
           << ",\n    \"r_squared\": " << num_str(fit->r_squared);
    }
    os << "\n  }";
    return os.str();
}

std::string json_warnings(const std::vector<std::string>& warnings) {
    std::string out = "[";
    for (size_t i = 0; i < warnings.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + json_escape(warnings[i]) + "\"";
    }
    return out + "]";
}

// ------------------------------------------------------------------- outputs

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("could not open output file : " + path);
    out << content;
    if (!out) throw usage_error("could not write output file : " + path);
}

std::string render_grid_csv(const Field& field, const RunConfig& rc) {
    const LatticeConfig cfg = lattice_of(rc);
    std::ostringstream os;
    os << "x1,x2,eta,v1,v2\n";
    for (int j = 0; j < rc.nx2; ++j) {
        const double x2 = rc.x2_min + (rc.x2_max - rc.x2_min) * j / (rc.nx2 - 1);
        for (int i = 0; i < rc.nx1; ++i) {
            const double x1 = rc.x1_min + (rc.x1_max - rc.x1_min) * i / (rc.nx1 - 1);
            const PointValue pv = evaluate(field, cfg, x1, x2, rc.t);
            os << num_str(x1) << "," << num_str(x2) << "," << num_str(pv.eta)
               << "," << num_str(pv.v1) << "," << num_str(pv.v2) << "\n";
        }
    }
    return os.str();
}

std::filesystem::path prepare_out_dir(const std::string& out) {
    std::filesystem::path dir(out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw usage_error("could not create output directory : " + out);
    return dir;
}

// Signed default mu samples for residual scans: five points, log-spaced over
// [1e-4, 1e-2], sign taken from the configured mu (negative when mu is 0).
std::vector<double> default_mu_samples(double mu_sign_source) {
    const double sign = mu_sign_source > 0.0 ? 1.0 : -1.0;
    std::vector<double> mus;
    for (int i = 0; i < 5; ++i) mus.push_back(sign * std::pow(10.0, -4.0 + 0.5 * i));
    return mus;
}

// ---------------------------------------------------------------- subcommands

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    int order = 0;          // 0 = not given on the command line
    double mu = 0.0;
    bool mu_given = false;
    double C = 0.0;
    bool C_given = false;
    std::string grid_spec;  // "nx1,nx2"
    double t = 0.0;
    bool t_given = false;
    bool literal_fig5 = false;
    int figure = 1;
};

void apply_overrides(RunConfig& rc, const CommonOpts& o) {
    if (!o.config_path.empty()) load_config(rc, o.config_path);
    if (o.order != 0) rc.order = o.order;
    if (o.mu_given) rc.mu = o.mu;
    if (o.C_given) rc.C = o.C;
    if (o.t_given) rc.t = o.t;
    if (!o.grid_spec.empty()) {
        const size_t comma = o.grid_spec.find(',');
        if (comma == std::string::npos)
            throw usage_error("grid option must be nx1,nx2 : " + o.grid_spec);
        try {
            rc.nx1 = std::stoi(o.grid_spec.substr(0, comma));
            rc.nx2 = std::stoi(o.grid_spec.substr(comma + 1));
        } catch (const std::exception&) {
            throw usage_error("grid option must be nx1,nx2 : " + o.grid_spec);
        }
    }
    check_run_config(rc);
}

int emit(const Summary& summary, const std::string& out_dir, bool had_reason) {
    const std::string text = summary.render();
    std::cout << text;
    if (!out_dir.empty())
        write_file((prepare_out_dir(out_dir) / "summary.json").string(), text);
    return had_reason ? 2 : 0;
}

int cmd_resonance(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const LatticeConfig cfg = lattice_of(rc);
        cfg.validate();
        summary.add("resonance_set", json_resonance(enumerate_resonance_set(rc.beta0, cfg)));
        summary.add("operator_bound", num_str(operator_bound(rc.beta0, cfg)));
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir, !reason.empty());
}

int cmd_kernel(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        const KernelBasis kb = kernel_basis(rc.beta0, bp.cfg);
        summary.add("resonance_set", json_resonance(kb.indices));
        summary.add("kernel", "{\"basis_size\": " + std::to_string(kb.xis.size() + 1) +
                                  ", \"certificate\": " + num_str(kernel_certificate(bp)) + "}");
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir, !reason.empty());
}

int cmd_coeffs(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        summary.add("resonance_set",
                    json_resonance(enumerate_resonance_set(rc.beta0, bp.cfg)));
        const BifurcationCoefficients co = second_order_coefficients(bp);
        summary.add("coefficients", json_coefficients(co, cubic_coefficients(bp, co)));
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir, !reason.empty());
}

int cmd_amplitudes(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        summary.add("resonance_set",
                    json_resonance(enumerate_resonance_set(rc.beta0, bp.cfg)));
        const BifurcationCoefficients co = second_order_coefficients(bp);
        const CubicCoefficients ls = cubic_coefficients(bp, co);
        summary.add("coefficients", json_coefficients(co, ls));
        summary.add("amplitudes",
                    json_amplitudes(solve_amplitudes(bp, ls, rc.mu, rc.C)));
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir, !reason.empty());
}

int cmd_synthesize(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        summary.add("resonance_set",
                    json_resonance(enumerate_resonance_set(rc.beta0, bp.cfg)));
        const BifurcationCoefficients co = second_order_coefficients(bp);
        const CubicCoefficients ls = cubic_coefficients(bp, co);
        summary.add("coefficients", json_coefficients(co, ls));
        const Amplitudes amps = solve_amplitudes(bp, ls, rc.mu, rc.C);
        summary.add("amplitudes", json_amplitudes(amps));
        const StandingWaveSolution sol =
            synthesize(bp, amps, {rc.sigma1, rc.sigma2}, rc.order);
        summary.add("residual", json_residual({nonlinear_residual(sol)}, nullptr));
        const std::string dir = o.out_dir.empty() ? "." : o.out_dir;
        write_file((prepare_out_dir(dir) / "grid.csv").string(),
                   render_grid_csv(sol.field, rc));
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir.empty() ? "." : o.out_dir, !reason.empty());
}

int cmd_residual_scan(const CommonOpts& o) {
    RunConfig rc = from_preset(figure_preset(1));
    apply_overrides(rc, o);
    Summary summary;
    summary.add("config", json_config(rc));
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        summary.add("resonance_set",
                    json_resonance(enumerate_resonance_set(rc.beta0, bp.cfg)));
        const std::vector<double> mus = default_mu_samples(rc.mu);
        const OrderFit fit = order_fit(bp, rc.C, rc.order, mus);
        std::vector<ResidualReport> reports;
        const BifurcationCoefficients co = second_order_coefficients(bp);
        const CubicCoefficients ls = cubic_coefficients(bp, co);
        for (double mu : mus) {
            const Amplitudes amps = solve_amplitudes(bp, ls, mu, rc.C);
            reports.push_back(nonlinear_residual(
                synthesize(bp, amps, {rc.sigma1, rc.sigma2}, rc.order)));
        }
        summary.add("residual", json_residual(reports, &fit));
        std::ostringstream csv;
        csv << "mu,eta_norm,v_norm,total\n";
        for (const ResidualReport& r : reports)
            csv << num_str(r.mu) << "," << num_str(r.eta_norm) << ","
                << num_str(r.v_norm) << "," << num_str(r.total()) << "\n";
        const std::string dir = o.out_dir.empty() ? "." : o.out_dir;
        write_file((prepare_out_dir(dir) / "residual_scan.csv").string(), csv.str());
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings({}));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    return emit(summary, o.out_dir.empty() ? "." : o.out_dir, !reason.empty());
}

int cmd_figures(const CommonOpts& o) {
    if (o.figure < 1 || o.figure > 5)
        throw usage_error("figure number must be 1..5 : " + std::to_string(o.figure));
    const FigurePreset preset = figure_preset(o.figure, o.literal_fig5);
    RunConfig rc = from_preset(preset);
    apply_overrides(rc, o);
    const std::string dir =
        o.out_dir.empty() ? "fig" + std::to_string(o.figure) : o.out_dir;

    Summary summary;
    summary.add("config", json_config(rc));
    std::vector<std::string> warnings;
    if (!preset.note.empty()) warnings.push_back(preset.note);
    std::string reason;
    try {
        const BranchPoint bp = validate_branch_point(lattice_of(rc), rc.beta0, rc.q);
        summary.add("resonance_set",
                    json_resonance(enumerate_resonance_set(rc.beta0, bp.cfg)));
        const BifurcationCoefficients co = second_order_coefficients(bp);
        const CubicCoefficients ls = cubic_coefficients(bp, co);
        summary.add("coefficients", json_coefficients(co, ls));
        const Amplitudes amps = solve_amplitudes(bp, ls, rc.mu, rc.C);
        summary.add("amplitudes", json_amplitudes(amps));
        auto check_published = [&](const char* name, double computed, double published) {
            if (std::abs(computed - published) > 1e-3)
                warnings.push_back(std::string("computed |") + name + "| = " +
                                   num_str(computed) +
                                   " deviates from the bundled reference value " +
                                   num_str(published) + " by " +
                                   num_str(std::abs(computed - published)));
        };
        check_published("A1", amps.A1(), preset.published_A1);
        check_published("A2", amps.A2(), preset.published_A2);
        const StandingWaveSolution sol =
            synthesize(bp, amps, {rc.sigma1, rc.sigma2}, rc.order);
        std::vector<ResidualReport> reports = {nonlinear_residual(sol)};
        const OrderFit fit = order_fit(bp, rc.C, rc.order, default_mu_samples(rc.mu));
        summary.add("residual", json_residual(reports, &fit));
        write_file((prepare_out_dir(dir) / "grid.csv").string(),
                   render_grid_csv(sol.field, rc));
    } catch (const std::runtime_error& e) {
        reason = e.what();
    }
    summary.add("warnings", json_warnings(warnings));
    if (!reason.empty()) summary.add("reason", "\"" + json_escape(reason) + "\"");
    write_file((prepare_out_dir(dir) / "config.txt").string(), serialize_config(rc));
    return emit(summary, dir, !reason.empty());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bifurcating doubly periodic standing waves of a 2-D Boussinesq system"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* sub, bool with_fig_flags) {
        sub->add_option("--config", opts.config_path,
                        "key = value config file (defaults to the figure-1 preset)");
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--order", opts.order, "expansion order, 1 or 2")
            ->check(CLI::IsMember({1, 2}));
        sub->add_option("--mu", opts.mu, "bifurcation parameter beta - beta0")
            ->each([&](const std::string&) { opts.mu_given = true; });
        sub->add_option("--C", opts.C, "constant kernel coordinate")
            ->each([&](const std::string&) { opts.C_given = true; });
        sub->add_option("--grid", opts.grid_spec, "grid counts nx1,nx2");
        sub->add_option("--t", opts.t, "evaluation time")
            ->each([&](const std::string&) { opts.t_given = true; });
        if (with_fig_flags)
            sub->add_flag("--literal-fig5", opts.literal_fig5,
                          "use the uncorrected figure-5 caption parameters");
    };

    CLI::App* resonance = app.add_subcommand("resonance", "enumerate the resonance set and operator bound");
    add_common(resonance, false);
    CLI::App* kernel = app.add_subcommand("kernel", "kernel basis and annihilation certificate");
    add_common(kernel, false);
    CLI::App* coeffs = app.add_subcommand("coeffs", "second-order and cubic coefficient tables");
    add_common(coeffs, false);
    CLI::App* amplitudes = app.add_subcommand("amplitudes", "solve the amplitude equations");
    add_common(amplitudes, false);
    CLI::App* synthesize = app.add_subcommand("synthesize", "assemble a solution and export a grid");
    add_common(synthesize, false);
    CLI::App* scan = app.add_subcommand("residual-scan", "residual norms over a mu sweep with fitted slope");
    add_common(scan, false);
    CLI::App* figures = app.add_subcommand("figures", "full pipeline with a bundled figure preset");
    figures->add_option("n", opts.figure, "figure number 1..5")->required();
    add_common(figures, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (resonance->parsed()) return cmd_resonance(opts);
        if (kernel->parsed()) return cmd_kernel(opts);
        if (coeffs->parsed()) return cmd_coeffs(opts);
        if (amplitudes->parsed()) return cmd_amplitudes(opts);
        if (synthesize->parsed()) return cmd_synthesize(opts);
        if (scan->parsed()) return cmd_residual_scan(opts);
        if (figures->parsed()) return cmd_figures(opts);
    } catch (const usage_error& e) {
        std::cerr << "error : " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error : " << e.what() << "\n";
        return 2;
    }
    return 0;
}
