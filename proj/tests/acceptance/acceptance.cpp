// Copyright 2026 The nuqet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Release acceptance suite. Prints one PASS/FAIL line per criterion and
 * exits non-zero if any selected criterion fails.
 *
 *   nuqet_acceptance [--only N] [--config presets.cfg]
 */
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nuqet/app/commands.hpp"
#include "nuqet/entanglement.hpp"
#include "nuqet/neutrino.hpp"
#include "nuqet/qet.hpp"
#include "oracles.hpp"

namespace {

using namespace nuqet;
namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<Verdict()> check;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

/// Tracks the worst deviation seen against one tolerance.
struct Worst {
    double tolerance;
    double value = 0.0;
    std::string where;

    void see(double error, const std::string &at = {}) {
        if (!(error <= value)) { // also captures NaN
            value = error;
            where = at;
        }
    }
    [[nodiscard]] bool ok() const { return value <= tolerance; }
    [[nodiscard]] std::string describe(const std::string &label) const {
        std::string s = label + " " + sci(value) + " (tol " + sci(tolerance) + ")";
        if (!ok() && !where.empty()) {
            s += " at " + where;
        }
        return s;
    }
};

Verdict combine(std::initializer_list<std::pair<const Worst *, std::string>> parts) {
    Verdict v;
    for (const auto &[worst, label] : parts) {
        v.pass = v.pass && worst->ok();
        if (!v.detail.empty()) {
            v.detail += "; ";
        }
        v.detail += worst->describe(label);
    }
    return v;
}

std::string at(double theta, double tau, double lambda = 0.0) {
    return "theta=" + sci(theta) + " tau=" + sci(tau) + " lambda=" + sci(lambda);
}

std::vector<double> theta_grid() { return {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5}; }

std::vector<double> phi_grid() {
    std::vector<double> grid;
    for (int k = 0; 0.1 * k <= 4.0 * kPi; ++k) {
        grid.push_back(0.1 * k);
    }
    return grid;
}

std::vector<double> tau_grid_20() {
    std::vector<double> grid;
    for (int k = 0; k <= 400; ++k) {
        grid.push_back(0.05 * k);
    }
    return grid;
}

constexpr double kDampingRatios[] = {0.1, 1.0, 10.0};

double frobenius(const Matrix &a, const oracle::M2 &b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            sum += std::norm(a(i, j) - b[2 * i + j]);
        }
    }
    return std::sqrt(sum);
}

// 1
Verdict qfi_plane_wave() {
    Worst w{1e-9};
    for (double theta : theta_grid()) {
        for (double phi : phi_grid()) {
            w.see(std::abs(qfi(plane_wave_state(theta, phi), plane_wave_derivative(theta, phi)) -
                           4.0),
                  at(theta, phi));
        }
    }
    return combine({{&w, "max |H - 4|"}});
}

// 2
Verdict qfi_decoherence() {
    Worst w{1e-9};
    for (double theta : theta_grid()) {
        for (double tau : tau_grid_20()) {
            for (double ratio : kDampingRatios) {
                const double h = qfi(decoherence_state(theta, 1.0, ratio, tau),
                                     decoherence_derivative(theta, 1.0, ratio, tau));
                w.see(std::abs(h - 4.0), at(theta, tau, ratio));
            }
        }
    }
    return combine({{&w, "max |H - 4|"}});
}

// 3
Verdict sld_plane_wave() {
    Worst entries{1e-9};
    Worst spectrum{1e-9};
    for (double theta : theta_grid()) {
        for (double phi : phi_grid()) {
            const Matrix sld = sld_spectral(plane_wave_state(theta, phi),
                                            plane_wave_derivative(theta, phi));
            entries.see(oracle::max_abs_diff(sld, oracle::sld_plane_wave(theta, phi)),
                        at(theta, phi));
            const auto eig = hermitian_eigen(sld);
            spectrum.see(std::max(std::abs(eig.values[0] + 2.0), std::abs(eig.values[1] - 2.0)),
                         at(theta, phi));
        }
    }
    return combine({{&entries, "max entry error"}, {&spectrum, "max eigenvalue error"}});
}

// 4
Verdict sld_decoherence() {
    Worst entries{1e-8};
    Worst variation{1e-8};
    for (double theta : theta_grid()) {
        for (double tau : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            std::vector<Matrix> slds;
            for (double lt : {0.1, 1.0, 10.0}) {
                const double lambda = lt / tau;
                const Matrix sld = sld_spectral(decoherence_state(theta, 1.0, lambda, tau),
                                                decoherence_derivative(theta, 1.0, lambda, tau));
                entries.see(oracle::max_abs_diff(sld, oracle::sld_decoherence(theta)),
                            at(theta, tau, lambda));
                slds.push_back(sld);
            }
            double spread = 0.0;
            for (const auto &a : slds) {
                for (const auto &b : slds) {
                    spread = std::max(spread, oracle::max_abs_diff(a, b));
                }
            }
            variation.see(spread, at(theta, tau));
        }
    }
    return combine({{&entries, "max entry error"}, {&variation, "max variation over lambda t"}});
}

// 5
Verdict flavor_fi_oracle() {
    Worst plane{1e-9};
    Worst damped{1e-9};
    Worst limit{1e-6};
    for (double theta : theta_grid()) {
        const Povm flavor = flavor_povm(theta);
        for (double phi : phi_grid()) {
            const DensityMatrix rho = plane_wave_state(theta, phi);
            const Matrix sld = sld_spectral(rho, plane_wave_derivative(theta, phi));
            plane.see(std::abs(fisher_information(rho, sld, flavor) -
                               oracle::fi_flavor_plane_wave(theta, phi)),
                      at(theta, phi));
        }
        for (double tau : tau_grid_20()) {
            for (double ratio : kDampingRatios) {
                const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
                const Matrix sld = sld_spectral(rho, decoherence_derivative(theta, 1.0, ratio, tau));
                damped.see(std::abs(fisher_information(rho, sld, flavor) -
                                    oracle::fi_flavor_decoherence(theta, 1.0, ratio, tau)),
                           at(theta, tau, ratio));
            }
            const double tiny = 1e-8;
            const DensityMatrix rho = decoherence_state(theta, 1.0, tiny, tau);
            const Matrix sld = sld_spectral(rho, decoherence_derivative(theta, 1.0, tiny, tau));
            limit.see(std::abs(fisher_information(rho, sld, flavor) -
                               oracle::fi_flavor_plane_wave(theta, tau)),
                      at(theta, tau, tiny));
        }
    }
    return combine({{&plane, "plane wave"}, {&damped, "damped"}, {&limit, "lambda=1e-8 limit"}});
}

// 6
Verdict residual() {
    Worst closed{1e-6};
    Worst numeric{1e-6};
    for (double theta : theta_grid()) {
        for (double tau : {1.0, 5.0, 25.0, 50.0}) {
            const double lambda = 50.0 / tau;
            const double target = oracle::residual_fi(theta);
            closed.see(std::abs(flavor_fi_decoherence_closed(theta, 1.0, lambda, tau) -
                                residual_fi(theta)),
                       at(theta, tau, lambda));
            const DensityMatrix rho = decoherence_state(theta, 1.0, lambda, tau);
            const Matrix sld = sld_spectral(rho, decoherence_derivative(theta, 1.0, lambda, tau));
            numeric.see(std::abs(fisher_information(rho, sld, flavor_povm(theta)) - target),
                        at(theta, tau, lambda));
        }
    }
    return combine({{&closed, "closed forms"}, {&numeric, "numerical route"}});
}

// 7
Verdict optimality() {
    Worst optimal{1e-8};
    Worst mass{1e-8};
    for (double theta : theta_grid()) {
        for (double phi : phi_grid()) {
            const DensityMatrix rho = plane_wave_state(theta, phi);
            const Matrix sld = sld_spectral(rho, plane_wave_derivative(theta, phi));
            optimal.see(
                std::abs(fisher_information(rho, sld, optimal_povm_plane_wave(theta, phi)) - 4.0),
                at(theta, phi));
        }
        for (double tau : tau_grid_20()) {
            if (tau == 0.0) {
                continue; // lambda t > 0 only
            }
            for (double ratio : kDampingRatios) {
                const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
                const Matrix sld = sld_spectral(rho, decoherence_derivative(theta, 1.0, ratio, tau));
                mass.see(std::abs(fisher_information(rho, sld, mass_povm()) - 4.0),
                         at(theta, tau, ratio));
            }
        }
    }
    return combine({{&optimal, "optimal projectors"}, {&mass, "mass measurement"}});
}

// 8
Verdict dominance() {
    Worst excess{1e-8};
    std::mt19937_64 rng(20170301);
    std::size_t states = 0;
    for (double ratio : {0.0, 1.0}) {
        for (double theta : {0.2, 0.5, 0.9, 1.3}) {
            for (double tau : {0.7, 2.9, 5.3, 8.1, 11.7}) {
                const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
                const Matrix drho = decoherence_derivative(theta, 1.0, ratio, tau);
                const Matrix sld = sld_spectral(rho, drho);
                const double h = qfi(rho, drho);
                for (int trial = 0; trial < 100; ++trial) {
                    const double f = fisher_information(rho, sld, random_projective_povm(2, rng));
                    excess.see(std::max(0.0, f - h), at(theta, tau, ratio));
                }
                ++states;
            }
        }
    }
    Verdict v = combine({{&excess, "max (F - H)+"}});
    v.detail += "; " + std::to_string(states) + " states x 100 measurements";
    return v;
}

// 9
Verdict integrator() {
    Worst w{1e-8};
    for (double ratio : {0.0, 0.1, 1.0, 10.0}) {
        for (double theta : {0.3, 0.9, 1.3}) {
            OscillationConfig config;
            config.theta = theta;
            config.lambda_dec = ratio;
            const DensityMatrix start = decoherence_state(theta, 1.0, ratio, 0.0);
            for (int k = 0; k <= 20; ++k) {
                const double tau = k;
                const DensityMatrix evolved = lindblad_evolve(start, config, tau, 10000);
                w.see(frobenius(evolved.matrix(), oracle::decoherence(theta, 1.0, ratio, tau)),
                      at(theta, tau, ratio));
            }
        }
    }
    return combine({{&w, "max Frobenius error"}});
}

// 10
Verdict integral_route() {
    Worst plane{1e-6};
    Worst damped{1e-6};
    for (double theta : {0.2, 0.5, 0.9, 1.2, 1.4}) {
        for (double tau : {1.0, 3.7}) {
            const DensityMatrix pure = plane_wave_state(theta, tau);
            const Matrix dpure = plane_wave_derivative(theta, tau);
            plane.see(frobenius_norm(sld_integral(pure, dpure) - sld_spectral(pure, dpure)),
                      at(theta, tau));
            const DensityMatrix mixed = decoherence_state(theta, 1.0, 0.5, tau);
            const Matrix dmixed = decoherence_derivative(theta, 1.0, 0.5, tau);
            damped.see(frobenius_norm(sld_integral(mixed, dmixed) - sld_spectral(mixed, dmixed)),
                       at(theta, tau, 0.5));
        }
    }
    return combine({{&plane, "pure plane wave"}, {&damped, "damped"}});
}

// 11
Verdict eigen_structure() {
    Worst values{1e-9};
    Worst vectors{1e-9};
    Worst elements{1e-9};
    std::vector<double> thetas;
    for (int k = 5; k <= 152; ++k) {
        thetas.push_back(0.01 * k);
    }
    for (double offset : {1.01e-3, 2e-3, 5e-3}) {
        thetas.push_back(kPi / 4.0 - offset);
        thetas.push_back(kPi / 4.0 + offset);
    }
    for (double theta : thetas) {
        if (std::abs(theta - kPi / 4.0) < 1e-3) {
            continue;
        }
        for (double lt : {0.0, 0.1, 1.0, 10.0}) {
            for (double tau : {0.5, 2.0, 5.0}) {
                const double lambda = lt / tau;
                const DensityMatrix rho = decoherence_state(theta, 1.0, lambda, tau);
                const Matrix drho = decoherence_derivative(theta, 1.0, lambda, tau);
                const auto closed = state_eigensystem_decoherence(theta, 1.0, lambda, tau);
                const auto numeric = hermitian_eigen(rho.matrix());
                const auto expected = oracle::decoherence_eigenvalues(theta, lt);
                const auto branches = decoherence_branch_vectors(theta, 1.0, lambda, tau);
                const auto matrix_elements = decoherence_derivative_elements(theta, lambda, tau);
                const std::string where = at(theta, tau, lambda);

                std::vector<double> sorted = closed.values;
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t k = 0; k < 2; ++k) {
                    values.see(std::abs(sorted[k] - numeric.values[k]), where);
                    values.see(std::abs(sorted[k] - expected[k]), where);
                }
                // Eigenvectors up to phase: |<closed, numeric>| = 1 for the paired value.
                std::vector<std::size_t> pairing(2);
                for (std::size_t k = 0; k < 2; ++k) {
                    const auto v = closed.vector(k);
                    const std::size_t j = std::abs(closed.values[k] - numeric.values[0]) <
                                                  std::abs(closed.values[k] - numeric.values[1])
                                              ? 0
                                              : 1;
                    pairing[k] = j;
                    vectors.see(std::abs(1.0 - std::abs(inner(v, numeric.vector(j)))), where);
                }
                // Derivative elements against projections onto numerical eigenvectors,
                // matched to the branch vectors by overlap.
                std::size_t plus = 0;
                if (std::abs(inner(branches.column(0), numeric.vector(1))) >
                    std::abs(inner(branches.column(0), numeric.vector(0)))) {
                    plus = 1;
                }
                const Matrix projected = numeric.vectors.adjoint() * drho * numeric.vectors;
                const std::size_t minus = 1 - plus;
                elements.see(std::abs(projected(plus, plus).real() - matrix_elements.plus_plus),
                             where);
                elements.see(std::abs(projected(minus, minus).real() - matrix_elements.minus_minus),
                             where);
                elements.see(std::abs(std::abs(projected(minus, plus)) -
                                      std::abs(matrix_elements.minus_plus)),
                             where);
            }
        }
    }
    return combine({{&values, "eigenvalues"}, {&vectors, "eigenvectors"},
                    {&elements, "derivative elements"}});
}

// 12
struct FigureCheck {
    bool pass;
    std::string note;
};

std::size_t nearest_index(const app::Table &t, double tau) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (std::abs(t.rows[i][0] - tau) < std::abs(t.rows[best][0] - tau)) {
            best = i;
        }
    }
    return best;
}

std::size_t column(const app::Table &t, const std::string &name) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), name);
    if (it == t.columns.end()) {
        throw std::runtime_error("missing column " + name);
    }
    return static_cast<std::size_t>(it - t.columns.begin());
}

/// Index of the local extremum of column c in the half-period window around tau = pi.
std::size_t extremum_near_pi(const app::Table &t, std::size_t c, bool maximum) {
    const std::size_t lo = nearest_index(t, kPi / 2.0);
    const std::size_t hi = nearest_index(t, 1.5 * kPi);
    std::size_t best = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
        const double v = t.rows[i][c];
        if (maximum ? v > t.rows[best][c] : v < t.rows[best][c]) {
            best = i;
        }
    }
    return best;
}

FigureCheck coincidence(const app::Table &t, const std::string &fi_col,
                        const std::string &ent_col, const std::string &label) {
    const std::size_t pi_index = nearest_index(t, kPi);
    const std::size_t fi_peak = extremum_near_pi(t, column(t, fi_col), true);
    const std::size_t ent_dip = extremum_near_pi(t, column(t, ent_col), false);
    const auto within = [&](std::size_t i) {
        return (i > pi_index ? i - pi_index : pi_index - i) <= 1;
    };
    const bool interior = fi_peak != 0 && ent_dip != 0;
    const bool ok = interior && within(fi_peak) && within(ent_dip);
    return {ok, label + ": FI max at tau=" + sci(t.rows[fi_peak][0]) + ", entanglement min at tau=" +
                    sci(t.rows[ent_dip][0]) + (ok ? " ok" : " MISMATCH")};
}

Verdict figures(const app::Presets &presets) {
    Verdict v;
    auto note = [&](const FigureCheck &c) {
        v.pass = v.pass && c.pass;
        if (!v.detail.empty()) {
            v.detail += "; ";
        }
        v.detail += c.note;
    };

    app::FigureOptions options;
    options.presets = presets;
    options.theta = 0.6;

    // fig1: every FI column peaks at 4 at tau = pi and vanishes at 2 pi.
    {
        const app::Table t = app::figure_table(app::FigureId::Fig1, options);
        const std::size_t pi_index = nearest_index(t, kPi);
        const std::size_t two_pi = nearest_index(t, 2.0 * kPi);
        bool ok = true;
        double worst_peak = 0.0;
        double worst_zero = 0.0;
        for (std::size_t c = 1; c + 1 < t.columns.size(); ++c) {
            worst_peak = std::max(worst_peak, std::abs(t.rows[pi_index][c] - 4.0));
            worst_zero = std::max(worst_zero, std::abs(t.rows[two_pi][c]));
            for (std::size_t i = 0; i <= two_pi; ++i) {
                ok = ok && t.rows[i][c] <= t.rows[pi_index][c] + 1e-12;
            }
        }
        ok = ok && worst_peak <= 1e-9 && worst_zero <= 1e-9;
        note({ok, "fig1 peak error " + sci(worst_peak) + ", value at 2pi " + sci(worst_zero)});
    }

    // fig3: per-period maxima strictly decrease for every damped curve.
    {
        const app::Table t = app::figure_table(app::FigureId::Fig3, options);
        const std::size_t mid = nearest_index(t, 2.0 * kPi);
        bool ok = true;
        std::string values;
        for (const char *name : {"fi_lambda_0.1", "fi_lambda_1", "fi_lambda_10"}) {
            const std::size_t c = column(t, name);
            double first = -1.0;
            double second = -1.0;
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                double &slot = i < mid ? first : second;
                slot = std::max(slot, t.rows[i][c]);
            }
            ok = ok && second < first;
            values += std::string(" ") + name + " " + sci(first) + ">" + sci(second);
        }
        note({ok, "fig3 period maxima" + values + (ok ? " ok" : " NOT DECREASING")});
    }

    // fig2: flavor FI maximum and entropy minimum coincide at tau = pi.
    {
        app::FigureOptions f2 = options;
        if (presets.theta_experimental) {
            f2.theta.reset();
            f2.preset = app::ThetaPreset::Experimental;
        }
        const app::Table t = app::figure_table(app::FigureId::Fig2, f2);
        note(coincidence(t, "fi_flavor", "entropy_scaled", "fig2"));
    }

    // fig4: same coincidence with the log negativity at lambda = delta/10 and delta.
    {
        app::FigureOptions f4 = options;
        if (presets.theta_experimental) {
            f4.theta = *presets.theta_experimental;
        }
        const app::Table t = app::figure_table(app::FigureId::Fig4, f4);
        note(coincidence(t, "fi_lambda_0.1", "logneg_lambda_0.1", "fig4 lambda=0.1"));
        note(coincidence(t, "fi_lambda_1", "logneg_lambda_1", "fig4 lambda=1"));
    }
    return v;
}

// 13
std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / ("nuqet_acceptance_" +
                                                      std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"fig1", "figure fig1 --theta 0.6"},
        {"fig2", "figure fig2 --theta 0.6"},
        {"fig3", "figure fig3"},
        {"fig4", "figure fig4 --theta 0.6"},
        {"sweep", "sweep --theta 0.6 --lambda-ratio 0.5 --points 2001 --stop 20 --jobs 4"},
        {"report", "report --theta pi/8 --tau 2 --lambda-ratio 1"},
        {"selfcheck", "selfcheck --seed 12345"},
    };
    Verdict v;
    std::size_t identical = 0;
    for (const auto &[name, args] : commands) {
        std::string first;
        bool same = true;
        for (int run = 0; run < 2; ++run) {
            const fs::path out = dir / (name + std::to_string(run) + ".csv");
            const std::string cmd = std::string("\"") + NUQET_CLI_PATH + "\" " + args + " --out \"" +
                                    out.string() + "\"";
            const std::string shell = name == "selfcheck"
                                          ? std::string("\"") + NUQET_CLI_PATH + "\" " + args +
                                                " > \"" + out.string() + "\""
                                          : cmd;
            if (std::system(shell.c_str()) != 0) {
                v.pass = false;
                v.detail += name + " exited non-zero; ";
            }
            const std::string text = slurp(out);
            if (run == 0) {
                first = text;
            } else {
                same = !text.empty() && text == first;
            }
            if (text.find('\r') != std::string::npos) {
                v.pass = false;
                v.detail += name + " contains CR; ";
            }
        }
        if (same) {
            ++identical;
        } else {
            v.pass = false;
            v.detail += name + " differs between runs; ";
        }
    }
    // Worker count must not leak into the bytes either.
    {
        const fs::path serial = dir / "serial.csv";
        const std::string cmd = std::string("\"") + NUQET_CLI_PATH +
                                "\" sweep --theta 0.6 --lambda-ratio 0.5 --points 2001 --stop 20 "
                                "--jobs 1 --out \"" + serial.string() + "\"";
        const bool ok = std::system(cmd.c_str()) == 0 && slurp(serial) == slurp(dir / "sweep0.csv");
        if (!ok) {
            v.pass = false;
            v.detail += "sweep output depends on --jobs; ";
        }
    }
    fs::remove_all(dir);
    v.detail += std::to_string(identical) + "/" + std::to_string(commands.size()) +
                " commands byte-identical across runs";
    return v;
}

} // namespace

int main(int argc, char **argv) {
    std::optional<int> only;
    app::Presets presets;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--config" && i + 1 < argc) {
            presets = app::load_config(argv[++i]);
        } else {
            std::cerr << "usage: nuqet_acceptance [--only N] [--config FILE]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "QFI constancy, plane wave", qfi_plane_wave},
        {2, "QFI constancy, decoherence", qfi_decoherence},
        {3, "closed-form SLD, plane wave", sld_plane_wave},
        {4, "closed-form SLD, decoherence", sld_decoherence},
        {5, "flavor FI oracle", flavor_fi_oracle},
        {6, "residual FI", residual},
        {7, "optimal measurements saturate the QFI", optimality},
        {8, "QFI dominance over random measurements", dominance},
        {9, "RK4 integrator oracle", integrator},
        {10, "integral vs spectral SLD", integral_route},
        {11, "closed-form eigen-structure", eigen_structure},
        {12, "figure regeneration properties", [&presets] { return figures(presets); }},
        {13, "determinism", determinism},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        if (only && *only != c.id) {
            continue;
        }
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": "
                  << v.detail << std::endl;
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
