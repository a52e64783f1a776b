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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "nuqet/app/commands.hpp"

namespace nuqet::app {

namespace {

constexpr double kThetas[] = {0.2, std::numbers::pi / 8.0, 0.6, 1.0, 1.3};
constexpr double kTaus[] = {0.7, 1.7, std::numbers::pi, 4.5};
constexpr double kRatios[] = {0.1, 1.0};

double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

template <class F> double over_plane_wave(F &&f) {
    double worst = 0.0;
    for (double theta : kThetas) {
        for (double tau : kTaus) {
            worst = std::max(worst, f(theta, tau));
        }
    }
    return worst;
}

template <class F> double over_decoherence(F &&f) {
    double worst = 0.0;
    for (double theta : kThetas) {
        for (double tau : kTaus) {
            for (double ratio : kRatios) {
                worst = std::max(worst, f(theta, tau, ratio));
            }
        }
    }
    return worst;
}

} // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions &options) {
    std::vector<CheckResult> results;
    auto add = [&](std::string name, double error, double tolerance) {
        results.push_back({std::move(name), error + options.perturb, tolerance});
    };

    add("sld_plane_wave_spectral_vs_closed", over_plane_wave([](double theta, double tau) {
            const Matrix sld = sld_spectral(plane_wave_state(theta, tau),
                                            plane_wave_derivative(theta, tau));
            return max_abs_diff(sld, sld_plane_wave_closed(theta, tau));
        }),
        1e-9);

    add("sld_decoherence_spectral_vs_closed",
        over_decoherence([](double theta, double tau, double ratio) {
            const Matrix sld = sld_spectral(decoherence_state(theta, 1.0, ratio, tau),
                                            decoherence_derivative(theta, 1.0, ratio, tau));
            return max_abs_diff(sld, sld_decoherence_closed(theta));
        }),
        1e-8);

    add("sld_integral_vs_spectral", over_decoherence([](double theta, double tau, double ratio) {
            const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
            const Matrix drho = decoherence_derivative(theta, 1.0, ratio, tau);
            return max_abs_diff(sld_integral(rho, drho), sld_spectral(rho, drho));
        }),
        1e-6);

    add("lindblad_rk4_vs_closed", over_decoherence([](double theta, double tau, double ratio) {
            OscillationConfig config;
            config.theta = theta;
            config.lambda_dec = ratio;
            const DensityMatrix rho0 = decoherence_state(theta, 1.0, ratio, 0.0);
            const DensityMatrix evolved = lindblad_evolve(rho0, config, tau, 4000);
            return max_abs_diff(evolved.matrix(),
                                decoherence_state(theta, 1.0, ratio, tau).matrix());
        }),
        1e-8);

    add("flavor_fi_plane_wave_vs_closed", over_plane_wave([](double theta, double tau) {
            const DensityMatrix rho = plane_wave_state(theta, tau);
            const Matrix sld = sld_spectral(rho, plane_wave_derivative(theta, tau));
            return std::abs(fisher_information(rho, sld, flavor_povm(theta)) -
                            flavor_fi_plane_wave_closed(theta, tau));
        }),
        1e-9);

    add("flavor_fi_decoherence_vs_closed",
        over_decoherence([](double theta, double tau, double ratio) {
            const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
            const Matrix sld = sld_spectral(rho, decoherence_derivative(theta, 1.0, ratio, tau));
            return std::abs(fisher_information(rho, sld, flavor_povm(theta)) -
                            flavor_fi_decoherence_closed(theta, 1.0, ratio, tau));
        }),
        1e-9);

    add("eigensystem_closed_vs_numeric",
        over_decoherence([](double theta, double tau, double ratio) {
            const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
            const HermitianEigensystem closed =
                state_eigensystem_decoherence(theta, 1.0, ratio, tau);
            const HermitianEigensystem numeric = hermitian_eigen(rho.matrix());
            std::vector<double> values = closed.values;
            std::sort(values.begin(), values.end());
            double worst = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                worst = std::max(worst, std::abs(values[k] - numeric.values[k]));
                const auto v = closed.vector(k);
                const Matrix residual =
                    rho.matrix() * Matrix::outer(v, v) - Matrix::outer(v, v) * closed.values[k];
                worst = std::max(worst, frobenius_norm(residual));
            }
            return worst;
        }),
        1e-9);

    add("derivative_elements_closed_vs_projected",
        over_decoherence([](double theta, double tau, double ratio) {
            const Matrix drho = decoherence_derivative(theta, 1.0, ratio, tau);
            const Matrix branches = decoherence_branch_vectors(theta, 1.0, ratio, tau);
            const Matrix projected = branches.adjoint() * drho * branches;
            const DerivativeElements closed = decoherence_derivative_elements(theta, ratio, tau);
            // The off-diagonal sign follows the eigenvector phase convention.
            return std::max({std::abs(projected(0, 0) - closed.plus_plus),
                             std::abs(projected(1, 1) - closed.minus_minus),
                             std::abs(std::abs(projected(1, 0)) - std::abs(closed.minus_plus))});
        }),
        1e-9);

    add("plane_wave_qfi_equals_4", over_plane_wave([](double theta, double tau) {
            return std::abs(qfi(plane_wave_state(theta, tau), plane_wave_derivative(theta, tau)) -
                            4.0);
        }),
        1e-9);

    std::mt19937_64 rng(options.seed);
    add("random_povm_dominance", over_decoherence([&rng](double theta, double tau, double ratio) {
            const DensityMatrix rho = decoherence_state(theta, 1.0, ratio, tau);
            const Matrix drho = decoherence_derivative(theta, 1.0, ratio, tau);
            const Matrix sld = sld_spectral(rho, drho);
            const double h = qfi(rho, drho);
            double excess = 0.0;
            for (int k = 0; k < 100; ++k) {
                const double f = fisher_information(rho, sld, random_projective_povm(2, rng));
                excess = std::max(excess, f - h);
            }
            return excess;
        }),
        1e-8);

    add("optimal_povm_saturation", over_plane_wave([](double theta, double tau) {
            const DensityMatrix rho = plane_wave_state(theta, tau);
            const Matrix drho = plane_wave_derivative(theta, tau);
            const Matrix sld = sld_spectral(rho, drho);
            const double h = qfi(rho, drho);
            const double closed = fisher_information(rho, sld, optimal_povm_plane_wave(theta, tau));
            const double eig = fisher_information(rho, sld, eigenprojector_povm(sld));
            return std::max(std::abs(closed - h), std::abs(eig - h));
        }),
        1e-8);

    return results;
}

bool write_selfcheck(const SelfcheckOptions &options, std::ostream &out) {
    const auto results = run_selfcheck(options);
    bool ok = true;
    out << "check,max_error,tolerance,status\n";
    for (const auto &r : results) {
        out << r.name << ',' << format_double(r.max_error) << ',' << format_double(r.tolerance)
            << ',' << (r.passed() ? "pass" : "FAIL") << '\n';
        ok = ok && r.passed();
    }
    return ok;
}

} // namespace nuqet::app
