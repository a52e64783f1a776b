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

#include "nuqet/neutrino.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nuqet {

namespace {

using std::numbers::pi;

// Mass-basis state with coherence 1/2 sin 2theta * damping * e^{i phase}.
Matrix mass_basis_state(double theta, double phase, double damping) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex coherence = 0.5 * std::sin(2.0 * theta) * damping * std::polar(1.0, phase);
    return Matrix{{c * c, coherence}, {std::conj(coherence), s * s}};
}

Matrix mass_basis_derivative(double theta, double phase, double damping) {
    const double s2 = std::sin(2.0 * theta);
    const Complex coherence = std::cos(2.0 * theta) * damping * std::polar(1.0, phase);
    return Matrix{{-s2, coherence}, {std::conj(coherence), s2}};
}

void require_time(double t) {
    if (t < 0.0 || std::isnan(t)) {
        throw Error(ErrorCode::NegativeTime, "time must be non-negative");
    }
}

void require_rate(double lambda_dec) {
    if (lambda_dec < 0.0 || std::isnan(lambda_dec)) {
        throw Error(ErrorCode::InvalidArgument, "decoherence rate must be non-negative");
    }
}

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

} // namespace

OscillationConfig OscillationConfig::from_masses(double theta, double m1, double m2,
                                                 double energy, double lambda_dec) {
    if (!(energy > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "energy must be positive");
    }
    OscillationConfig config;
    config.theta = theta;
    config.delta = (m2 * m2 - m1 * m1) / (2.0 * energy);
    config.lambda_dec = lambda_dec;
    config.validate();
    return config;
}

void OscillationConfig::validate() const {
    if (!(theta > 0.0 && theta < pi / 2.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "mixing angle must lie in (0, pi/2), got " + std::to_string(theta));
    }
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorCode::InvalidArgument, "phase rate delta must be positive (m2 > m1)");
    }
    require_rate(lambda_dec);
}

Matrix mixing_matrix(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return Matrix{{c, s}, {-s, c}};
}

DensityMatrix plane_wave_state(double theta, double phi) {
    return DensityMatrix(mass_basis_state(theta, phi, 1.0));
}

Matrix plane_wave_derivative(double theta, double phi) {
    return mass_basis_derivative(theta, phi, 1.0);
}

DensityMatrix decoherence_state(double theta, double delta, double lambda_dec, double t) {
    require_time(t);
    require_rate(lambda_dec);
    return DensityMatrix(mass_basis_state(theta, delta * t, std::exp(-0.5 * lambda_dec * t)));
}

Matrix decoherence_derivative(double theta, double delta, double lambda_dec, double t) {
    require_time(t);
    require_rate(lambda_dec);
    return mass_basis_derivative(theta, delta * t, std::exp(-0.5 * lambda_dec * t));
}

double survival_probability(double theta, double delta, double lambda_dec, double t) {
    require_time(t);
    const double s2 = std::sin(2.0 * theta);
    return 1.0 - 0.5 * s2 * s2 * (1.0 - std::exp(-0.5 * lambda_dec * t) * std::cos(delta * t));
}

Matrix decoherence_branch_vectors(double theta, double delta, double lambda_dec, double t) {
    require_time(t);
    require_rate(lambda_dec);
    const double a = std::tan(2.0 * theta) * std::exp(-0.5 * lambda_dec * t);
    const double q = std::sqrt(1.0 + a * a);
    const double prefactor = 1.0 / (std::sqrt(2.0) * std::sqrt(q));
    const Complex phase = std::polar(1.0, -delta * t);

    // sqrt(q - 1) = |a| / sqrt(q + 1) avoids cancellation for small a.
    const double root_minus = std::abs(a) / std::sqrt(q + 1.0);
    const double root_plus = std::sqrt(q + 1.0);

    Matrix vectors(2);
    vectors(0, 0) = prefactor * sign_of(a) * root_plus;
    vectors(1, 0) = prefactor * phase * root_minus;
    vectors(0, 1) = prefactor * a / root_plus;
    vectors(1, 1) = -prefactor * phase * root_plus;
    return vectors;
}

HermitianEigensystem state_eigensystem_decoherence(double theta, double delta,
                                                   double lambda_dec, double t) {
    const double c2 = std::cos(2.0 * theta);
    if (std::abs(c2) < std::sin(2e-3)) {
        return hermitian_eigen(decoherence_state(theta, delta, lambda_dec, t).matrix());
    }
    const double s2 = std::sin(2.0 * theta);
    const double root = std::sqrt(c2 * c2 + std::exp(-lambda_dec * t) * s2 * s2);
    const double beta_plus_branch = 0.5 * (1.0 + sign_of(c2) * root);
    const double beta_minus_branch = 0.5 * (1.0 - sign_of(c2) * root);

    const Matrix branches = decoherence_branch_vectors(theta, delta, lambda_dec, t);
    const std::size_t low = beta_plus_branch <= beta_minus_branch ? 0 : 1;
    const std::size_t high = 1 - low;

    HermitianEigensystem eig;
    eig.values = {std::min(beta_plus_branch, beta_minus_branch),
                  std::max(beta_plus_branch, beta_minus_branch)};
    eig.vectors = Matrix(2);
    for (std::size_t i = 0; i < 2; ++i) {
        eig.vectors(i, 0) = branches(i, low);
        eig.vectors(i, 1) = branches(i, high);
    }
    return eig;
}

DerivativeElements decoherence_derivative_elements(double theta, double lambda_dec, double t) {
    require_time(t);
    require_rate(lambda_dec);
    const double decay = std::exp(-lambda_dec * t);
    const double tan2 = std::tan(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double norm = std::sqrt(1.0 + tan2 * tan2 * decay);

    DerivativeElements elements;
    elements.plus_plus = -s2 * (1.0 - decay) / norm;
    elements.minus_minus = -elements.plus_plus;
    elements.minus_plus = -(1.0 / s2) * std::abs(tan2 * std::exp(-0.5 * lambda_dec * t)) / norm;
    return elements;
}

Matrix oscillation_hamiltonian(double delta) { return Matrix::diagonal({0.0, delta}); }

Matrix dephasing_operator(double lambda_dec) {
    require_rate(lambda_dec);
    return Matrix::diagonal({std::sqrt(lambda_dec), 0.0});
}

Matrix lindblad_rhs(const Matrix &rho, const Matrix &hamiltonian, const Matrix &jump) {
    require_same_dim(rho, hamiltonian, "Hamiltonian");
    require_same_dim(rho, jump, "jump operator");
    const Complex minus_i(0.0, -1.0);
    const Matrix jump_dag = jump.adjoint();
    return minus_i * commutator(hamiltonian, rho) + jump * rho * jump_dag -
           0.5 * anticommutator(rho, jump_dag * jump);
}

DensityMatrix lindblad_evolve(const DensityMatrix &rho0, const OscillationConfig &config,
                              double t, std::size_t steps) {
    if (steps == 0) {
        throw Error(ErrorCode::ZeroSteps, "integration needs at least one step");
    }
    require_time(t);
    if (rho0.dim() != 2) {
        throw Error(ErrorCode::DimMismatch, "two-flavor evolution needs a 2x2 state");
    }
    if (t == 0.0) {
        return rho0;
    }
    const Matrix h = oscillation_hamiltonian(config.delta);
    const Matrix a = dephasing_operator(config.lambda_dec);
    const double dt = t / static_cast<double>(steps);

    Matrix rho = rho0.matrix();
    for (std::size_t step = 0; step < steps; ++step) {
        const Matrix k1 = lindblad_rhs(rho, h, a);
        const Matrix k2 = lindblad_rhs(rho + k1 * (0.5 * dt), h, a);
        const Matrix k3 = lindblad_rhs(rho + k2 * (0.5 * dt), h, a);
        const Matrix k4 = lindblad_rhs(rho + k3 * dt, h, a);
        rho += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    }
    const double drift = std::abs(trace(rho) - 1.0);
    if (drift > 1e-10) {
        throw Error(ErrorCode::TraceDrift,
                    "RK4 trace drifted by " + std::to_string(drift));
    }
    return DensityMatrix(rho);
}

Povm flavor_povm(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cs = 0.5 * std::sin(2.0 * theta);
    return Povm({Matrix{{c * c, cs}, {cs, s * s}}, Matrix{{s * s, -cs}, {-cs, c * c}}},
                {"nu_e", "nu_mu"});
}

Povm mass_povm() {
    return Povm({Matrix::diagonal({1.0, 0.0}), Matrix::diagonal({0.0, 1.0})},
                {"nu_1", "nu_2"});
}

Povm optimal_povm_plane_wave(double theta, double phi) {
    const double s2 = std::sin(2.0 * theta);
    const Complex off = 0.5 * std::cos(2.0 * theta) * std::polar(1.0, phi);
    return Povm({Matrix{{0.5 * (1.0 - s2), off}, {std::conj(off), 0.5 * (1.0 + s2)}},
                 Matrix{{0.5 * (1.0 + s2), -off}, {-std::conj(off), 0.5 * (1.0 - s2)}}},
                {"plus2", "minus2"});
}

Matrix sld_plane_wave_closed(double theta, double phi) {
    const double s2 = std::sin(2.0 * theta);
    const Complex off = 2.0 * std::cos(2.0 * theta) * std::polar(1.0, phi);
    return Matrix{{-2.0 * s2, off}, {std::conj(off), 2.0 * s2}};
}

Matrix sld_decoherence_closed(double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (std::abs(s) < 1e-12 || std::abs(c) < 1e-12) {
        throw Error(ErrorCode::DegenerateAngle,
                    "SLD diverges at theta = 0 and theta = pi/2");
    }
    return Matrix::diagonal({-2.0 * s / c, 2.0 * c / s});
}

double flavor_fi_plane_wave_closed(double theta, double phi) {
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double half = std::sin(0.5 * phi);
    const double numerator = 4.0 * c2 * c2 * half * half;
    const double denominator = 1.0 - s2 * s2 * half * half;
    if (denominator < 1e-14) {
        // Only reachable at theta = pi/4, phi = pi, where cos 2theta vanishes too.
        if (numerator < 1e-14) {
            return 0.0;
        }
        throw Error(ErrorCode::SingularOutcome, "flavor FI denominator vanishes");
    }
    return numerator / denominator;
}

double flavor_fi_decoherence_closed(double theta, double delta, double lambda_dec, double t) {
    require_time(t);
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double bracket = 1.0 - std::exp(-0.5 * lambda_dec * t) * std::cos(delta * t);
    const double denominator = 2.0 - s2 * s2 * bracket;
    const double numerator = 4.0 * c2 * c2 * bracket;
    if (denominator < 1e-14) {
        if (numerator < 1e-14) {
            return 0.0;
        }
        throw Error(ErrorCode::SingularOutcome, "flavor FI denominator vanishes");
    }
    return numerator / denominator;
}

double residual_fi(double theta) {
    const double c2 = std::cos(2.0 * theta);
    return 4.0 * c2 * c2 / (1.0 + c2 * c2);
}

StateFamily plane_wave_family(double phi) {
    StateFamily family;
    family.state_at = [phi](double theta) { return plane_wave_state(theta, phi); };
    family.derivative_at = [phi](double theta) { return plane_wave_derivative(theta, phi); };
    family.domain_min = 0.0;
    family.domain_max = pi / 2.0;
    return family;
}

StateFamily decoherence_family(double delta, double lambda_dec, double t) {
    require_time(t);
    require_rate(lambda_dec);
    StateFamily family;
    family.state_at = [=](double theta) {
        return decoherence_state(theta, delta, lambda_dec, t);
    };
    family.derivative_at = [=](double theta) {
        return decoherence_derivative(theta, delta, lambda_dec, t);
    };
    family.domain_min = 0.0;
    family.domain_max = pi / 2.0;
    return family;
}

} // namespace nuqet
