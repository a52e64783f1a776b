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
 * Two-flavor neutrino oscillation models in the mass basis: the plane-wave
 * state and the Lindblad decoherence state (closed form and integrated),
 * the physical measurements, and the closed-form SLD/FI expressions.
 *
 * Time enters through the dimensionless phase tau = delta t wherever the
 * callers allow it; functions taking (delta, t) accept any consistent units.
 */
#pragma once

#include <cstddef>

#include "nuqet/linalg.hpp"
#include "nuqet/qet.hpp"

namespace nuqet {

enum class ModelKind { PlaneWave, Decoherence };

struct OscillationConfig {
    /// Mixing angle, radians.
    double theta = 0.0;
    /// Phase rate (m2^2 - m1^2) / 2E.
    double delta = 1.0;
    /// Decoherence rate.
    double lambda_dec = 0.0;

    /// delta = (m2^2 - m1^2) / (2 energy); natural units.
    static OscillationConfig from_masses(double theta, double m1, double m2, double energy,
                                         double lambda_dec = 0.0);

    /// theta in (0, pi/2), delta > 0, lambda_dec >= 0; throws InvalidArgument.
    void validate() const;

    [[nodiscard]] ModelKind kind() const noexcept {
        return lambda_dec == 0.0 ? ModelKind::PlaneWave : ModelKind::Decoherence;
    }
};

/// Flavor-from-mass rotation: rows (cos, sin), (-sin, cos).
Matrix mixing_matrix(double theta);

/// Electron-neutrino state after phase phi = delta t, mass basis.
DensityMatrix plane_wave_state(double theta, double phi);
/// d/dtheta of plane_wave_state.
Matrix plane_wave_derivative(double theta, double phi);

/// Solution of the dephasing master equation; coherence 1/2 sin 2theta e^{(i delta - lambda/2) t}.
DensityMatrix decoherence_state(double theta, double delta, double lambda_dec, double t);
/// d/dtheta of decoherence_state.
Matrix decoherence_derivative(double theta, double delta, double lambda_dec, double t);

/// 1 - 1/2 sin^2 2theta (1 - e^{-lambda t/2} cos delta t)
double survival_probability(double theta, double delta, double lambda_dec, double t);

/**
 * Closed-form eigen-system of decoherence_state, ascending.
 *
 * The analytic eigenvectors are
 *   |b+-> ~ ( a / sqrt(sqrt(1+a^2) -+ 1), +-e^{-i delta t} sqrt(sqrt(1+a^2) -+ 1) ),
 * a = tan(2theta) e^{-lambda t/2}, with eigenvalue
 * 1/2 (1 +- sgn(cos 2theta) sqrt(cos^2 2theta + e^{-lambda t} sin^2 2theta)).
 * Within 1e-3 of theta = pi/4 (mod pi/2) a blows up; there the numerical
 * eigen-decomposition is returned instead.
 */
HermitianEigensystem state_eigensystem_decoherence(double theta, double delta,
                                                   double lambda_dec, double t);

/// Matrix elements of d/dtheta rho between the closed-form eigenvectors,
/// labelled by the sign branch of the eigenvector formula.
struct DerivativeElements {
    double plus_plus = 0.0;
    double minus_minus = 0.0;
    double minus_plus = 0.0;
};
DerivativeElements decoherence_derivative_elements(double theta, double lambda_dec, double t);

/// The sign-branch eigenvectors |b+>, |b-> themselves (columns 0 and 1).
Matrix decoherence_branch_vectors(double theta, double delta, double lambda_dec, double t);

/// H = diag(0, delta) in the mass basis.
Matrix oscillation_hamiltonian(double delta);
/// A = sqrt(lambda) |nu_1><nu_1|.
Matrix dephasing_operator(double lambda_dec);

/// -i[H, rho] + A rho A^dagger - 1/2 {rho, A^dagger A}
Matrix lindblad_rhs(const Matrix &rho, const Matrix &hamiltonian, const Matrix &jump);

/**
 * Fixed-step classical RK4 integration of the dephasing master equation.
 *
 * No renormalization is applied; a trace drift above 1e-10 raises TraceDrift.
 */
DensityMatrix lindblad_evolve(const DensityMatrix &rho0, const OscillationConfig &config,
                              double t, std::size_t steps);

/// Projectors onto |nu_e>, |nu_mu> in the mass basis ("nu_e", "nu_mu").
Povm flavor_povm(double theta);
/// Projectors onto |nu_1>, |nu_2> ("nu_1", "nu_2").
Povm mass_povm();
/// Projectors onto the +-2 eigenvectors of the plane-wave SLD ("plus2", "minus2").
Povm optimal_povm_plane_wave(double theta, double phi);

/// 2 [[-sin 2theta, cos 2theta e^{i phi}], [cos 2theta e^{-i phi}, sin 2theta]]
Matrix sld_plane_wave_closed(double theta, double phi);
/// 2 diag(-tan theta, cot theta); independent of lambda t.
Matrix sld_decoherence_closed(double theta);

/// 4 cos^2 2theta sin^2(phi/2) / (1 - sin^2 2theta sin^2(phi/2))
double flavor_fi_plane_wave_closed(double theta, double phi);
/// 4 cos^2 2theta B / (2 - sin^2 2theta B), B = 1 - e^{-lambda t/2} cos(delta t)
double flavor_fi_decoherence_closed(double theta, double delta, double lambda_dec, double t);
/// Large-time limit 4 cos^2 2theta / (1 + cos^2 2theta).
double residual_fi(double theta);

/// theta -> plane_wave_state(theta, phi) with analytic derivative, domain [0, pi/2].
StateFamily plane_wave_family(double phi);
/// theta -> decoherence_state(theta, delta, lambda, t) with analytic derivative.
StateFamily decoherence_family(double delta, double lambda_dec, double t);

} // namespace nuqet
