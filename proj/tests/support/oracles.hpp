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
 * Independent reference formulas for the tests. Nothing here calls into the
 * library: states, SLDs and Fisher informations are written out entry by
 * entry from the oscillation formulas so that library results can be
 * compared against a second derivation.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "nuqet/linalg.hpp"

namespace nuqet::oracle {

using C = std::complex<double>;
/// Row-major 2x2.
using M2 = std::array<C, 4>;

inline constexpr double kPi = 3.14159265358979323846;

/// Mass-basis state after phase phi with coherence damped by `damping`.
inline M2 two_flavor_state(double theta, double phi, double damping) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const C coherence = std::polar(s * c * damping, phi);
    return {c * c, coherence, std::conj(coherence), s * s};
}

inline M2 plane_wave(double theta, double phi) { return two_flavor_state(theta, phi, 1.0); }

inline M2 decoherence(double theta, double delta, double lambda, double t) {
    return two_flavor_state(theta, delta * t, std::exp(-0.5 * lambda * t));
}

inline M2 sld_plane_wave(double theta, double phi) {
    const double s2 = std::sin(2.0 * theta);
    const double c2 = std::cos(2.0 * theta);
    return {-2.0 * s2, 2.0 * c2 * std::polar(1.0, phi), 2.0 * c2 * std::polar(1.0, -phi),
            2.0 * s2};
}

inline M2 sld_decoherence(double theta) {
    return {-2.0 * std::tan(theta), 0.0, 0.0, 2.0 / std::tan(theta)};
}

/// Flavor measurement on the pure oscillating state.
inline double fi_flavor_plane_wave(double theta, double phi) {
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double h = std::sin(0.5 * phi);
    return 4.0 * c2 * c2 * h * h / (1.0 - s2 * s2 * h * h);
}

inline double fi_flavor_decoherence(double theta, double delta, double lambda, double t) {
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double bracket = 1.0 - std::exp(-0.5 * lambda * t) * std::cos(delta * t);
    return 4.0 * c2 * c2 * bracket / (2.0 - s2 * s2 * bracket);
}

inline double residual_fi(double theta) {
    const double c2 = std::cos(2.0 * theta);
    return 4.0 * c2 * c2 / (1.0 + c2 * c2);
}

inline double survival(double theta, double phi) {
    const double s2 = std::sin(2.0 * theta);
    const double h = std::sin(0.5 * phi);
    return 1.0 - s2 * s2 * h * h;
}

/// Ascending eigenvalues of the damped state.
inline std::array<double, 2> decoherence_eigenvalues(double theta, double lambda_t) {
    const double c2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);
    const double root = std::sqrt(c2 * c2 + std::exp(-lambda_t) * s2 * s2);
    return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

inline double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

inline double max_abs_diff(const Matrix &a, const M2 &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b[2 * i + j]));
        }
    }
    return worst;
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

} // namespace nuqet::oracle
