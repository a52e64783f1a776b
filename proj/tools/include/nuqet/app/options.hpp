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
 * Input handling for the command-line front end: angle expressions, the
 * preset config file, and the dimensionless model point (theta, tau, lambda/delta).
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuqet/entanglement.hpp"
#include "nuqet/neutrino.hpp"
#include "nuqet/qet.hpp"

namespace nuqet::app {

/**
 * Parses a real number or a multiple of pi: "0.39", "pi", "-pi/4",
 * "3pi/8", "3*pi/8", "2.5*pi", "pi/8". Throws InvalidArgument.
 */
double parse_angle(std::string_view text);

/// Values read from a key=value config file.
struct Presets {
    std::optional<double> theta_experimental;
};

/// Flat "key = value" lines, '#' comments. Throws ConfigError.
Presets parse_config(std::istream &in);
Presets load_config(const std::string &path);

enum class ThetaPreset { Pi8, Experimental };
ThetaPreset parse_preset(const std::string &text);
/// pi/8, or the configured experimental angle (MissingPreset when absent).
double resolve_preset(ThetaPreset preset, const Presets &presets);

ModelKind parse_model(const std::string &text);
std::string model_name(ModelKind model);
ModeBasis::Kind parse_basis(const std::string &text);

/// One point of the dimensionless parameter space; delta is fixed to 1.
struct ModelPoint {
    double theta = 0.0;
    /// tau = delta t
    double tau = 0.0;
    /// lambda / delta
    double lambda_ratio = 0.0;
    ModelKind model = ModelKind::PlaneWave;
    ModeBasis::Kind basis = ModeBasis::Kind::Flavor;

    /// theta in (0, pi/2), tau >= 0, lambda_ratio >= 0 and zero for the plane wave.
    void validate() const;
    [[nodiscard]] DensityMatrix state() const;
    [[nodiscard]] Matrix derivative() const;
    [[nodiscard]] StateFamily family() const;
    [[nodiscard]] ModeBasis mode_basis() const;
};

enum class Quantity {
    Qfi,
    FiFlavor,
    FiMass,
    EntropyScaled,
    LogNegativity,
    Purity,
    SurvivalProbability,
};

Quantity parse_quantity(std::string_view text);
std::string quantity_name(Quantity quantity);
/// Comma-separated list.
std::vector<Quantity> parse_quantities(std::string_view text);

/**
 * Evaluates the requested quantities at one point, in order.
 *
 * FI values are checked against the QFI (fi <= qfi + 1e-8) and every value
 * must be finite; violations raise NumericalInconsistency.
 */
std::vector<double> evaluate(const ModelPoint &point, const std::vector<Quantity> &quantities);

} // namespace nuqet::app
