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

#include "nuqet/app/options.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

namespace nuqet::app {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

std::optional<double> parse_real(std::string_view text) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, value);
    if (result.ec != std::errc{} || result.ptr != end || text.empty() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void bad_angle(std::string_view text) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse angle '" + std::string(text) + "'");
}

} // namespace

double parse_angle(std::string_view text) {
    std::string_view rest = trim(text);
    if (rest.empty()) {
        bad_angle(text);
    }
    double sign = 1.0;
    if (rest.front() == '-' || rest.front() == '+') {
        sign = rest.front() == '-' ? -1.0 : 1.0;
        rest.remove_prefix(1);
    }

    const auto pi_pos = rest.find("pi");
    if (pi_pos == std::string_view::npos) {
        const auto value = parse_real(rest);
        if (!value) {
            bad_angle(text);
        }
        return sign * *value;
    }

    double factor = 1.0;
    std::string_view coefficient = rest.substr(0, pi_pos);
    if (!coefficient.empty() && coefficient.back() == '*') {
        coefficient.remove_suffix(1);
    }
    if (!coefficient.empty()) {
        const auto value = parse_real(coefficient);
        if (!value) {
            bad_angle(text);
        }
        factor = *value;
    }

    double divisor = 1.0;
    std::string_view tail = rest.substr(pi_pos + 2);
    if (!tail.empty()) {
        if (tail.front() != '/') {
            bad_angle(text);
        }
        const auto value = parse_real(tail.substr(1));
        if (!value || *value == 0.0) {
            bad_angle(text);
        }
        divisor = *value;
    }
    return sign * factor * std::numbers::pi / divisor;
}

Presets parse_config(std::istream &in) {
    Presets presets;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ConfigError,
                        "line " + std::to_string(line_number) + ": expected key = value");
        }
        const std::string_view key = trim(view.substr(0, eq));
        const std::string_view value = trim(view.substr(eq + 1));
        if (key == "theta_experimental_rad") {
            try {
                presets.theta_experimental = parse_angle(value);
            } catch (const Error &) {
                throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_number) +
                                                        ": bad angle '" + std::string(value) +
                                                        "'");
            }
        } else {
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_number) +
                                                    ": unknown key '" + std::string(key) + "'");
        }
    }
    return presets;
}

Presets load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ConfigError, "cannot open config file " + path);
    }
    return parse_config(in);
}

ThetaPreset parse_preset(const std::string &text) {
    if (text == "pi8") {
        return ThetaPreset::Pi8;
    }
    if (text == "experimental") {
        return ThetaPreset::Experimental;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + text + "' (pi8|experimental)");
}

double resolve_preset(ThetaPreset preset, const Presets &presets) {
    if (preset == ThetaPreset::Pi8) {
        return std::numbers::pi / 8.0;
    }
    if (!presets.theta_experimental) {
        throw Error(ErrorCode::MissingPreset,
                    "preset 'experimental' needs theta_experimental_rad in a --config file");
    }
    return *presets.theta_experimental;
}

ModelKind parse_model(const std::string &text) {
    if (text == "plane-wave") {
        return ModelKind::PlaneWave;
    }
    if (text == "decoherence") {
        return ModelKind::Decoherence;
    }
    throw Error(ErrorCode::InvalidArgument,
                "unknown model '" + text + "' (plane-wave|decoherence)");
}

std::string model_name(ModelKind model) {
    return model == ModelKind::PlaneWave ? "plane-wave" : "decoherence";
}

ModeBasis::Kind parse_basis(const std::string &text) {
    if (text == "mass") {
        return ModeBasis::Kind::Mass;
    }
    if (text == "flavor") {
        return ModeBasis::Kind::Flavor;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown basis '" + text + "' (mass|flavor)");
}

void ModelPoint::validate() const {
    OscillationConfig config;
    config.theta = theta;
    config.delta = 1.0;
    config.lambda_dec = lambda_ratio;
    config.validate();
    if (tau < 0.0 || !std::isfinite(tau)) {
        throw Error(ErrorCode::NegativeTime, "tau must be a non-negative number");
    }
    if (model == ModelKind::PlaneWave && lambda_ratio != 0.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "a nonzero lambda ratio requires the decoherence model");
    }
}

DensityMatrix ModelPoint::state() const {
    return model == ModelKind::PlaneWave ? plane_wave_state(theta, tau)
                                         : decoherence_state(theta, 1.0, lambda_ratio, tau);
}

Matrix ModelPoint::derivative() const {
    return model == ModelKind::PlaneWave ? plane_wave_derivative(theta, tau)
                                         : decoherence_derivative(theta, 1.0, lambda_ratio, tau);
}

StateFamily ModelPoint::family() const {
    return model == ModelKind::PlaneWave ? plane_wave_family(tau)
                                         : decoherence_family(1.0, lambda_ratio, tau);
}

ModeBasis ModelPoint::mode_basis() const {
    return basis == ModeBasis::Kind::Flavor ? ModeBasis::flavor(theta) : ModeBasis::mass();
}

namespace {

struct QuantityName {
    Quantity quantity;
    const char *name;
};

constexpr QuantityName kQuantityNames[] = {
    {Quantity::Qfi, "qfi"},
    {Quantity::FiFlavor, "fi_flavor"},
    {Quantity::FiMass, "fi_mass"},
    {Quantity::EntropyScaled, "entropy_scaled"},
    {Quantity::LogNegativity, "log_negativity"},
    {Quantity::Purity, "purity"},
    {Quantity::SurvivalProbability, "survival_probability"},
};

} // namespace

Quantity parse_quantity(std::string_view text) {
    for (const auto &entry : kQuantityNames) {
        if (text == entry.name) {
            return entry.quantity;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown quantity '" + std::string(text) + "'");
}

std::string quantity_name(Quantity quantity) {
    for (const auto &entry : kQuantityNames) {
        if (entry.quantity == quantity) {
            return entry.name;
        }
    }
    return "unknown";
}

std::vector<Quantity> parse_quantities(std::string_view text) {
    std::vector<Quantity> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (!item.empty()) {
            out.push_back(parse_quantity(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no quantities requested");
    }
    return out;
}

std::vector<double> evaluate(const ModelPoint &point, const std::vector<Quantity> &quantities) {
    point.validate();
    const DensityMatrix rho = point.state();

    const bool needs_estimation = std::any_of(quantities.begin(), quantities.end(), [](Quantity q) {
        return q == Quantity::Qfi || q == Quantity::FiFlavor || q == Quantity::FiMass;
    });
    std::optional<Matrix> sld;
    double quantum_fisher = 0.0;
    if (needs_estimation) {
        const Matrix drho = point.derivative();
        sld = sld_spectral(rho, drho);
        quantum_fisher = qfi(rho, drho);
    }

    std::vector<double> values;
    values.reserve(quantities.size());
    for (Quantity quantity : quantities) {
        double value = 0.0;
        switch (quantity) {
        case Quantity::Qfi:
            value = quantum_fisher;
            break;
        case Quantity::FiFlavor:
            value = fisher_information(rho, *sld, flavor_povm(point.theta));
            break;
        case Quantity::FiMass:
            value = fisher_information(rho, *sld, mass_povm());
            break;
        case Quantity::EntropyScaled:
            value = scaled_entanglement_entropy(rho, point.mode_basis());
            break;
        case Quantity::LogNegativity:
            value = log_negativity(embed_occupation(rho, point.mode_basis()));
            break;
        case Quantity::Purity:
            value = rho.purity();
            break;
        case Quantity::SurvivalProbability:
            value = outcome_probabilities(rho, flavor_povm(point.theta)).front();
            break;
        }
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::NumericalInconsistency,
                        quantity_name(quantity) + " is not finite");
        }
        if ((quantity == Quantity::FiFlavor || quantity == Quantity::FiMass) &&
            value > quantum_fisher + 1e-8) {
            throw Error(ErrorCode::NumericalInconsistency,
                        quantity_name(quantity) + " exceeds the QFI");
        }
        values.push_back(value);
    }
    return values;
}

} // namespace nuqet::app
