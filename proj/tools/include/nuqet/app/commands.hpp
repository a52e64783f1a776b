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
 * The nuqet subcommands as library functions writing to a stream, so tests
 * can drive them without spawning processes.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nuqet/app/format.hpp"
#include "nuqet/app/options.hpp"

namespace nuqet::app {

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

struct ReportOptions {
    ModelPoint point;
    std::uint64_t measurements = 1;
    Format format = Format::Csv;
};

/// QFI, SLD, FI and Cramer-Rao bounds for the flavor, mass and SLD-eigenbasis
/// measurements at one point.
void write_report(const ReportOptions &options, std::ostream &out);

enum class FigureId { Fig1, Fig2, Fig3, Fig4 };
FigureId parse_figure(const std::string &text);

struct FigureOptions {
    /// Explicit angle; overrides the preset for fig2-fig4 and adds a column to fig1.
    std::optional<double> theta;
    ThetaPreset preset = ThetaPreset::Pi8;
    Presets presets;
    double tau_max = 0.0; // 0 selects 4 pi
    std::size_t points = 4001;
    ModeBasis::Kind basis = ModeBasis::Kind::Flavor;
    Format format = Format::Csv;
};

/// The decoherence ratios plotted in fig3; fig4 uses the middle two.
inline constexpr double kFigureLambdaRatios[] = {0.0, 0.1, 1.0, 10.0};

/// Builds the data behind one figure as a table; tau runs over [0, tau_max].
Table figure_table(FigureId which, const FigureOptions &options);
void write_figure(FigureId which, const FigureOptions &options, std::ostream &out);

enum class SweepVariable { Tau, Theta, LambdaRatio };
SweepVariable parse_sweep_variable(const std::string &text);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Tau;
    double start = 0.0;
    double stop = 1.0;
    std::size_t points = 2;

    /// start < stop, 2 <= points <= 1e6.
    void validate() const;
    [[nodiscard]] double at(std::size_t index) const;
};

struct SweepOptions {
    SweepSpec spec;
    ModelPoint base;
    std::vector<Quantity> quantities;
    Format format = Format::Csv;
    /// Worker threads; rows are always emitted in grid order.
    unsigned jobs = 1;
};

Table sweep_table(const SweepOptions &options);
void write_sweep(const SweepOptions &options, std::ostream &out);

struct SelfcheckOptions {
    std::uint64_t seed = 20170301;
    /// Added to every measured error; a nonzero value must make checks fail.
    double perturb = 0.0;
};

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    [[nodiscard]] bool passed() const { return max_error <= tolerance; }
};

/// Oracle-equivalence suite: every analytic form against its numerical route.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions &options);
/// Prints the table; returns true iff every check passed.
bool write_selfcheck(const SelfcheckOptions &options, std::ostream &out);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nuqet::app
