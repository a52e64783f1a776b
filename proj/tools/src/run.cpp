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

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nuqet/app/commands.hpp"

namespace nuqet::app {

namespace {

/// Raw option text shared by the subcommands; parsed after CLI11 is done so
/// that domain errors carry nuqet error codes.
struct CommonArgs {
    std::optional<std::string> theta;
    std::string preset = "pi8";
    std::optional<std::string> config;
    std::string format = "csv";
    std::string out = "-";
    std::string basis = "flavor";
};

struct PointArgs {
    std::string tau = "0";
    double lambda_ratio = 0.0;
    std::optional<std::string> model;
};

void add_common(CLI::App *cmd, CommonArgs &args) {
    cmd->add_option("--theta", args.theta, "mixing angle: radians or pi expression (pi/8)");
    cmd->add_option("--preset", args.preset, "angle preset when --theta is absent")
        ->check(CLI::IsMember({"pi8", "experimental"}));
    cmd->add_option("--config", args.config, "key=value file (theta_experimental_rad)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", args.out, "output path, '-' for stdout");
    cmd->add_option("--basis", args.basis, "mode basis for entanglement: flavor or mass")
        ->check(CLI::IsMember({"flavor", "mass"}));
}

void add_point(CLI::App *cmd, PointArgs &args) {
    cmd->add_option("--tau", args.tau, "dimensionless time delta*t (pi expressions allowed)");
    cmd->add_option("--lambda-ratio", args.lambda_ratio, "decoherence rate lambda/delta");
    cmd->add_option("--model", args.model, "plane-wave or decoherence (default from lambda)")
        ->check(CLI::IsMember({"plane-wave", "decoherence"}));
}

Presets presets_of(const CommonArgs &args) {
    return args.config ? load_config(*args.config) : Presets{};
}

double theta_of(const CommonArgs &args) {
    if (args.theta) {
        return parse_angle(*args.theta);
    }
    return resolve_preset(parse_preset(args.preset), presets_of(args));
}

ModelPoint point_of(const CommonArgs &common, const PointArgs &args) {
    ModelPoint point;
    point.theta = theta_of(common);
    point.tau = parse_angle(args.tau);
    point.lambda_ratio = args.lambda_ratio;
    point.model = args.model ? parse_model(*args.model)
                             : (args.lambda_ratio == 0.0 ? ModelKind::PlaneWave
                                                         : ModelKind::Decoherence);
    point.basis = parse_basis(common.basis);
    point.validate();
    return point;
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path == "-" || path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot open output file '" + path + "'");
    }
    file << text;
    if (!file.flush()) {
        throw Error(ErrorCode::InvalidArgument, "cannot write output file '" + path + "'");
    }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"nuqet: quantum estimation of the neutrino mixing angle"};
    app.require_subcommand(1);

    CommonArgs report_common;
    PointArgs report_point;
    std::uint64_t measurements = 1;
    auto *report = app.add_subcommand("report", "QFI, SLD, FI and Cramer-Rao bounds at one point");
    add_common(report, report_common);
    add_point(report, report_point);
    report->add_option("--measurements", measurements, "number of repetitions M")
        ->check(CLI::PositiveNumber);

    CommonArgs figure_common;
    std::string figure_name;
    std::size_t figure_points = 4001;
    std::string tau_max = "4pi";
    auto *figure = app.add_subcommand("figure", "data series behind fig1..fig4");
    figure->add_option("name", figure_name, "fig1, fig2, fig3 or fig4")->required();
    add_common(figure, figure_common);
    figure->add_option("--points", figure_points, "grid points over [0, tau_max]");
    figure->add_option("--tau-max", tau_max, "upper end of the tau grid");

    CommonArgs sweep_common;
    PointArgs sweep_point;
    std::string sweep_var = "tau";
    std::string sweep_start = "0";
    std::string sweep_stop = "4pi";
    std::size_t sweep_points = 401;
    std::string quantities = "qfi,fi_flavor,fi_mass,log_negativity,purity,survival_probability";
    unsigned jobs = 1;
    auto *sweep = app.add_subcommand("sweep", "tabulate quantities along one parameter");
    add_common(sweep, sweep_common);
    add_point(sweep, sweep_point);
    sweep->add_option("--var", sweep_var, "tau, theta or lambda_ratio");
    sweep->add_option("--start", sweep_start, "first grid value");
    sweep->add_option("--stop", sweep_stop, "last grid value");
    sweep->add_option("--points", sweep_points, "number of grid points");
    sweep->add_option("--quantities", quantities, "comma-separated quantity names");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 64u));

    SelfcheckOptions selfcheck_options;
    auto *selfcheck = app.add_subcommand("selfcheck", "analytic vs numerical cross-checks");
    selfcheck->add_option("--seed", selfcheck_options.seed, "seed for random measurements");
    selfcheck->add_option("--perturb", selfcheck_options.perturb,
                          "offset added to every error (testing aid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitValidation;
    }

    try {
        std::ostringstream buffer;
        std::string path = "-";
        if (report->parsed()) {
            ReportOptions options;
            options.point = point_of(report_common, report_point);
            options.measurements = measurements;
            options.format = parse_format(report_common.format);
            write_report(options, buffer);
            path = report_common.out;
        } else if (figure->parsed()) {
            FigureOptions options;
            if (figure_common.theta) {
                options.theta = parse_angle(*figure_common.theta);
            }
            options.preset = parse_preset(figure_common.preset);
            options.presets = presets_of(figure_common);
            options.tau_max = parse_angle(tau_max);
            if (!(options.tau_max > 0.0)) {
                throw Error(ErrorCode::InvalidArgument, "--tau-max must be positive");
            }
            options.points = figure_points;
            options.basis = parse_basis(figure_common.basis);
            options.format = parse_format(figure_common.format);
            write_figure(parse_figure(figure_name), options, buffer);
            path = figure_common.out;
        } else if (sweep->parsed()) {
            SweepOptions options;
            options.spec.variable = parse_sweep_variable(sweep_var);
            options.spec.start = parse_angle(sweep_start);
            options.spec.stop = parse_angle(sweep_stop);
            options.spec.points = sweep_points;
            options.base = point_of(sweep_common, sweep_point);
            if (options.spec.variable == SweepVariable::LambdaRatio && !sweep_point.model) {
                options.base.model = ModelKind::Decoherence;
            }
            options.quantities = parse_quantities(quantities);
            options.format = parse_format(sweep_common.format);
            options.jobs = jobs;
            write_sweep(options, buffer);
            path = sweep_common.out;
        } else {
            const bool ok = write_selfcheck(selfcheck_options, buffer);
            out << buffer.str();
            return ok ? kExitOk : kExitNumerical;
        }
        emit(buffer.str(), path, out);
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return is_numerical_failure(e.code()) ? kExitNumerical : kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace nuqet::app
