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

#include "nuqet/app/commands.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace nuqet::app {

namespace {

constexpr const char *kRatioLabels[] = {"0", "0.1", "1", "10"};

std::vector<double> tau_grid(const FigureOptions &options) {
    const double tau_max = options.tau_max > 0.0 ? options.tau_max : 4.0 * std::numbers::pi;
    if (options.points < 2 || options.points > 1000000) {
        throw Error(ErrorCode::InvalidArgument, "figure needs between 2 and 1e6 points");
    }
    std::vector<double> grid(options.points);
    const double last = static_cast<double>(options.points - 1);
    for (std::size_t i = 0; i < options.points; ++i) {
        grid[i] = tau_max * static_cast<double>(i) / last;
    }
    return grid;
}

double figure_theta(const FigureOptions &options) {
    return options.theta ? *options.theta : resolve_preset(options.preset, options.presets);
}

ModelPoint figure_point(double theta, double tau, double ratio, ModeBasis::Kind basis) {
    ModelPoint point;
    point.theta = theta;
    point.tau = tau;
    point.lambda_ratio = ratio;
    point.model = ratio == 0.0 ? ModelKind::PlaneWave : ModelKind::Decoherence;
    point.basis = basis;
    return point;
}

double single(const ModelPoint &point, Quantity quantity) {
    return evaluate(point, {quantity}).front();
}

const char *basis_name(ModeBasis::Kind basis) {
    return basis == ModeBasis::Kind::Flavor ? "flavor" : "mass";
}

Table fig1(const FigureOptions &options) {
    std::vector<std::pair<std::string, double>> angles = {{"pi8", std::numbers::pi / 8.0}};
    if (options.preset == ThetaPreset::Experimental || options.presets.theta_experimental) {
        angles.emplace_back("experimental", resolve_preset(ThetaPreset::Experimental,
                                                           options.presets));
    }
    if (options.theta) {
        angles.emplace_back("theta", *options.theta);
    }

    Table table;
    table.comments.push_back("figure fig1: flavor-measurement FI vs QFI, plane-wave model");
    table.comments.push_back("tau = delta t (dimensionless oscillation phase)");
    table.columns.push_back("tau");
    for (const auto &[name, theta] : angles) {
        table.comments.push_back("fi_" + name + ": theta = " + format_double(theta) + " rad");
        table.columns.push_back("fi_" + name);
    }
    table.comments.push_back("qfi: quantum Fisher information at theta = pi/8");
    table.columns.push_back("qfi");

    for (double tau : tau_grid(options)) {
        std::vector<double> row = {tau};
        for (const auto &angle : angles) {
            row.push_back(single(figure_point(angle.second, tau, 0.0, options.basis),
                                 Quantity::FiFlavor));
        }
        row.push_back(single(figure_point(angles.front().second, tau, 0.0, options.basis),
                             Quantity::Qfi));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table fig2(const FigureOptions &options) {
    const double theta = figure_theta(options);
    Table table;
    table.comments.push_back("figure fig2: flavor FI vs scaled entanglement entropy, plane wave");
    table.comments.push_back("theta = " + format_double(theta) + " rad; mode basis " +
                             basis_name(options.basis));
    table.comments.push_back("tau = delta t; entropy_scaled = 4 x von Neumann entropy (bits)");
    table.columns = {"tau", "fi_flavor", "entropy_scaled"};
    for (double tau : tau_grid(options)) {
        const auto values = evaluate(figure_point(theta, tau, 0.0, options.basis),
                                     {Quantity::FiFlavor, Quantity::EntropyScaled});
        table.rows.push_back({tau, values[0], values[1]});
    }
    return table;
}

Table fig3(const FigureOptions &options) {
    const double theta = figure_theta(options);
    Table table;
    table.comments.push_back("figure fig3: flavor FI for lambda/delta in {0, 0.1, 1, 10}");
    table.comments.push_back("theta = " + format_double(theta) + " rad; tau = delta t");
    table.comments.push_back("qfi: quantum Fisher information of the lambda = delta state");
    table.columns.push_back("tau");
    for (const char *label : kRatioLabels) {
        table.columns.push_back(std::string("fi_lambda_") + label);
    }
    table.columns.push_back("qfi");
    for (double tau : tau_grid(options)) {
        std::vector<double> row = {tau};
        for (double ratio : kFigureLambdaRatios) {
            row.push_back(single(figure_point(theta, tau, ratio, options.basis),
                                 Quantity::FiFlavor));
        }
        row.push_back(single(figure_point(theta, tau, 1.0, options.basis), Quantity::Qfi));
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table fig4(const FigureOptions &options) {
    const double theta = figure_theta(options);
    Table table;
    table.comments.push_back("figure fig4: flavor FI vs logarithmic negativity, lambda/delta in "
                             "{0.1, 1}");
    table.comments.push_back("theta = " + format_double(theta) + " rad; mode basis " +
                             basis_name(options.basis) + "; tau = delta t");
    table.comments.push_back("logneg_scaled = 4 x log negativity (same maximum as the QFI)");
    table.columns.push_back("tau");
    for (std::size_t k = 1; k <= 2; ++k) {
        const std::string label = kRatioLabels[k];
        table.columns.push_back("fi_lambda_" + label);
        table.columns.push_back("logneg_lambda_" + label);
        table.columns.push_back("logneg_scaled_lambda_" + label);
    }
    for (double tau : tau_grid(options)) {
        std::vector<double> row = {tau};
        for (std::size_t k = 1; k <= 2; ++k) {
            const auto values =
                evaluate(figure_point(theta, tau, kFigureLambdaRatios[k], options.basis),
                         {Quantity::FiFlavor, Quantity::LogNegativity});
            row.push_back(values[0]);
            row.push_back(values[1]);
            row.push_back(4.0 * values[1]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

const char *variable_name(SweepVariable variable) {
    switch (variable) {
    case SweepVariable::Tau: return "tau";
    case SweepVariable::Theta: return "theta";
    case SweepVariable::LambdaRatio: return "lambda_ratio";
    }
    return "?";
}

nlohmann::ordered_json json_number(double value) {
    return std::isfinite(value) ? nlohmann::ordered_json(value) : nlohmann::ordered_json();
}

} // namespace

void write_report(const ReportOptions &options, std::ostream &out) {
    const ModelPoint &point = options.point;
    point.validate();
    const DensityMatrix rho = point.state();
    const Matrix sld = sld_spectral(rho, point.derivative());
    const std::vector<Povm> povms = {flavor_povm(point.theta), mass_povm(),
                                     eigenprojector_povm(sld)};
    const std::vector<std::string> names = {"flavor", "mass", "optimal"};
    const EstimationReport report =
        estimate(point.family(), point.theta, povms, names, options.measurements);

    if (options.format == Format::Json) {
        nlohmann::ordered_json doc;
        doc["model"] = model_name(point.model);
        doc["theta"] = point.theta;
        doc["tau"] = point.tau;
        doc["lambda_ratio"] = point.lambda_ratio;
        doc["measurements"] = options.measurements;
        doc["qfi"] = report.qfi;
        auto sld_rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < report.sld.dim(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (std::size_t j = 0; j < report.sld.dim(); ++j) {
                row.push_back({report.sld(i, j).real(), report.sld(i, j).imag()});
            }
            sld_rows.push_back(std::move(row));
        }
        doc["sld"] = std::move(sld_rows);
        for (const auto &name : names) {
            doc["fi"][name] = report.per_povm_fi.at(name);
        }
        doc["cramer_rao"]["quantum"] = report.quantum_cramer_rao;
        for (const auto &name : names) {
            doc["cramer_rao"][name] = json_number(report.cramer_rao.at(name));
        }
        out << doc.dump(2) << '\n';
        return;
    }

    out << "# nuqet report: model " << model_name(point.model) << ", theta "
        << format_double(point.theta) << ", tau " << format_double(point.tau)
        << ", lambda_ratio " << format_double(point.lambda_ratio) << ", measurements "
        << options.measurements << '\n';
    out << "quantity,value\n";
    out << "qfi," << format_double(report.qfi) << '\n';
    for (const auto &name : names) {
        out << "fi_" << name << ',' << format_double(report.per_povm_fi.at(name)) << '\n';
    }
    out << "crb_quantum," << format_double(report.quantum_cramer_rao) << '\n';
    for (const auto &name : names) {
        out << "crb_" << name << ',' << format_double(report.cramer_rao.at(name)) << '\n';
    }
    for (std::size_t i = 0; i < report.sld.dim(); ++i) {
        for (std::size_t j = 0; j < report.sld.dim(); ++j) {
            out << "sld_" << i << j << "_re," << format_double(report.sld(i, j).real()) << '\n';
            out << "sld_" << i << j << "_im," << format_double(report.sld(i, j).imag()) << '\n';
        }
    }
}

FigureId parse_figure(const std::string &text) {
    if (text == "fig1") return FigureId::Fig1;
    if (text == "fig2") return FigureId::Fig2;
    if (text == "fig3") return FigureId::Fig3;
    if (text == "fig4") return FigureId::Fig4;
    throw Error(ErrorCode::InvalidArgument, "unknown figure '" + text + "' (fig1..fig4)");
}

Table figure_table(FigureId which, const FigureOptions &options) {
    switch (which) {
    case FigureId::Fig1: return fig1(options);
    case FigureId::Fig2: return fig2(options);
    case FigureId::Fig3: return fig3(options);
    case FigureId::Fig4: return fig4(options);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown figure");
}

void write_figure(FigureId which, const FigureOptions &options, std::ostream &out) {
    write_table(figure_table(which, options), options.format, out);
}

SweepVariable parse_sweep_variable(const std::string &text) {
    if (text == "tau") return SweepVariable::Tau;
    if (text == "theta") return SweepVariable::Theta;
    if (text == "lambda_ratio") return SweepVariable::LambdaRatio;
    throw Error(ErrorCode::InvalidArgument,
                "unknown sweep variable '" + text + "' (tau|theta|lambda_ratio)");
}

void SweepSpec::validate() const {
    if (!(start < stop) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs start < stop");
    }
    if (points < 2 || points > 1000000) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs between 2 and 1e6 points");
    }
}

double SweepSpec::at(std::size_t index) const {
    if (index + 1 == points) {
        return stop;
    }
    return start + (stop - start) * static_cast<double>(index) /
                       static_cast<double>(points - 1);
}

Table sweep_table(const SweepOptions &options) {
    options.spec.validate();
    if (options.quantities.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no quantities requested");
    }
    if (options.spec.variable == SweepVariable::LambdaRatio &&
        options.base.model == ModelKind::PlaneWave) {
        throw Error(ErrorCode::InvalidArgument,
                    "sweeping lambda_ratio requires the decoherence model");
    }

    const std::size_t n = options.spec.points;
    std::vector<std::vector<double>> rows(n);
    std::vector<std::exception_ptr> failures(n);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride) {
            ModelPoint point = options.base;
            const double x = options.spec.at(i);
            switch (options.spec.variable) {
            case SweepVariable::Tau: point.tau = x; break;
            case SweepVariable::Theta: point.theta = x; break;
            case SweepVariable::LambdaRatio: point.lambda_ratio = x; break;
            }
            try {
                rows[i] = evaluate(point, options.quantities);
                rows[i].insert(rows[i].begin(), x);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, 64));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            workers.emplace_back(work, j, jobs);
        }
    }
    for (const auto &failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    Table table;
    const ModelPoint &base = options.base;
    table.comments.push_back("sweep over " + std::string(variable_name(options.spec.variable)) +
                             "; model " + model_name(base.model));
    table.comments.push_back("base point: theta " + format_double(base.theta) + ", tau " +
                             format_double(base.tau) + ", lambda_ratio " +
                             format_double(base.lambda_ratio) + ", basis " +
                             basis_name(base.basis));
    table.columns.push_back(variable_name(options.spec.variable));
    for (Quantity quantity : options.quantities) {
        table.columns.push_back(quantity_name(quantity));
    }
    table.rows = std::move(rows);
    return table;
}

void write_sweep(const SweepOptions &options, std::ostream &out) {
    write_table(sweep_table(options), options.format, out);
}

} // namespace nuqet::app
