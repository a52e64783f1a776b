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

#include "nuqet/qet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace nuqet {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kKernelElementTol = 1e-8;
constexpr double kTracelessTol = 1e-8;
constexpr double kZeroProbability = 1e-14;
constexpr double kSingularNumerator = 1e-7;

std::string fmt(double value) {
    std::ostringstream os;
    os.precision(3);
    os << value;
    return os.str();
}

void require_valid_derivative(const DensityMatrix &rho, const Matrix &drho) {
    require_same_dim(rho.matrix(), drho, "state derivative");
    require_hermitian(drho, "state derivative");
    const double tr = std::abs(trace(drho));
    if (tr > kTracelessTol) {
        throw Error(ErrorCode::InvalidDerivative,
                    "state derivative has trace " + fmt(tr) + ", expected 0");
    }
}

// drho expressed in the eigenbasis of rho.
Matrix eigenbasis_elements(const HermitianEigensystem &eig, const Matrix &drho) {
    return eig.vectors.adjoint() * drho * eig.vectors;
}

// The SLD exists in the form used here only if drho vanishes on kernel pairs.
void check_kernel(const HermitianEigensystem &eig, const Matrix &elements) {
    const std::size_t n = eig.dim();
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            if (eig.values[m] + eig.values[k] < kKernelThreshold &&
                std::abs(elements(m, k)) > kKernelElementTol) {
                throw Error(ErrorCode::KernelObstruction,
                            "state derivative has element " +
                                fmt(std::abs(elements(m, k))) +
                                " on the kernel of rho");
            }
        }
    }
}

Matrix hermitian_part(const Matrix &m) { return 0.5 * (m + m.adjoint()); }

} // namespace

DensityMatrix::DensityMatrix(const Matrix &m) : m_(m) {
    require_hermitian(m_, "density matrix");
    const Complex tr = trace(m_);
    if (std::abs(tr - 1.0) > kStateTol) {
        throw Error(ErrorCode::InvalidState,
                    "density matrix trace " + fmt(tr.real()) + " differs from 1");
    }
    const auto eig = hermitian_eigen(m_);
    if (eig.values.front() < -kStateTol) {
        throw Error(ErrorCode::InvalidState, "density matrix has negative eigenvalue " +
                                                 fmt(eig.values.front()));
    }
}

double DensityMatrix::purity() const { return trace(m_ * m_).real(); }

Povm::Povm(std::vector<Matrix> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) {
        throw Error(ErrorCode::InvalidPovm, "POVM has no elements");
    }
    if (labels_.size() != elements_.size()) {
        throw Error(ErrorCode::InvalidPovm, "POVM needs one label per element");
    }
    const std::size_t n = elements_.front().dim();
    Matrix sum(n);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        const Matrix &element = elements_[k];
        require_same_dim(element, elements_.front(), "POVM element");
        if (!is_hermitian(element)) {
            throw Error(ErrorCode::InvalidPovm, "element " + labels_[k] + " not Hermitian");
        }
        if (hermitian_eigen(element).values.front() < -kStateTol) {
            throw Error(ErrorCode::InvalidPovm, "element " + labels_[k] + " not positive");
        }
        sum += element;
    }
    if (frobenius_norm(sum - Matrix::identity(n)) > kStateTol) {
        throw Error(ErrorCode::InvalidPovm, "POVM elements do not sum to identity");
    }
}

std::vector<double> outcome_probabilities(const DensityMatrix &rho, const Povm &povm) {
    if (rho.dim() != povm.dim()) {
        throw Error(ErrorCode::DimMismatch, "state and POVM dimensions differ");
    }
    std::vector<double> probs;
    probs.reserve(povm.size());
    double total = 0.0;
    for (const auto &element : povm.elements()) {
        const double p = trace(rho.matrix() * element).real();
        if (p < -kStateTol || p > 1.0 + kStateTol) {
            throw Error(ErrorCode::NumericalInconsistency,
                        "outcome probability " + fmt(p) + " outside [0, 1]");
        }
        probs.push_back(std::clamp(p, 0.0, 1.0));
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::NumericalInconsistency, "probabilities sum to " + fmt(total));
    }
    return probs;
}

double classical_fisher(std::span<const double> probs, std::span<const double> dprobs) {
    if (probs.size() != dprobs.size()) {
        throw Error(ErrorCode::DimMismatch, "probabilities and derivatives differ in length");
    }
    double fisher = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (probs[x] < -kStateTol) {
            throw Error(ErrorCode::InvalidArgument, "negative probability " + fmt(probs[x]));
        }
        if (probs[x] < kZeroProbability) {
            if (std::abs(dprobs[x]) >= kSingularNumerator) {
                throw Error(ErrorCode::SingularOutcome,
                            "outcome " + std::to_string(x) +
                                " has zero probability but nonzero derivative");
            }
            continue;
        }
        fisher += dprobs[x] * dprobs[x] / probs[x];
    }
    return fisher;
}

Matrix sld_spectral(const DensityMatrix &rho, const Matrix &drho) {
    require_valid_derivative(rho, drho);
    const auto eig = hermitian_eigen(rho.matrix());
    const Matrix elements = eigenbasis_elements(eig, drho);
    check_kernel(eig, elements);

    const std::size_t n = eig.dim();
    Matrix in_eigenbasis(n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            const double denom = eig.values[m] + eig.values[k];
            if (denom >= kKernelThreshold) {
                in_eigenbasis(m, k) = 2.0 * elements(m, k) / denom;
            }
        }
    }
    return hermitian_part(eig.vectors * in_eigenbasis * eig.vectors.adjoint());
}

Matrix sld_integral(const DensityMatrix &rho, const Matrix &drho, double s_max,
                    std::size_t panels) {
    if (!(s_max > 0.0) || !std::isfinite(s_max) || panels == 0) {
        throw Error(ErrorCode::BadQuadrature, "quadrature needs s_max > 0 and panels > 0");
    }
    require_valid_derivative(rho, drho);
    const auto eig = hermitian_eigen(rho.matrix());
    const Matrix elements = eigenbasis_elements(eig, drho);
    check_kernel(eig, elements);

    // In the eigenbasis of rho the integrand is elementwise:
    // <m|e^{-rho s} drho e^{-rho s}|n> = drho_mn e^{-(alpha_m + alpha_n) s},
    // so the rule only needs the scalar weights for each eigenvalue pair.
    const std::size_t n = eig.dim();
    std::array<double, 16> weights{};
    std::array<double, 4> decay{};
    auto accumulate = [&](double s, double factor) {
        for (std::size_t k = 0; k < n; ++k) {
            decay[k] = std::exp(-eig.values[k] * s);
        }
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = 0; k < n; ++k) {
                weights[m * n + k] += factor * decay[m] * decay[k];
            }
        }
    };

    const double h = s_max / static_cast<double>(panels);
    accumulate(0.0, 1.0);
    accumulate(s_max, 1.0);
    for (std::size_t j = 1; j < panels; ++j) {
        accumulate(h * static_cast<double>(j), 2.0);
    }
    for (std::size_t j = 0; j < panels; ++j) {
        accumulate(h * (static_cast<double>(j) + 0.5), 4.0);
    }

    Matrix in_eigenbasis(n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            in_eigenbasis(m, k) = elements(m, k) * (2.0 * h / 6.0 * weights[m * n + k]);
        }
    }
    const Matrix sld = eig.vectors * in_eigenbasis * eig.vectors.adjoint();
    return hermitian_part(sld);
}

Matrix sld_integral(const DensityMatrix &rho, const Matrix &drho) {
    const auto eig = hermitian_eigen(rho.matrix());
    double smallest = 0.0;
    for (double value : eig.values) {
        if (value > kKernelThreshold) {
            smallest = value;
            break;
        }
    }
    const double largest = eig.values.back();
    constexpr double kBasePanels = 1e4;
    constexpr double kMaxPanels = 1e8;
    const double panels = std::ceil(std::max(kBasePanels, kBasePanels * largest / smallest));
    if (panels > kMaxPanels) {
        throw Error(ErrorCode::BadQuadrature,
                    "state too ill-conditioned for the default quadrature (eigenvalue ratio " +
                        fmt(largest / smallest) + ")");
    }
    return sld_integral(rho, drho, 50.0 / smallest, static_cast<std::size_t>(panels));
}

double qfi(const DensityMatrix &rho, const Matrix &drho) {
    require_valid_derivative(rho, drho);
    const auto eig = hermitian_eigen(rho.matrix());
    const Matrix elements = eigenbasis_elements(eig, drho);
    check_kernel(eig, elements);

    double spectral = 0.0;
    const std::size_t n = eig.dim();
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            const double denom = eig.values[m] + eig.values[k];
            if (denom >= kKernelThreshold) {
                spectral += 2.0 * std::norm(elements(m, k)) / denom;
            }
        }
    }

    const Matrix sld = sld_spectral(rho, drho);
    const double via_square = trace(rho.matrix() * sld * sld).real();
    const double via_derivative = trace(drho * sld).real();
    const double tol = 1e-9 * std::max(1.0, spectral);
    if (std::abs(via_square - spectral) > tol || std::abs(via_derivative - spectral) > tol) {
        throw Error(ErrorCode::NumericalInconsistency,
                    "QFI routes disagree: spectral " + fmt(spectral) + ", Tr[rho L^2] " +
                        fmt(via_square) + ", Tr[drho L] " + fmt(via_derivative));
    }
    return spectral;
}

double fisher_information(const DensityMatrix &rho, const Matrix &sld, const Povm &povm) {
    if (rho.dim() != povm.dim()) {
        throw Error(ErrorCode::DimMismatch, "state and POVM dimensions differ");
    }
    require_same_dim(rho.matrix(), sld, "SLD");
    require_hermitian(sld, "SLD");

    double fisher = 0.0;
    for (std::size_t x = 0; x < povm.size(); ++x) {
        const Matrix rho_pi = rho.matrix() * povm.elements()[x];
        const double p = trace(rho_pi).real();
        const double numerator = trace(rho_pi * sld).real();
        if (p < kZeroProbability) {
            if (std::abs(numerator) >= kSingularNumerator) {
                throw Error(ErrorCode::SingularOutcome,
                            "outcome " + povm.labels()[x] +
                                " has zero probability but nonzero sensitivity");
            }
            continue;
        }
        fisher += numerator * numerator / p;
    }
    return fisher;
}

double cramer_rao_bound(double fisher, std::uint64_t measurement_count) {
    if (!(fisher > 0.0) || !std::isfinite(fisher)) {
        throw Error(ErrorCode::NonpositiveFisher,
                    "Cramer-Rao bound needs positive Fisher information, got " + fmt(fisher));
    }
    if (measurement_count == 0) {
        throw Error(ErrorCode::InvalidArgument, "measurement count must be at least 1");
    }
    return 1.0 / (static_cast<double>(measurement_count) * fisher);
}

Matrix finite_difference_derivative(const StateFamily &family, double lambda) {
    const double h = family.fd_step;
    if (!(h > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
    }
    if (lambda - h < family.domain_min || lambda + h > family.domain_max) {
        throw Error(ErrorCode::DomainEdge, "parameter " + fmt(lambda) +
                                               " too close to the family domain edge");
    }
    const Matrix forward = family.state_at(lambda + h).matrix();
    const Matrix backward = family.state_at(lambda - h).matrix();
    return (forward - backward) * (1.0 / (2.0 * h));
}

Matrix state_derivative(const StateFamily &family, double lambda) {
    if (family.derivative_at) {
        return (*family.derivative_at)(lambda);
    }
    return finite_difference_derivative(family, lambda);
}

Povm eigenprojector_povm(const Matrix &observable) {
    const auto eig = hermitian_eigen(observable);
    const double gap = 1e-9 * std::max(1.0, frobenius_norm(observable));
    const std::size_t n = eig.dim();

    std::vector<Matrix> elements;
    std::vector<std::string> labels;
    std::size_t k = 0;
    while (k < n) {
        Matrix projector(n);
        std::size_t end = k;
        while (end < n && eig.values[end] - eig.values[k] < gap) {
            const auto v = eig.vector(end);
            projector += Matrix::outer(v, v);
            ++end;
        }
        labels.push_back("eig" + std::to_string(elements.size()));
        elements.push_back(projector);
        k = end;
    }
    return Povm(std::move(elements), std::move(labels));
}

Povm random_projective_povm(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix basis(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            basis(i, j) = Complex(re, im);
        }
    }
    // Gram-Schmidt on Gaussian columns gives a Haar-distributed basis.
    for (std::size_t k = 0; k < dim; ++k) {
        auto col = basis.column(k);
        for (std::size_t j = 0; j < k; ++j) {
            const auto prev = basis.column(j);
            const Complex overlap = inner(prev, col);
            for (std::size_t i = 0; i < dim; ++i) {
                col[i] -= overlap * prev[i];
            }
        }
        const double norm = std::sqrt(std::real(inner(col, col)));
        for (std::size_t i = 0; i < dim; ++i) {
            basis(i, k) = col[i] / norm;
        }
    }

    std::vector<Matrix> elements;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < dim; ++k) {
        const auto v = basis.column(k);
        elements.push_back(hermitian_part(Matrix::outer(v, v)));
        labels.push_back("r" + std::to_string(k));
    }
    return Povm(std::move(elements), std::move(labels));
}

EstimationReport estimate(const StateFamily &family, double lambda,
                          const std::vector<Povm> &povms,
                          const std::vector<std::string> &povm_names,
                          std::uint64_t measurement_count) {
    if (povms.size() != povm_names.size()) {
        throw Error(ErrorCode::InvalidArgument, "one name per POVM required");
    }
    if (measurement_count == 0) {
        throw Error(ErrorCode::InvalidArgument, "measurement count must be at least 1");
    }
    const DensityMatrix rho = family.state_at(lambda);
    const Matrix drho = state_derivative(family, lambda);

    EstimationReport report;
    report.parameter = lambda;
    report.measurement_count = measurement_count;
    report.sld = sld_spectral(rho, drho);
    report.qfi = qfi(rho, drho);
    report.quantum_cramer_rao = cramer_rao_bound(report.qfi, measurement_count);

    for (std::size_t k = 0; k < povms.size(); ++k) {
        const double fi = fisher_information(rho, report.sld, povms[k]);
        if (fi > report.qfi + 1e-8) {
            throw Error(ErrorCode::NumericalInconsistency,
                        "FI of " + povm_names[k] + " exceeds the QFI");
        }
        report.per_povm_fi[povm_names[k]] = fi;
        report.cramer_rao[povm_names[k]] =
            fi > 0.0 ? cramer_rao_bound(fi, measurement_count)
                     : std::numeric_limits<double>::infinity();
    }
    return report;
}

} // namespace nuqet
