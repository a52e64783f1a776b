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
 * Quantum estimation theory for one real parameter: outcome probabilities,
 * classical and quantum Fisher information, the symmetric logarithmic
 * derivative (SLD) and the Cramer-Rao bound.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nuqet/linalg.hpp"

namespace nuqet {

/// Hermitian, unit-trace, positive-semidefinite matrix (all within 1e-10).
class DensityMatrix {
  public:
    /// Validates the invariants; throws InvalidState or NotHermitian.
    explicit DensityMatrix(const Matrix &m);

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    /// Tr[rho^2]
    [[nodiscard]] double purity() const;

  private:
    Matrix m_;
};

/// Ordered positive operators summing to the identity, one label per outcome.
class Povm {
  public:
    Povm(std::vector<Matrix> elements, std::vector<std::string> labels);

    [[nodiscard]] const std::vector<Matrix> &elements() const noexcept { return elements_; }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return elements_.front().dim(); }

  private:
    std::vector<Matrix> elements_;
    std::vector<std::string> labels_;
};

/// A one-parameter family rho(lambda) with an optional analytic derivative.
struct StateFamily {
    std::function<DensityMatrix(double)> state_at;
    std::optional<std::function<Matrix(double)>> derivative_at;
    double fd_step = 1e-5;
    double domain_min = -std::numeric_limits<double>::infinity();
    double domain_max = std::numeric_limits<double>::infinity();
};

struct EstimationReport {
    double parameter = 0.0;
    double qfi = 0.0;
    Matrix sld{1};
    std::map<std::string, double> per_povm_fi;
    /// 1/(M F) per POVM; +inf where F = 0.
    std::map<std::string, double> cramer_rao;
    /// 1/(M H), the quantum limit.
    double quantum_cramer_rao = 0.0;
    std::uint64_t measurement_count = 1;
};

/// p(x) = Tr[rho Pi_x], clamped to [0, 1].
std::vector<double> outcome_probabilities(const DensityMatrix &rho, const Povm &povm);

/// sum_x (dp_x)^2 / p_x, for outcome sets that do not depend on the parameter.
double classical_fisher(std::span<const double> probs, std::span<const double> dprobs);

/// Eigenvalue sums below this are treated as kernel directions of rho.
inline constexpr double kKernelThreshold = 1e-12;

/**
 * SLD by the spectral formula in the eigenbasis of rho:
 * L = 2 sum_{m,n} <psi_m|drho|psi_n> / (a_m + a_n) |psi_m><psi_n|,
 * restricted to a_m + a_n >= kKernelThreshold.
 *
 * Throws KernelObstruction when drho has an element above 1e-8 on a dropped
 * pair (no SLD vanishing on the kernel exists), InvalidDerivative when drho
 * is not traceless within 1e-8.
 */
Matrix sld_spectral(const DensityMatrix &rho, const Matrix &drho);

/**
 * SLD by composite Simpson quadrature of 2 int_0^s_max e^{-rho s} drho e^{-rho s} ds,
 * one panel being one Simpson interval with a midpoint node. Independent of
 * sld_spectral apart from sharing the eigen-decomposition used to
 * exponentiate rho.
 */
Matrix sld_integral(const DensityMatrix &rho, const Matrix &drho, double s_max,
                    std::size_t panels);

/// As above with s_max = 50 / smallest positive eigenvalue and
/// panels = max(1e4, 1e4 * largest / smallest positive eigenvalue).
Matrix sld_integral(const DensityMatrix &rho, const Matrix &drho);

/**
 * Quantum Fisher information 2 sum |<psi_n|drho|psi_m>|^2 / (a_n + a_m).
 *
 * Cross-checks the result against Tr[rho L^2] and Tr[drho L] and throws
 * NumericalInconsistency if any of them differ by more than 1e-9.
 */
double qfi(const DensityMatrix &rho, const Matrix &drho);

/// F = sum_x [Re Tr(rho Pi_x L)]^2 / Tr[rho Pi_x].
double fisher_information(const DensityMatrix &rho, const Matrix &sld, const Povm &povm);

/// Variance lower bound 1/(M F).
double cramer_rao_bound(double fisher, std::uint64_t measurement_count);

/// Central difference (rho(l + h) - rho(l - h)) / 2h.
Matrix finite_difference_derivative(const StateFamily &family, double lambda);

/// Analytic derivative when registered, central difference otherwise.
Matrix state_derivative(const StateFamily &family, double lambda);

/// Projectors onto the eigenspaces of a Hermitian operator (clusters closer
/// than 1e-9 merged), labelled "eig0", "eig1", ...
Povm eigenprojector_povm(const Matrix &observable);

/// Rank-1 projective measurement in a Haar-random orthonormal basis.
Povm random_projective_povm(std::size_t dim, std::mt19937_64 &rng);

/**
 * Full estimation report at one parameter value: QFI, SLD (spectral route),
 * the FI of each POVM via the SLD formula and the Cramer-Rao bounds.
 */
EstimationReport estimate(const StateFamily &family, double lambda,
                          const std::vector<Povm> &povms,
                          const std::vector<std::string> &povm_names,
                          std::uint64_t measurement_count);

} // namespace nuqet
