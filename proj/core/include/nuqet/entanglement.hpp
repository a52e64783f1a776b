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
 * Mode (occupation-number) entanglement of a single neutrino: the state is
 * mapped into the single-excitation sector of two qubits, |mode 0> -> |10>,
 * |mode 1> -> |01>, and bipartite measures are evaluated on that embedding.
 */
#pragma once

#include <cstddef>

#include "nuqet/linalg.hpp"
#include "nuqet/qet.hpp"

namespace nuqet {

/// Which single-particle basis defines the two modes.
struct ModeBasis {
    enum class Kind { Mass, Flavor };

    Kind kind = Kind::Mass;
    /// Mixing angle; only read for Flavor.
    double theta = 0.0;

    static ModeBasis mass() noexcept { return {Kind::Mass, 0.0}; }
    static ModeBasis flavor(double theta) noexcept { return {Kind::Flavor, theta}; }
};

/// 4x4 density matrix supported on span{|01>, |10>}.
class TwoQubitState {
  public:
    /// Throws InvalidState if support leaks outside the single-excitation sector.
    explicit TwoQubitState(const DensityMatrix &rho);

    [[nodiscard]] const DensityMatrix &state() const noexcept { return rho_; }
    [[nodiscard]] const Matrix &matrix() const noexcept { return rho_.matrix(); }

  private:
    DensityMatrix rho_;
};

/// Rotates into the requested mode basis (U rho U^T for Flavor) and embeds.
TwoQubitState embed_occupation(const DensityMatrix &rho, const ModeBasis &basis);

/// Partial trace keeping qubit `keep` (0 = left); basis order {|0>, |1>}.
DensityMatrix reduced_state(const TwoQubitState &rho4, std::size_t keep);

/// -Tr[rho log2 rho] with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);

/**
 * 4 x entropy of the left-mode reduced state, so the maximum (1 ebit) matches
 * the QFI value 4. Only defined for pure embedded states; mixed inputs raise
 * MixedStateUnsupported (use log_negativity there).
 */
double scaled_entanglement_entropy(const DensityMatrix &rho, const ModeBasis &basis);

/// Sum of |negative eigenvalues| of the partial transpose, (||rho^T1||_1 - 1) / 2.
double negativity(const TwoQubitState &rho4);

/// log2(2N + 1) = log2 ||rho^T1||_1.
double log_negativity(const TwoQubitState &rho4);

} // namespace nuqet
