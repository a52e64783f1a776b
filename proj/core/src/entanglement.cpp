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

#include "nuqet/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "nuqet/neutrino.hpp"

namespace nuqet {

namespace {

constexpr std::size_t kTen = 2; // |10>
constexpr std::size_t kOne = 1; // |01>

bool in_single_excitation_sector(std::size_t index) { return index == kTen || index == kOne; }

} // namespace

TwoQubitState::TwoQubitState(const DensityMatrix &rho) : rho_(rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorCode::UnsupportedDim, "two-qubit state must be 4x4");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if ((!in_single_excitation_sector(i) || !in_single_excitation_sector(j)) &&
                std::abs(rho.matrix()(i, j)) > 1e-10) {
                throw Error(ErrorCode::InvalidState,
                            "state has support outside the single-excitation sector");
            }
        }
    }
}

TwoQubitState embed_occupation(const DensityMatrix &rho, const ModeBasis &basis) {
    if (rho.dim() != 2) {
        throw Error(ErrorCode::DimMismatch, "mode embedding needs a 2x2 state");
    }
    Matrix modes = rho.matrix();
    if (basis.kind == ModeBasis::Kind::Flavor) {
        const Matrix u = mixing_matrix(basis.theta);
        modes = u * modes * u.transpose();
    }
    Matrix embedded(4);
    embedded(kTen, kTen) = modes(0, 0);
    embedded(kTen, kOne) = modes(0, 1);
    embedded(kOne, kTen) = modes(1, 0);
    embedded(kOne, kOne) = modes(1, 1);
    return TwoQubitState(DensityMatrix(embedded));
}

DensityMatrix reduced_state(const TwoQubitState &rho4, std::size_t keep) {
    if (keep > 1) {
        throw Error(ErrorCode::InvalidArgument, "kept subsystem must be 0 or 1");
    }
    const Matrix &m = rho4.matrix();
    Matrix reduced(2);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t traced = 0; traced < 2; ++traced) {
                const std::size_t row = keep == 0 ? (a << 1) | traced : (traced << 1) | a;
                const std::size_t col = keep == 0 ? (b << 1) | traced : (traced << 1) | b;
                reduced(a, b) += m(row, col);
            }
        }
    }
    return DensityMatrix(reduced);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const Matrix log_rho = matrix_log(rho.matrix(), LogConvention::ZeroLogZero);
    const double nats = -trace(rho.matrix() * log_rho).real();
    return std::max(0.0, nats / std::log(2.0));
}

double scaled_entanglement_entropy(const DensityMatrix &rho, const ModeBasis &basis) {
    const TwoQubitState embedded = embed_occupation(rho, basis);
    if (embedded.state().purity() < 1.0 - 1e-8) {
        throw Error(ErrorCode::MixedStateUnsupported,
                    "entropy of entanglement needs a pure state; use log_negativity");
    }
    return 4.0 * von_neumann_entropy(reduced_state(embedded, 0));
}

double negativity(const TwoQubitState &rho4) {
    const auto eig = hermitian_eigen(partial_transpose(rho4.matrix(), 0));
    double sum = 0.0;
    for (double value : eig.values) {
        if (value < 0.0) {
            sum -= value;
        }
    }
    return sum;
}

double log_negativity(const TwoQubitState &rho4) {
    return std::log2(2.0 * negativity(rho4) + 1.0);
}

} // namespace nuqet
