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

#include "nuqet/error.hpp"

namespace nuqet {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::UnsupportedDim: return "UnsupportedDim";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidPovm: return "InvalidPovm";
    case ErrorCode::InvalidDerivative: return "InvalidDerivative";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KernelObstruction: return "KernelObstruction";
    case ErrorCode::BadQuadrature: return "BadQuadrature";
    case ErrorCode::SingularOutcome: return "SingularOutcome";
    case ErrorCode::NonpositiveFisher: return "NonpositiveFisher";
    case ErrorCode::DomainEdge: return "DomainEdge";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::ZeroSteps: return "ZeroSteps";
    case ErrorCode::TraceDrift: return "TraceDrift";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::MixedStateUnsupported: return "MixedStateUnsupported";
    case ErrorCode::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorCode::MissingPreset: return "MissingPreset";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

bool is_numerical_failure(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::KernelObstruction:
    case ErrorCode::SingularOutcome:
    case ErrorCode::TraceDrift:
    case ErrorCode::NumericalInconsistency:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

} // namespace nuqet
