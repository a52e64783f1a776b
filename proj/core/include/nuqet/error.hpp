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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nuqet {

enum class ErrorCode {
    NotHermitian,
    UnsupportedDim,
    DimMismatch,
    DomainError,
    InvalidState,
    InvalidPovm,
    InvalidDerivative,
    InvalidArgument,
    KernelObstruction,
    BadQuadrature,
    SingularOutcome,
    NonpositiveFisher,
    DomainEdge,
    NegativeTime,
    ZeroSteps,
    TraceDrift,
    DegenerateAngle,
    MixedStateUnsupported,
    NumericalInconsistency,
    MissingPreset,
    ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a failed numerical check rather than bad input.
bool is_numerical_failure(ErrorCode code) noexcept;

/**
 * Exception carried by every failing operation in the library.
 *
 * The code is stable and meant for dispatch (the CLI maps it onto exit
 * statuses); the message is for humans.
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace nuqet
