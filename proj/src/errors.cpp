// Copyright 2026 The seqwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqwit/errors.hpp"

namespace seqwit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianOperator:
            return "NonHermitianOperator";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::InvalidFamilyParams:
            return "InvalidFamilyParams";
        case ErrorCode::InvalidSharpness:
            return "InvalidSharpness";
        case ErrorCode::InvalidEpsilon:
            return "InvalidEpsilon";
        case ErrorCode::Lambda1BelowThreshold:
            return "Lambda1BelowThreshold";
        case ErrorCode::DegenerateFamily:
            return "DegenerateFamily";
        case ErrorCode::TooShort:
            return "TooShort";
        case ErrorCode::InvalidCount:
            return "InvalidCount";
        case ErrorCode::EngineMismatch:
            return "EngineMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace seqwit
