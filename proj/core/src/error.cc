// Copyright 2026 The rydgate Authors
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

#include "rydgate/error.h"

namespace rydgate {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kZeroVector:
            return "ZeroVector";
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kAsymmetricAreas:
            return "AsymmetricAreas";
        case ErrorCode::kInvalidM:
            return "InvalidM";
        case ErrorCode::kNoDarkSubspace:
            return "NoDarkSubspace";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kNotNormalized:
            return "NotNormalized";
        case ErrorCode::kUnsupportedM:
            return "UnsupportedM";
        case ErrorCode::kSignatureMismatch:
            return "SignatureMismatch";
        case ErrorCode::kEmptyGrid:
            return "EmptyGrid";
        case ErrorCode::kNoMaximaFound:
            return "NoMaximaFound";
        case ErrorCode::kInfeasibleStart:
            return "InfeasibleStart";
        case ErrorCode::kStepTooLarge:
            return "StepTooLarge";
        case ErrorCode::kParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace rydgate
