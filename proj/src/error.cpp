// Copyright 2026 The Authors.
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

#include "matroidprob/error.hpp"

namespace mprob {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSpecInvalid: return "SpecInvalid";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kEnumerationLimit: return "EnumerationLimit";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kSameElement: return "SameElement";
    case ErrorCode::kKMismatch: return "KMismatch";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kStartOnZeroSet: return "StartOnZeroSet";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mprob
