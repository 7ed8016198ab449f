// Copyright 2026 The pfkit Authors
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

#include "pfkit/error.hpp"

namespace pfkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kConstraintViolated: return "ConstraintViolated";
    case ErrorCode::kZeroParameter: return "ZeroParameter";
    case ErrorCode::kDegenerateParameters: return "DegenerateParameters";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kExceptionalPoint: return "ExceptionalPoint";
    case ErrorCode::kUnsupportedShape: return "UnsupportedShape";
    case ErrorCode::kEigenvectorDegenerate: return "EigenvectorDegenerate";
    case ErrorCode::kTrivialCommutant: return "TrivialCommutant";
    case ErrorCode::kNotInPTForm: return "NotInPTForm";
    case ErrorCode::kNoPseudoFermions: return "NoPseudoFermions";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pfkit
