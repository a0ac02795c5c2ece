// Copyright 2026 The rankmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankmetric/error.hpp"

namespace rankmetric {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoBuiltinModulus: return "NoBuiltinModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::RelationsNotSatisfied: return "RelationsNotSatisfied";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotRepairable: return "NotRepairable";
    case ErrorKind::NotFactorSequence: return "NotFactorSequence";
    case ErrorKind::StageOrder: return "StageOrder";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::TowerPrefixTooShort: return "TowerPrefixTooShort";
    case ErrorKind::InconsistentTarget: return "InconsistentTarget";
    case ErrorKind::NotLipschitz: return "NotLipschitz";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rankmetric
