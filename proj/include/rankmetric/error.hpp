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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankmetric {

// Every failure raised by the library carries one of these kinds. The CLI
// prints the kind name verbatim and maps it to an exit status.
enum class ErrorKind {
  NonPrime,
  ReducibleModulus,
  NoBuiltinModulus,
  FieldTooLarge,
  ZeroInverse,
  SpecMismatch,
  DimensionMismatch,
  Singular,
  RelationsNotSatisfied,
  NotDivisor,
  NotUnital,
  NotRepairable,
  NotFactorSequence,
  StageOrder,
  MultiplicityMismatch,
  TowerPrefixTooShort,
  InconsistentTarget,
  NotLipschitz,
  TooLarge,
  ParseError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace rankmetric
