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

#include <iosfwd>

namespace rankmetric::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // a certificate failed its own verification
inline constexpr int kInvalid = 2;      // bad flags, malformed input, violated preconditions
inline constexpr int kCapacity = 3;     // TooLarge, NotRepairable, TowerPrefixTooShort

/// Runs one subcommand. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankmetric::cli
