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

#include <cstddef>
#include <vector>

#include "rankmetric/matrix.hpp"

// Dense kernels behind Matrix. Each has a plain serial reference and an
// OpenMP version; the two must agree bit for bit (tests/kernels_test.cpp)
// and bench/ compares their speed.
namespace rankmetric::kernels {

// Below this many output entries the parallel kernels run serially.
inline constexpr std::size_t kParallelThreshold = 64 * 64;

Matrix multiply_serial(const Matrix& a, const Matrix& b);
Matrix multiply_parallel(const Matrix& a, const Matrix& b);

// Reduce m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_serial(Matrix& m);
std::vector<std::size_t> rref_parallel(Matrix& m);

Matrix kron_serial(const Matrix& x, const Matrix& y);
Matrix kron_parallel(const Matrix& x, const Matrix& y);

int max_threads() noexcept;

}  // namespace rankmetric::kernels
