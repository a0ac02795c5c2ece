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
#include <string>
#include <utility>

#include "rankmetric/embeddings.hpp"
#include "rankmetric/matrix.hpp"

namespace rankmetric {

// Matrix blocks: a header line `q rows cols` naming a built-in field, then
// `rows` lines of `cols` element codes. The read_* functions consume one
// block from a stream; the parse_* functions take a whole document and
// reject anything left after the last block.

void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

void write_homomorphism(std::ostream& os, const Homomorphism& h);
Homomorphism read_homomorphism(std::istream& is);

void write_delta(std::ostream& os, const DeltaEmbedding& e);
DeltaEmbedding read_delta(std::istream& is);

std::string to_text(const Matrix& m);
Matrix parse_matrix(const std::string& text);
/// Two consecutive matrix blocks.
std::pair<Matrix, Matrix> parse_pair(const std::string& text);
Homomorphism parse_homomorphism(const std::string& text);
DeltaEmbedding parse_delta(const std::string& text);

/// Whole file contents. Throws ParseError if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace rankmetric
