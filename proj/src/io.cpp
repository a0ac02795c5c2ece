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

#include "rankmetric/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rankmetric/error.hpp"

namespace rankmetric {

namespace {

std::string next_token(std::istream& is, const char* what) {
  std::string tok;
  if (!(is >> tok)) fail(ErrorKind::ParseError, std::string("unexpected end of input reading ") + what);
  return tok;
}

unsigned long read_number(std::istream& is, const char* what) {
  const std::string tok = next_token(is, what);
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument(tok);
    v = std::stoul(tok, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size()) fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

void expect_keyword(std::istream& is, const char* keyword) {
  const std::string tok = next_token(is, keyword);
  if (tok != keyword) fail(ErrorKind::ParseError, std::string("expected ") + keyword + ", got '" + tok + "'");
}

void expect_end(std::istream& is) {
  std::string rest;
  if (is >> rest) fail(ErrorKind::ParseError, "trailing data '" + rest + "'");
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix& m) {
  os << m.field().q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << static_cast<unsigned>(m(r, c));
    }
    os << '\n';
  }
}

Matrix read_matrix(std::istream& is) {
  const auto q = read_number(is, "field order");
  const auto rows = read_number(is, "row count");
  const auto cols = read_number(is, "column count");
  if (q > kMaxBuiltinOrder) fail(ErrorKind::ParseError, "field order " + std::to_string(q) + " has no built-in field");
  const FieldSpec field = FieldSpec::builtin(static_cast<unsigned>(q));
  if (rows * cols > (std::size_t{1} << 28)) fail(ErrorKind::ParseError, "matrix too large");
  std::vector<Code> entries(rows * cols);
  for (auto& e : entries) {
    const auto v = read_number(is, "matrix entry");
    if (v >= q) fail(ErrorKind::ParseError, "entry " + std::to_string(v) + " out of range for q=" + std::to_string(q));
    e = static_cast<Code>(v);
  }
  return Matrix(field, rows, cols, std::move(entries));
}

void write_homomorphism(std::ostream& os, const Homomorphism& h) {
  os << "HOM " << h.source_dim() << ' ' << h.target_dim() << '\n';
  write_matrix(os, h.image_a());
  write_matrix(os, h.image_b());
}

Homomorphism read_homomorphism(std::istream& is) {
  expect_keyword(is, "HOM");
  const auto m = read_number(is, "source dimension");
  const auto n = read_number(is, "target dimension");
  Matrix a = read_matrix(is);
  Matrix b = read_matrix(is);
  if (a.rows() != n || !a.square()) fail(ErrorKind::ParseError, "HOM block shape does not match header");
  return Homomorphism(m, std::move(a), std::move(b));
}

void write_delta(std::ostream& os, const DeltaEmbedding& e) {
  os << "DELTA " << e.source_dim() << ' ' << e.target_dim() << ' ' << e.multiplicity() << '\n';
  write_matrix(os, e.conjugator());
}

DeltaEmbedding read_delta(std::istream& is) {
  expect_keyword(is, "DELTA");
  const auto m = read_number(is, "source dimension");
  const auto n = read_number(is, "target dimension");
  const auto mult = read_number(is, "multiplicity");
  Matrix y = read_matrix(is);
  return DeltaEmbedding(m, n, mult, std::move(y));
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  Matrix m = read_matrix(is);
  expect_end(is);
  return m;
}

std::pair<Matrix, Matrix> parse_pair(const std::string& text) {
  std::istringstream is(text);
  Matrix x = read_matrix(is);
  Matrix y = read_matrix(is);
  expect_end(is);
  return {std::move(x), std::move(y)};
}

Homomorphism parse_homomorphism(const std::string& text) {
  std::istringstream is(text);
  Homomorphism h = read_homomorphism(is);
  expect_end(is);
  return h;
}

DeltaEmbedding parse_delta(const std::string& text) {
  std::istringstream is(text);
  DeltaEmbedding e = read_delta(is);
  expect_end(is);
  return e;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rankmetric
