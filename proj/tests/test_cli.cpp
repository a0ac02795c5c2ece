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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rankmetric/cli.hpp"
#include "rankmetric/embeddings.hpp"
#include "rankmetric/io.hpp"

using namespace rankmetric;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rankmetric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("rankmetric_cli_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli basics") {
  TempDir dir;
  const auto f2 = FieldSpec::builtin(2);
  const std::string id = dir.write("id.txt", to_text(Matrix::identity(f2, 3)));
  const std::string e = dir.write("e.txt", to_text(Matrix::unit(f2, 3, 0, 1)));

  auto r = invoke({"rank", "--in", id});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "rank 3\nnormalized 3/3\n");

  r = invoke({"dist", "--x", id, "--y", e});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "dist 3/3\n");

  r = invoke({"gens", "--n", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "defect 0/9 0/9 0/9 0/9 0/9 0/9"));

  r = invoke({"iota", "--n", "6", "--in", e});
  CHECK(r.code == cli::kOk);
  CHECK(parse_matrix(r.out) == iota(6, 3, Matrix::unit(f2, 3, 0, 1)));

  CHECK(invoke({"slorder", "--n", "2", "--q", "3"}).out == "24\n");
  CHECK(invoke({"copies", "--a", "2", "--b", "4"}).out.rfind("k=560", 0) == 0);
  r = invoke({"ramsey-bound", "--a", "1", "--b", "1", "--eps", "1/2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("k=1 bound≈636.1 c=637", 0) == 0);
}

TEST_CASE("cli errors and exit codes") {
  TempDir dir;
  auto r = invoke({});
  CHECK(r.code == cli::kInvalid);
  r = invoke({"rank"});
  CHECK(r.code == cli::kInvalid);
  r = invoke({"rank", "--in", dir.write("bad.txt", "2 2 2\n1 0\n0 1\nextra")});
  CHECK(r.code == cli::kInvalid);
  CHECK(contains(r.err, "error: ParseError"));
  r = invoke({"iota", "--n", "5", "--in", dir.write("x.txt", "2 2 2\n1 0\n0 1\n")});
  CHECK(r.code == cli::kInvalid);
  CHECK(contains(r.err, "NotDivisor"));
  r = invoke({"ramsey-bound", "--a", "1", "--b", "1", "--eps", "0/1"});
  CHECK(r.code == cli::kInvalid);
  r = invoke({"copies", "--a", "2", "--b", "6", "--method", "brute_force"});
  CHECK(r.code == cli::kCapacity);
  CHECK(contains(r.err, "TooLarge"));
  r = invoke({"backforth", "--rounds", "4"});
  CHECK(r.code == cli::kCapacity);
  r = invoke({"repair", "--n", "2", "--in", dir.write("zero.txt", "2 2 2\n0 0\n0 0\n2 2 2\n0 0\n0 0\n")});
  CHECK(r.code == cli::kCapacity);
  CHECK(contains(r.err, "NotRepairable"));
  CHECK(invoke({"gens", "--n", "2", "--q", "6"}).code == cli::kInvalid);
}

TEST_CASE("cli pipelines") {
  TempDir dir;
  const auto f2 = FieldSpec::builtin(2);
  std::mt19937_64 rng(50);
  const auto g = kassabov_generators(2, f2);
  const std::string pair = dir.write("pair.txt", to_text(iota(12, 2, g.a)) + to_text(iota(12, 2, g.b)));

  auto r = invoke({"defect", "--n", "2", "--in", pair});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "defect 0/24 0/24 0/24 0/24 0/24 0/24"));

  r = invoke({"repair", "--n", "2", "--in", pair, "--out", dir.path("fixed.txt"), "--delta-out", dir.path("psi.txt")});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "d_x 0/12 d_y 0/12"));
  CHECK(contains(r.out, "verified"));
  const auto fixed = parse_pair(read_file(dir.path("fixed.txt")));
  CHECK(fixed.first == iota(12, 2, g.a));
  const DeltaEmbedding psi = parse_delta(read_file(dir.path("psi.txt")));
  CHECK(psi.multiplicity() == 6);

  const DeltaEmbedding phi(2, 5, 2, random_unit(f2, 5, rng));
  std::ostringstream ps;
  write_delta(ps, phi);
  const std::string phi_path = dir.write("phi.txt", ps.str());
  r = invoke({"extend", "--phi", phi_path, "--tower", "factorial", "--len", "5", "--stage", "2", "--delta-prime",
              "1/4", "--out", dir.path("ext.txt")});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "stage 4 dim 24"));
  CHECK(contains(r.out, "verified"));
  CHECK(parse_delta(read_file(dir.path("ext.txt"))).target_dim() == 24);

  std::ostringstream qs;
  write_delta(qs, conjugate(phi, random_unit(f2, 5, rng)));
  r = invoke({"homog", "--phi", phi_path, "--psi", dir.write("psi2.txt", qs.str())});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "residual 0"));

  std::ostringstream h0, h1;
  write_homomorphism(h0, Homomorphism::iota(f2, 4, 2).conjugated(random_unit(f2, 4, rng)));
  write_homomorphism(h1, Homomorphism::iota(f2, 6, 2).conjugated(random_unit(f2, 6, rng)));
  const std::string p0 = dir.write("h0.txt", h0.str()), p1 = dir.write("h1.txt", h1.str());
  r = invoke({"amalgamate", "--phi0", p0, "--phi1", p1});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "c 24"));
  CHECK(contains(r.out, "commutes"));
  r = invoke({"conjugator", "--phi0", p0, "--phi1", p0});
  CHECK(r.code == cli::kOk);

  r = invoke({"backforth", "--x", "factorial", "--y", "powers_of_2", "--rounds", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "verified"));

  r = invoke({"ramsey-search", "--a", "1", "--b", "2", "--c", "4", "--coloring", "distance"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "found oscillation 0"));
  r = invoke({"ramsey-search", "--a", "2", "--b", "2", "--c", "4", "--strategy", "random", "--seed", "3", "--trials",
              "5"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == invoke({"ramsey-search", "--a", "2", "--b", "2", "--c", "4", "--strategy", "random", "--seed", "3",
                         "--trials", "5"}).out);
}
