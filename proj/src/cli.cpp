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

#include "rankmetric/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rankmetric/embeddings.hpp"
#include "rankmetric/error.hpp"
#include "rankmetric/fraisse.hpp"
#include "rankmetric/io.hpp"
#include "rankmetric/matrix.hpp"
#include "rankmetric/ramsey.hpp"
#include "rankmetric/stability.hpp"

namespace rankmetric::cli {

namespace {

struct Context {
  std::ostream& out;
  int status = kOk;
};

void guard_dim(std::size_t n) {
  const std::size_t cap = default_max_dim();
  if (n > cap) {
    fail(ErrorKind::TooLarge,
         "dimension " + std::to_string(n) + " exceeds RANKMETRIC_MAX_DIM=" + std::to_string(cap));
  }
}

Matrix load_matrix(const std::string& path) {
  Matrix m = parse_matrix(read_file(path));
  guard_dim(std::max(m.rows(), m.cols()));
  return m;
}

void save(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

template <class Writer>
std::string render(Writer&& w) {
  std::ostringstream os;
  w(os);
  return os.str();
}

TowerElement probe_at(const Tower& t, std::size_t stage, bool a) {
  const auto g = kassabov_generators(t.dim(stage), t.field());
  return {stage, a ? g.a : g.b};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rank-metric computations over finite matrix algebras", "rankmetric"};
  app.require_subcommand(1);
  Context ctx{out};
  std::function<void()> action;

  int q = 2;
  std::size_t n = 0, a = 0, b = 0, c = 0, stage = 0, len = 8, rounds = 3, trials = 0, probe_dim = 2;
  std::string in, in2, out_path, delta_out, tower_x = "factorial", tower_y = "powers_of_2", eps_text = "1/2",
                                            delta_prime_text, method = "orbit_stabilizer", coloring = "constant",
                                            value_text = "0/1", scale_text = "1/1", strategy = "exhaustive";
  std::uint64_t seed = 0;
  bool envelope = false;

  auto add_q = [&](CLI::App* s) { s->add_option("--q", q, "field order (built-in field)")->capture_default_str(); };

  auto* rank_cmd = app.add_subcommand("rank", "rank and normalized rank of a matrix");
  rank_cmd->add_option("--in", in, "matrix file")->required();
  rank_cmd->callback([&] {
    action = [&] {
      const Matrix x = load_matrix(in);
      ctx.out << "rank " << rank(x) << "\nnormalized " << normalized_rank(x).str() << '\n';
    };
  });

  auto* dist_cmd = app.add_subcommand("dist", "rank distance between two matrices");
  dist_cmd->add_option("--x", in, "first matrix file")->required();
  dist_cmd->add_option("--y", in2, "second matrix file")->required();
  dist_cmd->callback([&] {
    action = [&] { ctx.out << "dist " << rank_distance(load_matrix(in), load_matrix(in2)).str() << '\n'; };
  });

  auto* gens_cmd = app.add_subcommand("gens", "generators a, b of M_n and their relation check");
  gens_cmd->add_option("--n", n, "matrix size")->required();
  add_q(gens_cmd);
  gens_cmd->callback([&] {
    action = [&] {
      guard_dim(n);
      const auto g = kassabov_generators(n, FieldSpec::builtin(q));
      write_matrix(ctx.out, g.a);
      write_matrix(ctx.out, g.b);
      ctx.out << "defect " << relation_defect(g.a, g.b, n).str() << '\n';
    };
  });

  auto* iota_cmd = app.add_subcommand("iota", "include a matrix of M_m into M_n as x (x) 1");
  iota_cmd->add_option("--n", n, "target size")->required();
  iota_cmd->add_option("--in", in, "matrix file")->required();
  iota_cmd->add_option("--out", out_path, "write the result here instead of stdout");
  iota_cmd->callback([&] {
    action = [&] {
      guard_dim(n);
      const Matrix x = load_matrix(in);
      const std::string text = to_text(iota(n, x.rows(), x));
      if (out_path.empty()) ctx.out << text; else save(out_path, text);
    };
  });

  auto* defect_cmd = app.add_subcommand("defect", "relation defect of an approximate generator pair");
  defect_cmd->add_option("--n", n, "model size")->required();
  defect_cmd->add_option("--in", in, "pair file (two matrix blocks)")->required();
  defect_cmd->callback([&] {
    action = [&] {
      const auto [x, y] = parse_pair(read_file(in));
      guard_dim(x.rows());
      const auto d = relation_defect(x, y, n);
      ctx.out << "d_xn " << d.d_xn.str() << "\nd_yn " << d.d_yn.str() << "\nd_rel " << d.d_rel.str() << "\nd_rx "
              << to_string(d.d_rx) << "\nd_ry " << to_string(d.d_ry) << "\ndelta " << to_string(d.delta) << '\n';
      ctx.out << "defect " << d.str() << '\n';
    };
  });

  auto* repair_cmd = app.add_subcommand("repair", "repair an approximate pair to an exact delta-embedding");
  repair_cmd->add_option("--n", n, "model size")->required();
  repair_cmd->add_option("--in", in, "pair file (two matrix blocks)")->required();
  repair_cmd->add_option("--out", out_path, "write the repaired pair here");
  repair_cmd->add_option("--delta-out", delta_out, "write the DELTA embedding here");
  repair_cmd->callback([&] {
    action = [&] {
      const auto [x, y] = parse_pair(read_file(in));
      guard_dim(x.rows());
      const RepairResult r = repair(x, y, n);
      write_certificate(ctx.out, r.cert);
      const auto problems = verify_repair(x, y, n, r);
      for (const auto& p : problems) ctx.out << "check failed: " << p << '\n';
      ctx.out << (problems.empty() ? "verified\n" : "not verified\n");
      if (!problems.empty()) ctx.status = kCheckFailed;
      if (!out_path.empty()) save(out_path, to_text(r.x_repaired) + to_text(r.y_repaired));
      if (!delta_out.empty()) save(delta_out, render([&](std::ostream& os) { write_delta(os, r.psi); }));
    };
  });

  auto* homog_cmd = app.add_subcommand("homog", "unit carrying one delta-embedding onto another");
  homog_cmd->add_option("--phi", in, "DELTA file")->required();
  homog_cmd->add_option("--psi", in2, "DELTA file")->required();
  homog_cmd->callback([&] {
    action = [&] {
      const DeltaEmbedding phi = parse_delta(read_file(in));
      const DeltaEmbedding psi = parse_delta(read_file(in2));
      const auto h = approximate_homogeneity(phi, psi);
      write_matrix(ctx.out, h.beta);
      ctx.out << "residual " << to_string(h.residual) << '\n';
    };
  });

  auto* extend_cmd = app.add_subcommand("extend", "approximate extension of a delta-embedding along a tower");
  extend_cmd->add_option("--phi", in, "DELTA file for M_{m_k} -> M_n")->required();
  extend_cmd->add_option("--tower", tower_x, "factorial | powers_of_2")->capture_default_str();
  extend_cmd->add_option("--len", len, "tower prefix length")->capture_default_str();
  extend_cmd->add_option("--stage", stage, "stage k of the source")->required();
  extend_cmd->add_option("--delta-prime", delta_prime_text, "tolerance delta' as num/den")->required();
  extend_cmd->add_option("--out", out_path, "write the DELTA embedding psi here");
  extend_cmd->callback([&] {
    action = [&] {
      const DeltaEmbedding phi = parse_delta(read_file(in));
      const Tower t = Tower::make(parse_tower_rule(tower_x), len, phi.field());
      const auto ext = approximate_extension(phi, t, stage, parse_rational(delta_prime_text));
      const auto measured = measured_commute_error(phi, ext, t, stage);
      ctx.out << "stage " << ext.stage << " dim " << t.dim(ext.stage) << "\nr " << ext.r << " s " << ext.s
              << "\ndelta " << to_string(ext.delta) << " delta_prime " << to_string(ext.delta_prime)
              << "\ncommute_error " << to_string(ext.commute_error) << "\nmeasured " << measured.str()
              << "\nbound " << to_string(ext.delta + ext.delta_prime) << '\n';
      if (measured.value() != ext.commute_error || ext.commute_error > ext.delta + ext.delta_prime) {
        ctx.out << "not verified\n";
        ctx.status = kCheckFailed;
      } else {
        ctx.out << "verified\n";
      }
      if (!out_path.empty()) save(out_path, render([&](std::ostream& os) { write_delta(os, ext.psi); }));
    };
  });

  auto* bf_cmd = app.add_subcommand("backforth", "back-and-forth maps between two towers with certificate");
  bf_cmd->add_option("--x", tower_x, "rule of the first tower")->capture_default_str();
  bf_cmd->add_option("--y", tower_y, "rule of the second tower")->capture_default_str();
  bf_cmd->add_option("--len", len, "prefix length of both towers")->capture_default_str();
  bf_cmd->add_option("--rounds", rounds, "number of maps")->capture_default_str();
  bf_cmd->add_option("--probe-dim", probe_dim, "generators of M_d, at the first stage of that size, are the probes")
      ->capture_default_str();
  add_q(bf_cmd);
  bf_cmd->callback([&] {
    action = [&] {
      const FieldSpec f = FieldSpec::builtin(q);
      const Tower tx = Tower::make(parse_tower_rule(tower_x), len, f);
      const Tower ty = Tower::make(parse_tower_rule(tower_y), len, f);
      std::vector<Probe> probes;
      for (const auto& [side, t] : {std::pair<Side, const Tower*>{Side::X, &tx}, {Side::Y, &ty}}) {
        const auto& d = t->dims();
        const auto it = std::find(d.begin(), d.end(), probe_dim);
        if (it == d.end()) continue;
        const auto st = static_cast<std::size_t>(it - d.begin());
        probes.push_back({side, probe_at(*t, st, true)});
        probes.push_back({side, probe_at(*t, st, false)});
      }
      const auto cert = back_and_forth(tx, ty, rounds, probes);
      write_certificate(ctx.out, cert);
      const auto problems = verify_back_and_forth(cert, tx, ty, probes);
      for (const auto& p : problems) ctx.out << "check failed: " << p << '\n';
      ctx.out << (problems.empty() ? "verified\n" : "not verified\n");
      if (!problems.empty()) ctx.status = kCheckFailed;
    };
  });

  auto* amal_cmd = app.add_subcommand("amalgamate", "amalgamate two unital homomorphisms out of M_a");
  amal_cmd->add_option("--phi0", in, "HOM file")->required();
  amal_cmd->add_option("--phi1", in2, "HOM file")->required();
  amal_cmd->callback([&] {
    action = [&] {
      const Homomorphism phi0 = parse_homomorphism(read_file(in));
      const Homomorphism phi1 = parse_homomorphism(read_file(in2));
      guard_dim(phi0.target_dim() * phi1.target_dim());
      const Amalgam am = amalgamate(phi0, phi1);
      ctx.out << "c " << am.c << '\n';
      write_homomorphism(ctx.out, am.psi0);
      write_homomorphism(ctx.out, am.psi1);
      const bool ok = am.psi0.apply(phi0.image_a()) == am.psi1.apply(phi1.image_a()) &&
                      am.psi0.apply(phi0.image_b()) == am.psi1.apply(phi1.image_b());
      ctx.out << (ok ? "commutes\n" : "does not commute\n");
      if (!ok) ctx.status = kCheckFailed;
    };
  });

  auto* conj_cmd = app.add_subcommand("conjugator", "unit u with u phi0(x) u^{-1} = phi1(x)");
  conj_cmd->add_option("--phi0", in, "HOM file")->required();
  conj_cmd->add_option("--phi1", in2, "HOM file")->required();
  conj_cmd->callback([&] {
    action = [&] {
      const Homomorphism phi0 = parse_homomorphism(read_file(in));
      const Homomorphism phi1 = parse_homomorphism(read_file(in2));
      write_matrix(ctx.out, skolem_noether_conjugator(phi0, phi1));
    };
  });

  auto* sl_cmd = app.add_subcommand("slorder", "order of SL_n(F_q)");
  sl_cmd->add_option("--n", n, "matrix size")->required();
  add_q(sl_cmd);
  sl_cmd->callback([&] { action = [&] { ctx.out << sl_order(n, static_cast<std::uint64_t>(q)) << '\n'; }; });

  auto* copies_cmd = app.add_subcommand("copies", "number of copies of M_a in M_b");
  copies_cmd->add_option("--a", a, "inner size")->required();
  copies_cmd->add_option("--b", b, "outer size")->required();
  copies_cmd->add_option("--method", method, "orbit_stabilizer | brute_force")->capture_default_str();
  add_q(copies_cmd);
  copies_cmd->callback([&] {
    action = [&] {
      CountMethod cm;
      if (method == "orbit_stabilizer") cm = CountMethod::OrbitStabilizer;
      else if (method == "brute_force") cm = CountMethod::BruteForce;
      else fail(ErrorKind::InvalidArgument, "unknown method '" + method + "'");
      const auto k = count_copies(FieldSpec::builtin(q), a, b, cm);
      ctx.out << "k=" << k.k << " method=" << method << '\n' << k.detail << '\n';
    };
  });

  auto* bound_cmd = app.add_subcommand("ramsey-bound", "dimension c from the approximate Ramsey bound");
  bound_cmd->add_option("--a", a, "inner size")->required();
  bound_cmd->add_option("--b", b, "outer size")->required();
  bound_cmd->add_option("--eps", eps_text, "epsilon as num/den")->required();
  bound_cmd->add_flag("--envelope", envelope, "use k = q^{b^2} instead of the exact count");
  add_q(bound_cmd);
  bound_cmd->callback([&] {
    action = [&] {
      write_report(ctx.out, ramsey_dimension(a, b, static_cast<std::uint64_t>(q), parse_rational(eps_text), envelope));
    };
  });

  auto* search_cmd = app.add_subcommand("ramsey-search", "search for a copy of M_b with small oscillation");
  search_cmd->add_option("--a", a, "size of the colored copies")->required();
  search_cmd->add_option("--b", b, "size of the sought copy")->required();
  search_cmd->add_option("--c", c, "ambient size")->required();
  search_cmd->add_option("--eps", eps_text, "oscillation target as num/den")->capture_default_str();
  search_cmd->add_option("--coloring", coloring, "constant | distance")->capture_default_str();
  search_cmd->add_option("--value", value_text, "value of the constant coloring")->capture_default_str();
  search_cmd->add_option("--scale", scale_text, "scale of the distance coloring")->capture_default_str();
  search_cmd->add_option("--strategy", strategy, "exhaustive | random")->capture_default_str();
  search_cmd->add_option("--seed", seed, "seed for random search and the reference copy")->capture_default_str();
  search_cmd->add_option("--trials", trials, "random search trials")->capture_default_str();
  add_q(search_cmd);
  search_cmd->callback([&] {
    action = [&] {
      guard_dim(c);
      const FieldSpec f = FieldSpec::builtin(q);
      Coloring gamma = Coloring::constant(Rational(0));
      if (coloring == "constant") {
        gamma = Coloring::constant(parse_rational(value_text));
      } else if (coloring == "distance") {
        // Reference: the standard copy of M_a in M_c, moved by a seeded unit when seed > 0.
        Subspace ref = standard_copy(f, a, c);
        if (seed != 0) {
          std::mt19937_64 rng(seed);
          const Matrix g = random_unit(f, c, rng);
          ref = conjugate_copy(ref, g, invert(g));
        }
        gamma = Coloring::distance_to(std::move(ref), parse_rational(scale_text));
      } else {
        fail(ErrorKind::InvalidArgument, "unknown coloring '" + coloring + "'");
      }
      SearchStrategy st;
      if (strategy == "random") {
        st.exhaustive = false;
        st.seed = seed;
        st.trials = trials;
      } else if (strategy != "exhaustive") {
        fail(ErrorKind::InvalidArgument, "unknown strategy '" + strategy + "'");
      }
      const auto r = monochromatic_search(f, a, b, c, gamma, parse_rational(eps_text), st);
      ctx.out << "coloring " << gamma.describe() << "\nstrategy " << strategy << "\nexamined " << r.examined << '\n';
      ctx.out << (r.found ? "found" : "exhausted") << " oscillation " << to_string(r.oscillation) << '\n';
      if (r.witness) {
        ctx.out << "witness\n";
        write_matrix(ctx.out, *r.witness);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalid;
  }

  try {
    if (action) action();
    return ctx.status;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::TooLarge:
      case ErrorKind::NotRepairable:
      case ErrorKind::TowerPrefixTooShort:
        return kCapacity;
      default:
        return kInvalid;
    }
  }
}

}  // namespace rankmetric::cli
