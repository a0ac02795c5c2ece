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

#include "rankmetric/fraisse.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "rankmetric/error.hpp"

namespace rankmetric {

std::size_t default_max_dim() {
  if (const char* env = std::getenv("RANKMETRIC_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 256;
}

// ---- towers ----

Tower::Tower(TowerRule rule, FieldSpec field, std::vector<std::size_t> dims)
    : rule_(rule), field_(std::move(field)), dims_(std::move(dims)) {}

Tower Tower::make(TowerRule rule, std::size_t prefix_len, FieldSpec field, std::size_t max_dim) {
  std::vector<std::size_t> dims;
  std::size_t value = 1;
  for (std::size_t i = 0; i < prefix_len; ++i) {
    switch (rule) {
      case TowerRule::Factorial:
        value = i == 0 ? 1 : value * i;
        break;
      case TowerRule::PowersOf2:
        value = i == 0 ? 1 : value * 2;
        break;
      case TowerRule::Explicit:
        fail(ErrorKind::InvalidArgument, "explicit towers are built with from_dims");
    }
    if (value > max_dim) break;
    dims.push_back(value);
  }
  return Tower(rule, std::move(field), std::move(dims));
}

Tower Tower::from_dims(std::vector<std::size_t> dims, FieldSpec field) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) fail(ErrorKind::NotFactorSequence, "dimension 0 in factor sequence");
    if (i > 0 && dims[i] % dims[i - 1] != 0) {
      fail(ErrorKind::NotFactorSequence,
           std::to_string(dims[i - 1]) + " does not divide " + std::to_string(dims[i]));
    }
  }
  return Tower(TowerRule::Explicit, std::move(field), std::move(dims));
}

std::size_t Tower::dim(std::size_t stage) const {
  if (stage >= dims_.size()) {
    fail(ErrorKind::TowerPrefixTooShort,
         "stage " + std::to_string(stage) + " is not realized (prefix has " +
             std::to_string(dims_.size()) + " stages)");
  }
  return dims_[stage];
}

DeltaEmbedding Tower::inclusion(std::size_t from, std::size_t to) const {
  if (to < from) fail(ErrorKind::StageOrder, "cannot include stage " + std::to_string(from) + " into " + std::to_string(to));
  return iota_embedding(field_, dim(to), dim(from));
}

std::string to_string(TowerRule rule) {
  switch (rule) {
    case TowerRule::Factorial:
      return "factorial";
    case TowerRule::PowersOf2:
      return "powers_of_2";
    case TowerRule::Explicit:
      return "explicit";
  }
  return "?";
}

TowerRule parse_tower_rule(const std::string& name) {
  if (name == "factorial") return TowerRule::Factorial;
  if (name == "powers_of_2" || name == "pow2") return TowerRule::PowersOf2;
  if (name == "explicit") return TowerRule::Explicit;
  fail(ErrorKind::InvalidArgument, "unknown tower rule '" + name + "'");
}

TowerElement include_to(const Tower& tower, const TowerElement& e, std::size_t stage) {
  if (stage < e.stage) {
    fail(ErrorKind::StageOrder, "cannot include stage " + std::to_string(e.stage) + " into " + std::to_string(stage));
  }
  const std::size_t from = tower.dim(e.stage);
  if (e.value.rows() != from || e.value.cols() != from) {
    fail(ErrorKind::DimensionMismatch, "element is not in M_" + std::to_string(from));
  }
  return {stage, iota(tower.dim(stage), from, e.value)};
}

bool same_element(const Tower& tower, const TowerElement& x, const TowerElement& y) {
  const std::size_t top = std::max(x.stage, y.stage);
  return include_to(tower, x, top).value == include_to(tower, y, top).value;
}

// ---- homogeneity and extension ----

HomogeneityResult approximate_homogeneity(const DeltaEmbedding& phi, const DeltaEmbedding& psi) {
  if (phi.source_dim() != psi.source_dim() || phi.target_dim() != psi.target_dim() ||
      phi.multiplicity() != psi.multiplicity()) {
    fail(ErrorKind::MultiplicityMismatch, "embeddings differ in dimensions or multiplicity");
  }
  return {psi.conjugator() * phi.conjugator_inverse(), Rational(0)};
}

ExtensionResult approximate_extension(const DeltaEmbedding& phi, const Tower& tower, std::size_t k,
                                      const Rational& delta_prime) {
  const std::size_t mk = tower.dim(k);
  if (phi.source_dim() != mk) {
    fail(ErrorKind::DimensionMismatch, "embedding source is not stage " + std::to_string(k));
  }
  if (delta_prime <= 0) fail(ErrorKind::InvalidArgument, "delta' must be positive");
  const std::size_t n = phi.target_dim();
  std::size_t kp = k;
  while (kp < tower.size() &&
         !(delta_prime * Rational(static_cast<std::int64_t>(tower.dims()[kp])) > Rational(static_cast<std::int64_t>(n)))) {
    ++kp;
  }
  if (kp == tower.size()) {
    fail(ErrorKind::TowerPrefixTooShort,
         "no realized stage m with " + to_string(delta_prime) + " * m > " + std::to_string(n));
  }
  const std::size_t big = tower.dims()[kp];
  const std::size_t s = big / n;
  const std::size_t r = phi.multiplicity();
  const std::size_t t = big / mk;
  const auto& f = tower.field();

  // Copy d of phi inside copy c of psi goes to inclusion copy c*r + d; the
  // inclusion copies beyond r*s fill the padding slots in order.
  std::vector<std::size_t> leftover;
  for (std::size_t copy = r * s; copy < t; ++copy) {
    for (std::size_t l = 0; l < mk; ++l) leftover.push_back(l * t + copy);
  }
  Matrix w(f, big, big);
  std::size_t next = 0;
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = j < r * mk ? (j % mk) * t + c * r + j / mk : leftover[next++];
      w(row, c * n + j) = 1;
    }
  }
  for (std::size_t col = s * n; col < big; ++col) w(leftover[next++], col) = 1;

  // z = w ((y^{-1})^{+s} + 1), so psi(b) = w ((y^{-1} b y)^{+s} + 0) w^{-1}.
  Matrix dinv = Matrix::identity(f, big);
  const Matrix& yi = phi.conjugator_inverse();
  for (std::size_t c = 0; c < s; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dinv(c * n + i, c * n + j) = yi(i, j);
    }
  }
  ExtensionResult res{kp, DeltaEmbedding(n, big, s, w * dinv), r, s, Rational(0), delta_prime, Rational(0)};
  res.delta = phi.delta().value();
  res.commute_error = Rational(1) - Rational(static_cast<std::int64_t>(r * s * mk), static_cast<std::int64_t>(big));
  return res;
}

RankDistance measured_commute_error(const DeltaEmbedding& phi, const ExtensionResult& ext,
                                    const Tower& tower, std::size_t k) {
  const std::size_t mk = tower.dim(k);
  const std::size_t big = tower.dim(ext.stage);
  const Matrix one = Matrix::identity(tower.field(), mk);
  return rank_distance(ext.psi.apply(phi.apply(one)), iota(big, mk, one));
}

// ---- back and forth ----

namespace {

Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }
char side_name(Side s) { return s == Side::X ? 'X' : 'Y'; }

Rational pow2_signed(int e) {
  // 2^{-e} for any integer e.
  if (e >= 0) return pow2_neg(static_cast<unsigned>(e));
  return Rational(std::int64_t{1} << (-e));
}

struct Towers {
  const Tower& x;
  const Tower& y;
  const Tower& operator[](Side s) const { return s == Side::X ? x : y; }
};

Matrix lift(const Tower& tower, const Matrix& v, std::size_t from, std::size_t to) {
  return include_to(tower, {from, v}, to).value;
}

void check_probes(const Towers& towers, const std::vector<Probe>& probes) {
  for (const auto& p : probes) {
    const std::size_t d = towers[p.side].dim(p.element.stage);
    if (p.element.value.rows() != d || p.element.value.cols() != d) {
      fail(ErrorKind::DimensionMismatch, "probe value does not match its stage");
    }
  }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> BackForthCertificate::stage_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& s : steps) {
    if (s.source == Side::X) {
      out.emplace_back(s.source_stage, s.target_stage);
    } else {
      out.emplace_back(s.target_stage, s.source_stage);
    }
  }
  return out;
}

BackForthCertificate back_and_forth(const Tower& x_tower, const Tower& y_tower, std::size_t rounds,
                                    const std::vector<Probe>& probes) {
  if (!(x_tower.field() == y_tower.field())) fail(ErrorKind::SpecMismatch, "towers over different fields");
  if (rounds == 0) fail(ErrorKind::InvalidArgument, "rounds must be positive");
  const Towers towers{x_tower, y_tower};
  check_probes(towers, probes);
  const auto& f = x_tower.field();

  BackForthCertificate cert;
  cert.rounds = rounds;
  {
    const std::size_t m0 = x_tower.dim(0);
    const std::size_t n0 = y_tower.dim(0);
    DeltaEmbedding first = block_embedding(f, m0, n0, n0 / m0);
    const Rational delta = first.delta().value();
    cert.steps.push_back({Side::X, 0, 0, std::move(first), delta, Rational(1), Rational(0)});
  }
  for (std::size_t t = 1; t < rounds; ++t) {
    const BackForthStep& prev = cert.steps.back();
    const Side side = other(prev.source);
    const std::size_t src = prev.target_stage + 1;
    const DeltaEmbedding chi = include_target(prev.map, towers[side].dim(src));
    ExtensionResult ext = approximate_extension(chi, towers[prev.source], prev.source_stage,
                                                pow2_neg(static_cast<unsigned>(t)));
    const Rational delta = ext.psi.delta().value();
    cert.steps.push_back({side, src, ext.stage, std::move(ext.psi), delta,
                          pow2_neg(static_cast<unsigned>(t)), ext.commute_error});
  }

  const auto ident = [&](Side s, std::size_t stage) { return Matrix::identity(f, towers[s].dim(stage)); };

  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& st = cert.steps[t];
    const Tower& src_tower = towers[st.source];
    cert.unit_defects.push_back(rank_distance(st.map.apply(ident(st.source, st.source_stage)),
                                              ident(other(st.source), st.target_stage))
                                    .value());

    // Sandwich on probe pairs and against zero.
    std::vector<std::pair<std::size_t, Matrix>> xs;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto& p = probes[i];
      if (p.side == st.source && p.element.stage <= st.source_stage) {
        xs.emplace_back(i, lift(src_tower, p.element.value, p.element.stage, st.source_stage));
      }
    }
    std::vector<Matrix> images;
    for (const auto& [i, x] : xs) images.push_back(st.map.apply(x));
    for (std::size_t a = 0; a < xs.size(); ++a) {
      cert.sandwich.push_back({t, xs[a].first, std::nullopt, normalized_rank(xs[a].second).value(),
                               normalized_rank(images[a]).value()});
      for (std::size_t b = a + 1; b < xs.size(); ++b) {
        cert.sandwich.push_back({t, xs[a].first, xs[b].first, rank_distance(xs[a].second, xs[b].second).value(),
                                 rank_distance(images[a], images[b]).value()});
      }
    }

    if (t == 0) continue;
    // Round trip through the previous map and this one.
    const auto& prev = cert.steps[t - 1];
    const Tower& home = towers[prev.source];
    const Tower& away = towers[st.source];
    const Rational bound = prev.delta + st.tolerance;
    const Rational stated = pow2_neg(static_cast<unsigned>(t - 1)) + pow2_neg(static_cast<unsigned>(t));
    auto round_trip = [&](const Matrix& v, std::size_t stage) {
      const Matrix x = lift(home, v, stage, prev.source_stage);
      const Matrix y = lift(away, prev.map.apply(x), prev.target_stage, st.source_stage);
      return rank_distance(st.map.apply(y), lift(home, v, stage, st.target_stage)).value();
    };
    cert.round_trips.push_back({t, std::nullopt, round_trip(ident(prev.source, prev.source_stage), prev.source_stage),
                                bound, stated});
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto& p = probes[i];
      if (p.side != prev.source || p.element.stage > prev.source_stage) continue;
      cert.round_trips.push_back({t, i, round_trip(p.element.value, p.element.stage), bound, stated});
    }
  }

  // Same-direction maps two steps apart.
  for (std::size_t t = 0; t + 2 < cert.steps.size(); ++t) {
    const auto& a = cert.steps[t];
    const auto& mid = cert.steps[t + 1];
    const auto& b = cert.steps[t + 2];
    const Tower& home = towers[a.source];
    const Tower& away = towers[other(a.source)];
    const Rational bound = (a.delta + mid.tolerance) + (mid.delta + b.tolerance);
    const Rational stated = pow2_signed(static_cast<int>(t) - 1);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto& p = probes[i];
      if (p.side != a.source || p.element.stage > a.source_stage) continue;
      const Matrix first = a.map.apply(lift(home, p.element.value, p.element.stage, a.source_stage));
      const Matrix second = b.map.apply(lift(home, p.element.value, p.element.stage, b.source_stage));
      cert.cauchy.push_back(
          {t, i, rank_distance(lift(away, first, a.target_stage, b.target_stage), second).value(), bound, stated});
    }
  }

  cert.final_bound = pow2_signed(2 * static_cast<int>(rounds) - 3);
  cert.final_error = Rational(0);
  for (const auto& rt : cert.round_trips) {
    if (rt.step + 1 == cert.steps.size()) cert.final_error = std::max(cert.final_error, rt.error);
  }
  return cert;
}

std::vector<std::string> verify_back_and_forth(const BackForthCertificate& cert, const Tower& x_tower,
                                               const Tower& y_tower, const std::vector<Probe>& probes) {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  const Towers towers{x_tower, y_tower};
  const auto& f = x_tower.field();

  // Independent evaluation: explicit Kronecker inclusions and Y (x^{+k} + 0) Y^{-1}.
  auto incl = [&](Side s, const Matrix& v, std::size_t from, std::size_t to) {
    const std::size_t ratio = towers[s].dim(to) / towers[s].dim(from);
    return kron(v, Matrix::identity(f, ratio));
  };
  auto eval = [&](const BackForthStep& st, const Matrix& v) {
    const Matrix& y = st.map.conjugator();
    return y * repeat_block(v, st.map.multiplicity(), st.map.padding()) * invert(y);
  };
  auto one = [&](Side s, std::size_t stage) { return Matrix::identity(f, towers[s].dim(stage)); };

  expect(cert.steps.size() == cert.rounds, "step count differs from rounds");
  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& st = cert.steps[t];
    expect(st.map.source_dim() == towers[st.source].dim(st.source_stage) &&
               st.map.target_dim() == towers[other(st.source)].dim(st.target_stage),
           "step " + std::to_string(t) + " dimensions do not match its stages");
    const Matrix u = eval(st, one(st.source, st.source_stage));
    const RankDistance unit = rank_distance(u, one(other(st.source), st.target_stage));
    expect(unit.value() == st.delta, "step " + std::to_string(t) + " delta mismatch");
    expect(t < cert.unit_defects.size() && cert.unit_defects[t] == unit.value(),
           "step " + std::to_string(t) + " unit defect mismatch");
    expect(st.delta <= st.tolerance, "step " + std::to_string(t) + " delta exceeds tolerance");
    if (t > 0) {
      const auto& prev = cert.steps[t - 1];
      expect(st.source == other(prev.source) && st.source_stage == prev.target_stage + 1,
             "step " + std::to_string(t) + " breaks the stage schedule");
      expect(st.commute_error <= prev.delta + st.tolerance,
             "step " + std::to_string(t) + " commute error exceeds delta + delta'");
    }
  }

  for (const auto& rt : cert.round_trips) {
    const std::string tag = "round trip step " + std::to_string(rt.step);
    if (rt.step == 0 || rt.step >= cert.steps.size()) {
      problems.push_back(tag + " out of range");
      continue;
    }
    const auto& prev = cert.steps[rt.step - 1];
    const auto& st = cert.steps[rt.step];
    Matrix v = one(prev.source, prev.source_stage);
    std::size_t stage = prev.source_stage;
    if (rt.probe) {
      v = probes.at(*rt.probe).element.value;
      stage = probes.at(*rt.probe).element.stage;
    }
    const Matrix x = incl(prev.source, v, stage, prev.source_stage);
    const Matrix y = incl(st.source, eval(prev, x), prev.target_stage, st.source_stage);
    const RankDistance err = rank_distance(eval(st, y), incl(prev.source, v, stage, st.target_stage));
    expect(err.value() == rt.error, tag + " error mismatch");
    expect(rt.bound == prev.delta + st.tolerance, tag + " bound mismatch");
    expect(rt.error <= rt.bound, tag + " error exceeds bound");
    expect(rt.error <= st.commute_error, tag + " error exceeds commute error");
    if (!rt.probe) expect(rt.error == st.commute_error, tag + " unit error differs from commute error");
  }

  for (const auto& c : cert.cauchy) {
    const std::string tag = "cauchy step " + std::to_string(c.step);
    const auto& a = cert.steps.at(c.step);
    const auto& b = cert.steps.at(c.step + 2);
    const auto& p = probes.at(c.probe).element;
    const Matrix first = eval(a, incl(a.source, p.value, p.stage, a.source_stage));
    const Matrix second = eval(b, incl(a.source, p.value, p.stage, b.source_stage));
    const RankDistance d = rank_distance(incl(other(a.source), first, a.target_stage, b.target_stage), second);
    expect(d.value() == c.distance, tag + " distance mismatch");
    expect(c.distance <= c.bound, tag + " distance exceeds bound");
  }

  for (const auto& s : cert.sandwich) {
    const std::string tag = "sandwich step " + std::to_string(s.step);
    const auto& st = cert.steps.at(s.step);
    const auto& p = probes.at(s.first).element;
    const Matrix x = incl(st.source, p.value, p.stage, st.source_stage);
    Matrix y(f, x.rows(), x.cols());
    if (s.second) {
      const auto& q = probes.at(*s.second).element;
      y = incl(st.source, q.value, q.stage, st.source_stage);
    }
    const Rational ds = rank_distance(x, y).value();
    const Rational di = rank_distance(eval(st, x), eval(st, y)).value();
    expect(ds == s.d_source && di == s.d_image, tag + " distance mismatch");
    expect((Rational(1) - st.delta) * ds <= di && di <= ds, tag + " Lipschitz sandwich violated");
  }

  Rational final_error(0);
  for (const auto& rt : cert.round_trips) {
    if (rt.step + 1 == cert.steps.size()) final_error = std::max(final_error, rt.error);
  }
  expect(final_error == cert.final_error, "final error mismatch");
  expect(cert.final_bound == pow2_signed(2 * static_cast<int>(cert.rounds) - 3), "final bound mismatch");
  expect(cert.final_error <= cert.final_bound, "final error exceeds 2^{-2n+3}");
  return problems;
}

void write_certificate(std::ostream& os, const BackForthCertificate& cert) {
  os << "BACKFORTH rounds " << cert.rounds << '\n';
  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& s = cert.steps[t];
    os << "step " << t << ' ' << side_name(s.source) << ' ' << s.source_stage << " -> "
       << side_name(other(s.source)) << ' ' << s.target_stage << " dims " << s.map.source_dim() << " -> "
       << s.map.target_dim() << " mult " << s.map.multiplicity() << " delta " << to_string(s.delta)
       << " tolerance " << to_string(s.tolerance) << " commute " << to_string(s.commute_error) << '\n';
  }
  for (const auto& [j, k] : cert.stage_pairs()) os << "stages " << j << ' ' << k << '\n';
  for (const auto& rt : cert.round_trips) {
    os << "roundtrip step " << rt.step << ' ' << (rt.probe ? "probe " + std::to_string(*rt.probe) : std::string("unit"))
       << " error " << to_string(rt.error) << " bound " << to_string(rt.bound) << " stated "
       << to_string(rt.stated_bound) << '\n';
  }
  for (const auto& c : cert.cauchy) {
    os << "cauchy step " << c.step << " probe " << c.probe << " distance " << to_string(c.distance) << " bound "
       << to_string(c.bound) << " stated " << to_string(c.stated_bound) << '\n';
  }
  for (const auto& s : cert.sandwich) {
    os << "sandwich step " << s.step << " probes " << s.first << ' '
       << (s.second ? std::to_string(*s.second) : std::string("zero")) << " source " << to_string(s.d_source)
       << " image " << to_string(s.d_image) << '\n';
  }
  for (std::size_t t = 0; t < cert.unit_defects.size(); ++t) {
    os << "unit_defect step " << t << ' ' << to_string(cert.unit_defects[t]) << '\n';
  }
  os << "final_error " << to_string(cert.final_error) << " final_bound " << to_string(cert.final_bound) << '\n';
}

// ---- inner approximation ----

namespace {

// Pairs (y, L(y)) kept in reduced echelon form on the y coordinates.
class LinearTable {
 public:
  LinearTable(FieldSpec field, std::size_t ny, std::size_t ni) : f_(std::move(field)), ny_(ny), ni_(ni) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the table; true if its y part vanishes.
  bool reduce(std::vector<Code>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Code c = v[pivots_[k]];
      if (c == 0) continue;
      const auto& row = rows_[k];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_.sub(v[i], f_.mul(c, row[i]));
    }
    return std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ny_), [](Code c) { return c == 0; });
  }

  // Adds (y, image). Returns false when y is already spanned; `residue`
  // then holds the image minus the value the table predicts.
  bool insert(std::vector<Code> v, std::vector<Code>* residue = nullptr) {
    if (reduce(v)) {
      if (residue) residue->assign(v.begin() + static_cast<std::ptrdiff_t>(ny_), v.end());
      return false;
    }
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    const Code s = f_.inv(v[p]);
    for (auto& c : v) c = f_.mul(s, c);
    for (auto& row : rows_) {
      const Code c = row[p];
      if (c == 0) continue;
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = f_.sub(row[i], f_.mul(c, v[i]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<Code>& row(std::size_t k) const { return rows_[k]; }

  // The image of y; y must be spanned.
  std::vector<Code> evaluate(const Matrix& y) const {
    std::vector<Code> v(ny_ + ni_, 0);
    std::copy(y.data().begin(), y.data().end(), v.begin());
    if (!reduce(v)) return {};
    std::vector<Code> out(ni_);
    for (std::size_t i = 0; i < ni_; ++i) out[i] = f_.neg(v[ny_ + i]);
    return out;
  }

 private:
  FieldSpec f_;
  std::size_t ny_;
  std::size_t ni_;
  std::vector<std::vector<Code>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Code> concat(const Matrix& a, const Matrix& b) {
  std::vector<Code> v(a.data().begin(), a.data().end());
  v.insert(v.end(), b.data().begin(), b.data().end());
  return v;
}

}  // namespace

InnerResult inner_approximate(const Tower& tower, const std::vector<InnerTarget>& targets, const Rational& eps) {
  if (targets.empty()) fail(ErrorKind::InvalidArgument, "no target pairs");
  std::size_t s = 0;
  std::size_t t = 0;
  for (const auto& tg : targets) {
    s = std::max(s, tg.y.stage);
    t = std::max(t, tg.image.stage);
  }
  t = std::max(s, t);
  const std::size_t ns = tower.dim(s);
  const std::size_t nt = tower.dim(t);
  const auto& f = tower.field();

  std::vector<std::pair<Matrix, Matrix>> gens;
  gens.emplace_back(Matrix::identity(f, ns), Matrix::identity(f, nt));
  for (const auto& tg : targets) {
    gens.emplace_back(include_to(tower, tg.y, s).value, include_to(tower, tg.image, t).value);
  }

  LinearTable table(f, ns * ns, nt * nt);
  for (const auto& [y, img] : gens) {
    std::vector<Code> residue;
    if (!table.insert(concat(y, img), &residue) &&
        std::any_of(residue.begin(), residue.end(), [](Code c) { return c != 0; })) {
      fail(ErrorKind::InconsistentTarget, "images violate a linear relation among the targets");
    }
  }
  // Close the span under right multiplication by the generators.
  for (std::size_t k = 0; k < table.rank() && table.rank() < ns * ns; ++k) {
    const auto& row = table.row(k);
    const Matrix u(f, ns, ns, std::vector<Code>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ns * ns)));
    const Matrix lu(f, nt, nt, std::vector<Code>(row.begin() + static_cast<std::ptrdiff_t>(ns * ns), row.end()));
    for (std::size_t g = 1; g < gens.size(); ++g) table.insert(concat(u * gens[g].first, lu * gens[g].second));
  }
  if (table.rank() < ns * ns) {
    fail(ErrorKind::InconsistentTarget,
         "targets generate a proper subalgebra of M_" + std::to_string(ns) + "; the map is not determined");
  }

  const auto ab = kassabov_generators(ns, f);
  Matrix xa(f, nt, nt, table.evaluate(ab.a));
  Matrix xb(f, nt, nt, table.evaluate(ab.b));
  RepairResult rep = repair(xa, xb, ns);
  const HomogeneityResult h = approximate_homogeneity(tower.inclusion(s, t), rep.psi);

  InnerResult out{s, t, h.beta, {}, true, rep.cert};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const Rational d = rank_distance(rep.psi.apply(gens[i].first), gens[i].second).value();
    out.residuals.push_back(d);
    if (!(d < eps)) out.within_eps = false;
  }
  return out;
}

Rational inner_assembly_bound(const Rational& probe_distance, const Rational& residual) {
  return Rational(2) * probe_distance + residual;
}

}  // namespace rankmetric
