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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankmetric/embeddings.hpp"
#include "rankmetric/matrix.hpp"
#include "rankmetric/rational.hpp"
#include "rankmetric/stability.hpp"

namespace rankmetric {

/// Cap on realized tower dimensions: RANKMETRIC_MAX_DIM if set, else 256.
std::size_t default_max_dim();

enum class TowerRule { Factorial, PowersOf2, Explicit };

/**
 * A finite realized prefix n_0 | n_1 | ... of a factor sequence. Stages
 * whose dimension would exceed the cap are not realized; asking for them
 * raises TowerPrefixTooShort.
 */
class Tower {
 public:
  /// Rule-generated prefix of length prefix_len (factorial starts 0! = 1).
  static Tower make(TowerRule rule, std::size_t prefix_len, FieldSpec field,
                    std::size_t max_dim = default_max_dim());
  /// Throws NotFactorSequence unless every entry divides the next.
  static Tower from_dims(std::vector<std::size_t> dims, FieldSpec field);

  TowerRule rule() const noexcept { return rule_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t stage) const;

  /// The inclusion of stage `from` into stage `to` as a delta-embedding.
  DeltaEmbedding inclusion(std::size_t from, std::size_t to) const;

 private:
  Tower(TowerRule rule, FieldSpec field, std::vector<std::size_t> dims);

  TowerRule rule_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
};

std::string to_string(TowerRule rule);
TowerRule parse_tower_rule(const std::string& name);

struct TowerElement {
  std::size_t stage = 0;
  Matrix value;
};

/// Throws StageOrder if stage < e.stage, DimensionMismatch if e.value is not
/// in M_{n_{e.stage}}.
TowerElement include_to(const Tower& tower, const TowerElement& e, std::size_t stage);

/// Equal iff the inclusions into the later of the two stages agree.
bool same_element(const Tower& tower, const TowerElement& x, const TowerElement& y);

struct HomogeneityResult {
  Matrix beta;        // B_psi B_phi^{-1}
  Rational residual;  // always 0: the carry-over is exact
};

/// Throws MultiplicityMismatch unless phi and psi share source, target and
/// multiplicity.
HomogeneityResult approximate_homogeneity(const DeltaEmbedding& phi, const DeltaEmbedding& psi);

struct ExtensionResult {
  std::size_t stage = 0;  // k'
  DeltaEmbedding psi;     // M_n -> M_{m_k'}
  std::size_t r = 0;      // multiplicity of phi
  std::size_t s = 0;      // floor(m_k' / n)
  Rational delta;         // value of phi
  Rational delta_prime;
  Rational commute_error;  // 1 - r s m_k / m_k'
};

/**
 * Given a delta-embedding phi: M_{m_k} -> M_n, picks the smallest realized
 * k' >= k with delta' m_k' > n and builds psi: M_n -> M_{m_k'} of
 * multiplicity s = floor(m_k' / n) such that psi(phi(a)) is the
 * restriction of the tower inclusion of a to its first r s copies.
 */
ExtensionResult approximate_extension(const DeltaEmbedding& phi, const Tower& tower, std::size_t k,
                                      const Rational& delta_prime);

/// d(psi(phi(1)), iota(1)) evaluated by rank, for checking commute_error.
RankDistance measured_commute_error(const DeltaEmbedding& phi, const ExtensionResult& ext,
                                    const Tower& tower, std::size_t k);

enum class Side { X, Y };

struct Probe {
  Side side = Side::X;
  TowerElement element;
};

struct BackForthStep {
  Side source = Side::X;
  std::size_t source_stage = 0;
  std::size_t target_stage = 0;
  DeltaEmbedding map;
  Rational delta;      // padding / target dimension
  Rational tolerance;  // 1 for the first map, 2^{-t} afterwards
  Rational commute_error;  // of the extension producing this map (0 for t = 0)
};

/// d(M_t(iota(M_{t-1}(x))), iota(x)) for a probe x on the source side of M_{t-1}.
struct RoundTripRecord {
  std::size_t step = 0;
  std::optional<std::size_t> probe;  // empty for the unit
  Rational error;
  Rational bound;  // delta of M_{t-1} plus 2^{-t}
  Rational stated_bound;  // 2^{-(t-1)} + 2^{-t}
};

/// Distance between M_t(x) and M_{t+2}(x) in the common target stage.
struct CauchyRecord {
  std::size_t step = 0;
  std::size_t probe = 0;
  Rational distance;
  Rational bound;         // sum of the two intervening round-trip bounds
  Rational stated_bound;  // 2^{-t+1}
};

/// (1 - delta) d(x, y) <= d(M x, M y) <= d(x, y); y = 0 when second is empty.
struct SandwichRecord {
  std::size_t step = 0;
  std::size_t first = 0;
  std::optional<std::size_t> second;
  Rational d_source;
  Rational d_image;
};

struct BackForthCertificate {
  std::size_t rounds = 0;
  std::vector<BackForthStep> steps;
  std::vector<RoundTripRecord> round_trips;
  std::vector<CauchyRecord> cauchy;
  std::vector<SandwichRecord> sandwich;
  std::vector<Rational> unit_defects;  // d(M_t(1), 1) per step
  Rational final_bound;                // 2^{-2 rounds + 3}
  Rational final_error;                // largest round-trip error of the last step

  /// (j_i, k_i): the X and Y stages in play after each step.
  std::vector<std::pair<std::size_t, std::size_t>> stage_pairs() const;
};

/**
 * Builds `rounds` alternating maps M_0: X_0 -> Y_0, M_1: Y -> X, ... The
 * first is the block map of multiplicity floor(n_0 / m_0); map t >= 1 is
 * the approximate extension at tolerance 2^{-t} of the previous map
 * followed by the inclusion one stage up, so the source stages advance by
 * exactly one. Probes must sit in realized stages of their side.
 */
BackForthCertificate back_and_forth(const Tower& x_tower, const Tower& y_tower, std::size_t rounds,
                                    const std::vector<Probe>& probes);

/// Recomputes every recorded number by direct rank evaluation and checks
/// every bound. Returns the list of mismatches and violated bounds.
std::vector<std::string> verify_back_and_forth(const BackForthCertificate& cert, const Tower& x_tower,
                                               const Tower& y_tower, const std::vector<Probe>& probes);

void write_certificate(std::ostream& os, const BackForthCertificate& cert);

struct InnerTarget {
  TowerElement y;
  TowerElement image;
};

struct InnerResult {
  std::size_t source_stage = 0;  // stage holding every y
  std::size_t stage = 0;         // stage of the unit
  Matrix unit;
  std::vector<Rational> residuals;  // d(unit iota(y) unit^{-1}, image)
  bool within_eps = false;
  RepairCertificate repair;
};

/**
 * Finds a unit at a common stage whose conjugation moves each y close to
 * its image. The pairs (together with 1 -> 1) are closed under products to
 * a linear map on the algebra they generate; that algebra must be all of
 * M_{n_s}, which lets the generators be re-expressed and their images
 * repaired. Throws InconsistentTarget on a linear dependency among the y
 * that the images violate, or when the y generate a proper subalgebra.
 */
InnerResult inner_approximate(const Tower& tower, const std::vector<InnerTarget>& targets,
                              const Rational& eps);

/// 2 d(x, y) + residual, the triangle-inequality assembly for a probe x
/// replaced by a stage element y.
Rational inner_assembly_bound(const Rational& probe_distance, const Rational& residual);

}  // namespace rankmetric
