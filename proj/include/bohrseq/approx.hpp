// Copyright 2026 The bohrseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bohrseq/arcset.hpp"
#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

/// The deduplicated points k_1 alpha_1 + ... + k_t alpha_t with |k_j| <= M.
///
/// Points are kept sorted by a 128-bit fixed-point position with a per-point
/// error radius (in units of 2^-128). When every generator is rational with a
/// small common denominator D the exact residues modulo D are kept as well.
/// Each point remembers the coefficient vector of lowest level max_j |k_j|.
class GroupBall {
 public:
  static GroupBall enumerate(const std::vector<TorusPoint>& alphas, std::int64_t M,
                             const Budgets& budgets = {});

  const std::vector<TorusPoint>& alphas() const { return alphas_; }
  std::int64_t M() const { return M_; }
  std::size_t size() const { return pos_.size(); }
  std::size_t dimension() const { return alphas_.size(); }

  u128 position(std::size_t i) const { return pos_[i]; }
  std::uint64_t error(std::size_t i) const { return err_[i]; }
  std::int64_t level(std::size_t i) const { return level_[i]; }
  std::vector<std::int64_t> coefficients(std::size_t i) const;
  /// The exact point.
  TorusPoint point(std::size_t i) const;

  bool exact() const { return exact_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t residue(std::size_t i) const { return residue_[i]; }

 private:
  std::vector<TorusPoint> alphas_;
  std::int64_t M_ = 0;
  std::vector<u128> pos_;
  std::vector<std::uint64_t> err_;
  std::vector<std::int64_t> level_;
  std::vector<std::int32_t> coeffs_;  // dimension() entries per point
  bool exact_ = false;
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> residue_;
};

GroupBall enumerate_group_ball(const std::vector<TorusPoint>& alphas, std::int64_t M,
                               const Budgets& budgets = {});

/// Certified lower bound on the smallest distance between two ball points
/// (exact for rational balls). Needs at least two points.
Rational min_gap(const GroupBall& ball);

/// Certified lower bound on min ||a - b|| over a in `inner` and b in
/// `outer` minus `inner`; nullopt when that difference is empty. The
/// generators of `inner` must be a prefix of those of `outer`.
std::optional<Rational> cross_gap(const GroupBall& inner, const GroupBall& outer);

/// Closed arcs of radius at most delta (1 - 2^-20) around each ball point,
/// each containing its point. delta must be a power of two >= 2^-40.
ArcSet neighbourhood_arcs(const GroupBall& ball, const Rational& delta);

struct StagePlan {
  int t = 0;
  std::int64_t M = 0;
  Rational delta;
  ArcSet V;
  Rational eps;
  std::int64_t N = 0;
  /// Certified gap bounds used for delta (absent when vacuous).
  Rational gap;
  std::optional<Rational> forward_gap;
  std::optional<Rational> backward_gap;
};

struct PreviousStage {
  const GroupBall* ball = nullptr;
  Rational delta;
};

/// Chooses delta_t = 2^-e as large as possible with 2 delta < min_gap(ball),
/// delta + delta / 2 < cross_gap(ball, next) (next stage halves delta), and,
/// given a previous stage, delta <= delta_prev / 2 and
/// delta + delta_prev < cross_gap(prev, ball). Builds V_t.
StagePlan plan_stage(int t, const GroupBall& ball, const GroupBall* next,
                     const std::optional<PreviousStage>& prev);

/// Smallest number of members whose constraint set lies inside V, reported as
/// the member value (so H_{N,eps} ends with it). Returns 1 if V is the circle.
std::int64_t find_N(const std::vector<TorusPoint>& alphas, const Rational& eps,
                    const ArcSet& V, const Budgets& budgets = {});

/// A ball size M such that the arcs of { x : ||x H_{N,eps}|| <= 1/6 } each
/// hold a point of the M-ball and are shorter than its gap, for some probe N.
std::int64_t find_M(const std::vector<TorusPoint>& alphas, const Rational& eps,
                    const Budgets& budgets = {});

}  // namespace bohrseq
