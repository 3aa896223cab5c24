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
#include <string>
#include <vector>

#include "bohrseq/arcset.hpp"
#include "bohrseq/builder.hpp"
#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

/// What the verifier needs from a built stage.
struct StageData {
  int t = 0;
  std::vector<std::int64_t> S;
  Bounds term;
};

StageData stage_data(const StageArtifacts& stage);

struct MemberRow {
  int stage = 0;
  std::int64_t n = 0;
  Rational norm_hi;
  Rational partial_sum_hi;
};

struct MemberStageRow {
  int stage = 0;
  Rational contribution_hi;
  Rational partial_sum_hi;
  Bounds term;
  bool tail = false;         // stage >= tail_m
  bool within_term = false;  // contribution_hi <= term.lo
};

struct NonmemberRow {
  int stage = 0;
  std::optional<std::int64_t> witness_n;
  Rational witness_norm_lo;  // best certified lower bound in the stage
};

struct VerificationReport {
  TorusPoint beta;
  std::string mode;
  Rational r;
  // member mode
  int t0 = 1;
  int tail_m = 0;
  std::vector<MemberRow> member_rows;
  std::vector<MemberStageRow> stage_rows;
  Rational tail_term_sum_hi;        // sum of term_hi over built tail stages
  Rational combination_factor_hi;   // sum_j |k_j|^r
  int tail_stages = 0;
  bool tail_within_terms = false;
  // nonmember mode
  Rational threshold;
  std::vector<NonmemberRow> nonmember_rows;
  std::vector<int> witness_stages;
  std::string verdict;
};

/// beta must equal sum_j combination[j] * generators[j]; r in (0, 1].
VerificationReport verify_member(const std::vector<StageData>& stages,
                                 const std::vector<TorusPoint>& generators,
                                 const TorusPoint& beta, const std::vector<Integer>& combination,
                                 const Rational& r, const Budgets& budgets = {});

VerificationReport verify_nonmember(const std::vector<StageData>& stages, const TorusPoint& beta,
                                    const Rational& threshold = Rational(1, 6),
                                    const Budgets& budgets = {});

/// Naive exact enumeration of H_{N,eps}; rational generators only.
std::vector<std::int64_t> oracle_bohr(const std::vector<Rational>& alphas, const Rational& eps,
                                      std::int64_t N);

/// Membership of each grid point k / grid_q, k = 0..grid_q-1, by a linear
/// scan over the arcs.
std::vector<bool> oracle_arcs_membership(const ArcSet& arcs, std::int64_t grid_q);

}  // namespace bohrseq
