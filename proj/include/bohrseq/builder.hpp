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
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bohrseq/approx.hpp"
#include "bohrseq/bohr.hpp"
#include "bohrseq/config.hpp"
#include "bohrseq/gap_cover.hpp"
#include "bohrseq/rational.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

struct ThinSet {
  std::int64_t m = 0;
  std::int64_t U = 0;
  std::vector<std::int64_t> members;
  GapCover source_cover;
  Rational eps;
  Rational r;
  /// Lower bound on C2 eps^r / (2^r - 1) with C2 = c1 + 16 c1^2.
  Rational bound_ii;
  /// Upper bounds on sum_{n in S} ||n alpha_j||^r, one per generator.
  std::vector<Rational> sums_hi;
  bool certificate_ii = false;
  /// The rational lower bound used for the anchor condition.
  Rational anchor_threshold;
};

/// eps / P where P >= log2(8 c1^2 N)^(1/r).
Rational anchor_threshold(const Rational& eps, const Rational& r, std::int64_t N,
                          std::int64_t c1);

std::int64_t choose_anchor_m(const std::vector<TorusPoint>& alphas, const Rational& eps,
                             const Rational& r, std::int64_t N, std::int64_t U,
                             std::int64_t c1, const Budgets& budgets = {});

ThinSet build_thin_set_from_cover(const std::vector<TorusPoint>& alphas, const Rational& eps,
                                  const Rational& r, std::int64_t N, std::int64_t U,
                                  const GapCover& cover, const Budgets& budgets = {});

/// Enumerates H_{N,eps}, decomposes it and builds S on top of the cover.
ThinSet build_thin_set(const std::vector<TorusPoint>& alphas, const Rational& eps,
                       const Rational& r, std::int64_t N, std::int64_t U,
                       const Budgets& budgets = {});

/// Largest power of two <= min(1/(2 c1), ((2^(1/t) - 1) 2^-t / C2)^t) with
/// C2 = c1 + 16 c1^2.
Rational epsilon_schedule(int t, std::int64_t c1_estimate);

struct Bounds {
  Rational lo;
  Rational hi;
};

/// Enclosure of C2 eps^(1/t) / (2^(1/t) - 1).
Bounds stage_term(int t, std::int64_t c2, const Rational& eps);

struct StageCertificates {
  bool ii = false;
  bool ordering = false;
  bool term = false;      // term_hi <= 2^-t
  bool eps_c1 = false;    // eps < 1 / c1
  bool find_n = false;    // constraint set at N inside V
  bool anchor = false;    // ||m alpha_j||^(1/t) <= eps^(1/t) / log2(8 c1^2 N)
  bool all() const { return ii && ordering && term && eps_c1 && find_n && anchor; }
};

struct StageArtifacts {
  int t = 0;
  std::vector<TorusPoint> alphas;
  StagePlan plan;
  std::shared_ptr<const GroupBall> ball;
  BohrSet H;
  GapCover cover;
  ThinSet S;
  std::int64_t c1 = 1;
  std::int64_t c1_estimate = 1;
  std::int64_t c2 = 17;
  Bounds term;
  bool terminal = false;  // built without a lookahead ball
  int rebuilds = 0;
  StageCertificates certificates;
};

struct GroupSpec {
  std::vector<TorusPoint> generators;
};

/// Produces stages one at a time. Stage t uses the first min(t, s)
/// generators and is finalized once the stage t + 1 ball is known.
class SequenceStream {
 public:
  SequenceStream(GroupSpec group, int stages, Budgets budgets = {});
  ~SequenceStream();

  /// The next stage, or nullopt after the last requested one. Failures are
  /// thrown; stages already returned stay valid.
  std::optional<StageArtifacts> next();

 private:
  struct Prepared;
  Prepared prepare(int t, std::int64_t c1_hat, std::int64_t M_floor, bool bootstrap) const;

  GroupSpec group_;
  int stages_;
  Budgets budgets_;
  int t_ = 0;
  std::unique_ptr<Prepared> current_;
  std::exception_ptr pending_;
  std::shared_ptr<const GroupBall> prev_ball_;
  Rational prev_delta_;
  std::int64_t prev_max_ = 0;
  std::int64_t prev_c1_ = 1;
};

struct StreamResult {
  std::vector<StageArtifacts> stages;
  bool complete = false;
  std::string error;
  int exit_code = 0;
};

/// Runs the stream to T stages or to the first failure.
StreamResult stream_sequence(const GroupSpec& group, int T, const Budgets& budgets = {});

/// Exit code used by the CLI for a library error.
int exit_code_for(const std::exception& e);

}  // namespace bohrseq
