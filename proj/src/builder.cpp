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

#include "bohrseq/builder.hpp"

#include <algorithm>
#include <exception>

#include "bohrseq/arcset.hpp"
#include "bohrseq/certified.hpp"
#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

constexpr std::size_t kTrialMembers = 16;
constexpr int kBootstrapRounds = 4;
constexpr long kSumPrecision = 256;

NormInterval norm_for_sum(std::int64_t n, const TorusPoint& a) {
  Integer nn(static_cast<long>(n));
  return scaled_norm(nn, a, kSumPrecision + bit_length(nn));
}

std::int64_t checked_add(std::int64_t a, i128 b) {
  i128 s = static_cast<i128>(a) + b;
  if (s > (i128{1} << 62)) throw BudgetExhaustedError("thin set element exceeds 2^62");
  return static_cast<std::int64_t>(s);
}

std::vector<TorusPoint> prefix(const GroupSpec& g, int t) {
  std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(t), g.generators.size());
  return std::vector<TorusPoint>(g.generators.begin(), g.generators.begin() + k);
}

std::optional<std::int64_t> trial_c1(const std::vector<TorusPoint>& alphas, const Rational& eps,
                                     const Budgets& budgets) {
  BohrKernel kernel(alphas, eps, budgets);
  std::vector<std::int64_t> members;
  std::int64_t scanned = 0;
  for (std::int64_t N = 1; N <= budgets.probe_limit; N *= 2) {
    kernel.scan(scanned + 1, N, members);
    scanned = N;
    if (members.size() >= kTrialMembers) {
      BohrSet h{alphas, eps, N, members};
      return decompose_gap(h, budgets).c1;
    }
  }
  return std::nullopt;
}

}  // namespace

Rational anchor_threshold(const Rational& eps, const Rational& r, std::int64_t N,
                          std::int64_t c1) {
  Integer arg = Integer(8) * Integer(static_cast<long>(c1)) * Integer(static_cast<long>(c1)) *
                Integer(static_cast<long>(N));
  Rational p_hi = pow_up(log2_up(Rational(arg)), Rational(1) / r);
  return eps / p_hi;
}

std::int64_t choose_anchor_m(const std::vector<TorusPoint>& alphas, const Rational& eps,
                             const Rational& r, std::int64_t N, std::int64_t U,
                             std::int64_t c1, const Budgets& budgets) {
  if (r <= 0 || r > 1) throw InvalidInputError("anchor needs 0 < r <= 1");
  if (c1 < 1 || N < 1) throw InvalidInputError("anchor needs c1 >= 1 and N >= 1");
  Rational theta = anchor_threshold(eps, r, N, c1);
  BohrKernel kernel(alphas, theta, budgets);
  auto m = kernel.first_member(U + 1, U + budgets.anchor_scan);
  if (!m) {
    throw BudgetExhaustedError("anchor search found no m in (" + std::to_string(U) + ", " +
                               std::to_string(U + budgets.anchor_scan) + "]");
  }
  return *m;
}

ThinSet build_thin_set_from_cover(const std::vector<TorusPoint>& alphas, const Rational& eps,
                                  const Rational& r, std::int64_t N, std::int64_t U,
                                  const GapCover& cover, const Budgets& budgets) {
  ThinSet s;
  s.U = U;
  s.eps = eps;
  s.r = r;
  s.source_cover = cover;
  s.anchor_threshold = anchor_threshold(eps, r, N, cover.c1);
  s.m = choose_anchor_m(alphas, eps, r, N, U, cover.c1, budgets);
  const i128 R = cover.R();
  for (const Generator& g : cover.generators) {
    i128 step = g.n < 0 ? -static_cast<i128>(g.n) : g.n;
    i128 cap = 8 * static_cast<i128>(g.K) * R;
    for (i128 p = 1; p <= cap; p *= 2) s.members.push_back(checked_add(s.m, p * step));
  }
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());

  const Integer c1(static_cast<long>(cover.c1));
  const Integer c2 = c1 + 16 * c1 * c1;
  s.bound_ii = Rational(c2) * pow_down(eps, r) / (pow_up(Rational(2), r) - 1);
  s.certificate_ii = true;
  for (const TorusPoint& a : alphas) {
    Rational sum = 0;
    for (std::int64_t n : s.members) sum += pow_up(norm_for_sum(n, a).hi, r);
    s.sums_hi.push_back(sum);
    if (sum > s.bound_ii) s.certificate_ii = false;
  }
  return s;
}

ThinSet build_thin_set(const std::vector<TorusPoint>& alphas, const Rational& eps,
                       const Rational& r, std::int64_t N, std::int64_t U,
                       const Budgets& budgets) {
  BohrSet h = enumerate_bohr(alphas, eps, N, budgets);
  if (h.members.empty()) throw InvalidInputError("H_{N,eps} is empty; no cover to build on");
  GapCover cover = decompose_gap(h, budgets);
  return build_thin_set_from_cover(alphas, eps, r, N, U, cover, budgets);
}

Rational epsilon_schedule(int t, std::int64_t c1_estimate) {
  if (t < 1 || c1_estimate < 1) throw InvalidInputError("epsilon_schedule needs t, c1 >= 1");
  const Integer c1(static_cast<long>(c1_estimate));
  const Integer c2 = c1 + 16 * c1 * c1;
  const Rational inv_t(1, t);
  Rational base = (pow_down(Rational(2), inv_t) - 1) * pow2(-t) / Rational(c2);
  Rational target = pow_down(base, Rational(t));
  Rational half_inv(Integer(1), 2 * c1);
  if (half_inv < target) target = half_inv;
  long e = 1;
  while (pow2(-e) > target) ++e;
  return pow2(-e);
}

Bounds stage_term(int t, std::int64_t c2, const Rational& eps) {
  const Rational inv_t(1, t);
  const Rational C2(c2);
  Bounds b;
  b.hi = C2 * pow_up(eps, inv_t) / (pow_down(Rational(2), inv_t) - 1);
  b.lo = C2 * pow_down(eps, inv_t) / (pow_up(Rational(2), inv_t) - 1);
  return b;
}

struct SequenceStream::Prepared {
  int t = 0;
  std::vector<TorusPoint> alphas;
  std::int64_t c1_hat = 1;
  Rational eps;
  std::int64_t M = 1;
  std::shared_ptr<const GroupBall> ball;
};

SequenceStream::SequenceStream(GroupSpec group, int stages, Budgets budgets)
    : group_(std::move(group)), stages_(stages), budgets_(budgets) {
  if (group_.generators.empty()) throw InvalidInputError("group needs at least one generator");
  if (stages_ < 1) throw InvalidInputError("stage count must be >= 1");
}

SequenceStream::~SequenceStream() = default;

SequenceStream::Prepared SequenceStream::prepare(int t, std::int64_t c1_hat,
                                                 std::int64_t M_floor, bool bootstrap) const {
  Prepared p;
  p.t = t;
  p.alphas = prefix(group_, t);
  if (bootstrap) {
    for (int round = 0; round < kBootstrapRounds; ++round) {
      auto c = trial_c1(p.alphas, epsilon_schedule(t, c1_hat), budgets_);
      if (!c || *c <= c1_hat) break;
      c1_hat = *c;
    }
  }
  p.c1_hat = c1_hat;
  p.eps = epsilon_schedule(t, c1_hat);
  p.M = std::max(find_M(p.alphas, p.eps, budgets_), M_floor);
  p.ball = std::make_shared<const GroupBall>(GroupBall::enumerate(p.alphas, p.M, budgets_));
  return p;
}

std::optional<StageArtifacts> SequenceStream::next() {
  if (pending_) std::rethrow_exception(pending_);
  if (t_ >= stages_) return std::nullopt;
  const int t = t_ + 1;
  const std::int64_t M_floor = prev_ball_ ? prev_ball_->M() : 1;
  if (!current_) current_ = std::make_unique<Prepared>(prepare(t, prev_c1_, M_floor, true));

  std::unique_ptr<Prepared> ahead;
  std::exception_ptr ahead_error;
  try {
    ahead = std::make_unique<Prepared>(prepare(t + 1, current_->c1_hat, current_->M, true));
  } catch (const Error&) {
    ahead_error = std::current_exception();
  }

  StageArtifacts art;
  art.t = t;
  art.alphas = current_->alphas;
  std::optional<PreviousStage> prev;
  if (prev_ball_) prev = PreviousStage{prev_ball_.get(), prev_delta_};
  for (int attempt = 0;; ++attempt) {
    const Prepared& cur = *current_;
    art.plan = plan_stage(t, *cur.ball, ahead ? ahead->ball.get() : nullptr, prev);
    art.plan.eps = cur.eps;
    art.plan.M = cur.M;
    art.plan.N = find_N(cur.alphas, cur.eps, art.plan.V, budgets_);
    art.H = enumerate_bohr(cur.alphas, cur.eps, art.plan.N, budgets_);
    if (art.H.members.empty()) {
      throw BudgetExhaustedError("stage " + std::to_string(t) + ": empty Bohr set at N");
    }
    art.cover = decompose_gap(art.H, budgets_);
    if (art.cover.c1 <= cur.c1_hat) break;
    if (attempt == 1) {
      throw BudgetExhaustedError("stage " + std::to_string(t) + ": realized c1 = " +
                                 std::to_string(art.cover.c1) + " exceeds the estimate " +
                                 std::to_string(cur.c1_hat) + " after one rebuild");
    }
    ++art.rebuilds;
    current_ = std::make_unique<Prepared>(prepare(t, art.cover.c1, M_floor, false));
    if (ahead && ahead->M < current_->M) {
      try {
        ahead = std::make_unique<Prepared>(prepare(t + 1, current_->c1_hat, current_->M, true));
      } catch (const Error&) {
        ahead.reset();
        ahead_error = std::current_exception();
      }
    }
  }

  const Prepared& cur = *current_;
  art.ball = cur.ball;
  art.c1 = art.cover.c1;
  art.c1_estimate = cur.c1_hat;
  art.c2 = art.c1 + 16 * art.c1 * art.c1;
  const Rational r(1, t);
  art.S = build_thin_set_from_cover(cur.alphas, cur.eps, r, art.plan.N, prev_max_, art.cover,
                                    budgets_);
  art.term = stage_term(t, art.c2, cur.eps);
  art.terminal = !ahead;

  StageCertificates& c = art.certificates;
  c.ii = art.S.certificate_ii;
  c.ordering = art.S.members.front() > prev_max_;
  c.term = art.term.hi <= pow2(-t);
  c.eps_c1 = cur.eps * art.c1 < 1;
  c.find_n = art.plan.V.contains(solve_small_norm_set(art.H.members, Rational(1, 6), budgets_));
  {
    Rational rhs = pow_down(cur.eps, r) /
                   log2_up(Rational(8 * art.c1 * art.c1) * Rational(art.plan.N));
    c.anchor = true;
    for (const TorusPoint& a : cur.alphas) {
      if (pow_up(norm_for_sum(art.S.m, a).hi, r) > rhs) c.anchor = false;
    }
  }

  prev_ball_ = cur.ball;
  prev_delta_ = art.plan.delta;
  prev_max_ = art.S.members.back();
  prev_c1_ = art.c1;
  t_ = t;
  current_ = std::move(ahead);
  if (!current_ && t < stages_) pending_ = ahead_error;
  return art;
}

StreamResult stream_sequence(const GroupSpec& group, int T, const Budgets& budgets) {
  StreamResult out;
  try {
    SequenceStream stream(group, T, budgets);
    while (auto stage = stream.next()) out.stages.push_back(std::move(*stage));
    out.complete = true;
  } catch (const Error& e) {
    out.error = e.what();
    out.exit_code = exit_code_for(e);
  }
  return out;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const PrecisionCapError*>(&e)) return 2;
  if (dynamic_cast<const BudgetExhaustedError*>(&e)) return 3;
  if (dynamic_cast<const InvalidInputError*>(&e)) return 4;
  return 1;
}

}  // namespace bohrseq
