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

#include "bohrseq/approx.hpp"

#include <algorithm>

#include "bohrseq/bohr.hpp"
#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

const Rational kSixth(1, 6);
constexpr long kMaxDeltaExponent = 40;

std::string describe(const Arc& a) {
  return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]" + (a.wrap ? " (wrapping)" : "");
}

// Incrementally maintained { x : ||n x|| <= 1/6 for every member n <= N }.
class ConstraintProbe {
 public:
  ConstraintProbe(const std::vector<TorusPoint>& alphas, const Rational& eps,
                  const Budgets& budgets)
      : kernel_(alphas, eps, budgets), budgets_(budgets), set_(ArcSet::full()) {}

  void extend_to(std::int64_t N) {
    if (N <= scanned_) return;
    std::size_t before = members_.size();
    kernel_.scan(scanned_ + 1, N, members_);
    scanned_ = N;
    for (std::size_t i = before; i < members_.size(); ++i) {
      if (set_.empty()) break;
      set_ = set_.intersect_constraint(members_[i], kSixth, budgets_);
    }
    applied_ = members_.size();
  }

  const ArcSet& set() const { return set_; }
  const std::vector<std::int64_t>& members() const { return members_; }

 private:
  BohrKernel kernel_;
  Budgets budgets_;
  std::vector<std::int64_t> members_;
  std::int64_t scanned_ = 0;
  std::size_t applied_ = 0;
  ArcSet set_;
};

}  // namespace

StagePlan plan_stage(int t, const GroupBall& ball, const GroupBall* next,
                     const std::optional<PreviousStage>& prev) {
  StagePlan plan;
  plan.t = t;
  plan.M = ball.M();
  plan.gap = ball.size() >= 2 ? min_gap(ball) : Rational(1, 2);
  if (next) plan.forward_gap = cross_gap(ball, *next);
  if (prev) {
    plan.backward_gap = cross_gap(*prev->ball, ball);
    if (plan.backward_gap && *plan.backward_gap <= prev->delta) {
      throw BudgetExhaustedError("stage " + std::to_string(t) +
                                 ": previous delta leaves no room before the new ball points");
    }
  }
  for (long e = 1; e <= kMaxDeltaExponent; ++e) {
    Rational d = pow2(-e);
    if (2 * d >= plan.gap) continue;
    if (plan.forward_gap && d + d / 2 >= *plan.forward_gap) continue;
    if (prev) {
      if (d > prev->delta / 2) continue;
      if (plan.backward_gap && d + prev->delta >= *plan.backward_gap) continue;
    }
    plan.delta = d;
    plan.V = neighbourhood_arcs(ball, d);
    return plan;
  }
  throw PrecisionCapError("stage " + std::to_string(t) + ": delta would fall below 2^-40");
}

std::int64_t find_N(const std::vector<TorusPoint>& alphas, const Rational& eps,
                    const ArcSet& V, const Budgets& budgets) {
  if (V.is_full()) return 1;
  ConstraintProbe probe(alphas, eps, budgets);
  ArcSet before = ArcSet::full();
  std::size_t before_count = 0;
  for (std::int64_t N = 1;; N = std::min<std::int64_t>(2 * N, budgets.probe_limit)) {
    probe.extend_to(N);
    if (V.contains(probe.set())) {
      // The smallest member count in (before_count, count] that already fits.
      const auto& m = probe.members();
      std::size_t lo = before_count, hi = m.size();
      while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        ArcSet s = before;
        for (std::size_t i = before_count; i < mid && !s.empty(); ++i) {
          s = s.intersect_constraint(m[i], kSixth, budgets);
        }
        if (V.contains(s)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return m[hi - 1];
    }
    if (N >= budgets.probe_limit) {
      std::string where = "none";
      for (const Arc& a : probe.set().arcs()) {
        Rational hi = a.hi;
        if (a.wrap) hi += 1;
        if (!V.contains(ArcSet::arc(a.lo, hi))) {
          where = describe(a);
          break;
        }
      }
      throw BudgetExhaustedError("find_N: no N <= " + std::to_string(budgets.probe_limit) +
                                 " certifies containment; uncovered arc " + where);
    }
    before = probe.set();
    before_count = probe.members().size();
  }
}

std::int64_t find_M(const std::vector<TorusPoint>& alphas, const Rational& eps,
                    const Budgets& budgets) {
  ConstraintProbe probe(alphas, eps, budgets);
  const std::size_t t = alphas.size();
  auto ball_size = [&](std::int64_t M) {
    long double s = 1;
    for (std::size_t j = 0; j < t; ++j) s *= static_cast<long double>(2 * M + 1);
    return s;
  };
  std::size_t last_arcs = 0;
  for (std::int64_t N = 1;; N = std::min<std::int64_t>(2 * N, budgets.probe_limit)) {
    probe.extend_to(N);
    std::vector<Arc> arcs = probe.set().arcs();
    last_arcs = arcs.size();
    if (!arcs.empty() &&
        static_cast<long double>(arcs.size()) <= static_cast<long double>(budgets.ball_points)) {
      std::int64_t lo_m = 0, hi_m = 1;
      while (ball_size(hi_m) < static_cast<long double>(arcs.size())) hi_m *= 2;
      while (hi_m - lo_m > 1) {
        std::int64_t mid = lo_m + (hi_m - lo_m) / 2;
        (ball_size(mid) < static_cast<long double>(arcs.size()) ? lo_m : hi_m) = mid;
      }
      const std::int64_t M0 = hi_m;
      // Fixed-point windows of the arcs.
      std::vector<std::pair<u128, u128>> windows;  // [lo, hi], possibly wrapping
      for (const Arc& a : arcs) {
        Integer lo = ceil_of(a.lo * pow2(128));
        Integer hi = floor_of(a.hi * pow2(128));
        if (a.hi == 1) hi = Integer(from_u128(~u128{0}));
        windows.emplace_back(to_u128(lo), to_u128(hi));
      }
      for (std::int64_t M = M0, tries = 0; tries < 3; M *= 4, ++tries) {
        if (ball_size(M) > static_cast<long double>(budgets.ball_points)) break;
        GroupBall ball = GroupBall::enumerate(alphas, M, budgets);
        std::vector<u128> pos(ball.size());
        for (std::size_t i = 0; i < ball.size(); ++i) pos[i] = ball.position(i);
        std::int64_t need = 1;
        bool all_hit = true;
        // Lowest level among points certified inside the window starting at
        // lo of length len (measured forward around the circle).
        auto best_in = [&](u128 lo, u128 len) {
          std::int64_t best = -1;
          auto consider = [&](std::vector<u128>::const_iterator it,
                              std::vector<u128>::const_iterator stop) {
            for (; it != stop; ++it) {
              std::size_t i = static_cast<std::size_t>(it - pos.cbegin());
              u128 d = *it - lo;
              if (d > len) break;
              u128 e = ball.error(i);
              if (d < e || len - d < e) continue;
              if (best < 0 || ball.level(i) < best) best = ball.level(i);
            }
          };
          consider(std::lower_bound(pos.cbegin(), pos.cend(), lo), pos.cend());
          if (lo + len < lo) consider(pos.cbegin(), pos.cend());
          return best;
        };
        for (std::size_t a = 0; a < arcs.size(); ++a) {
          auto [lo, hi] = windows[a];
          std::int64_t best = best_in(lo, hi - lo);
          if (best < 0) {
            all_hit = false;
            break;
          }
          need = std::max(need, best);
        }
        if (!all_hit) continue;
        GroupBall chosen = GroupBall::enumerate(alphas, need, budgets);
        Rational gap = chosen.size() >= 2 ? min_gap(chosen) : Rational(1);
        bool localized = true;
        for (const Arc& a : arcs) {
          Rational len = a.hi - a.lo;
          if (a.wrap) len += 1;
          if (len >= gap) {
            localized = false;
            break;
          }
        }
        if (localized) return need;
        break;
      }
    }
    if (N >= budgets.probe_limit) {
      throw BudgetExhaustedError("find_M: arcs not localized by N = " +
                                 std::to_string(budgets.probe_limit) + " (" +
                                 std::to_string(last_arcs) + " arcs remain)");
    }
  }
}

}  // namespace bohrseq
