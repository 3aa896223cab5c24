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

#include "bohrseq/harness.hpp"

#include <algorithm>

#include "bohrseq/certified.hpp"
#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

constexpr long kScanPrecision = 160;

NormInterval enclosure(std::int64_t n, const TorusPoint& beta, long extra = 0) {
  Integer nn(static_cast<long>(n));
  return scaled_norm(nn, beta, kScanPrecision + extra + bit_length(nn));
}

}  // namespace

StageData stage_data(const StageArtifacts& stage) {
  return StageData{stage.t, stage.S.members, stage.term};
}

VerificationReport verify_member(const std::vector<StageData>& stages,
                                 const std::vector<TorusPoint>& generators,
                                 const TorusPoint& beta, const std::vector<Integer>& combination,
                                 const Rational& r, const Budgets& budgets) {
  (void)budgets;
  if (r <= 0 || r > 1) throw InvalidInputError("member verification needs 0 < r <= 1");
  if (combination.size() > generators.size()) {
    throw InvalidInputError("combination is longer than the generator list");
  }
  std::vector<TorusPoint> used(generators.begin(), generators.begin() + combination.size());
  if (TorusPoint::combination(used, combination) != beta) {
    throw InvalidInputError("beta does not equal the declared combination of generators");
  }
  VerificationReport rep;
  rep.beta = beta;
  rep.mode = "member";
  rep.r = r;
  rep.t0 = 1;
  for (std::size_t j = 0; j < combination.size(); ++j) {
    if (combination[j] != 0) rep.t0 = static_cast<int>(j + 1);
    if (combination[j] != 0) rep.combination_factor_hi += pow_up(Rational(abs(combination[j])), r);
  }
  Rational bound = Rational(rep.t0);
  if (Rational(1) / r > bound) bound = Rational(1) / r;
  rep.tail_m = static_cast<int>(floor_of(bound).get_si()) + 1;

  Rational partial = 0;
  rep.tail_within_terms = true;
  for (const StageData& st : stages) {
    MemberStageRow row;
    row.stage = st.t;
    row.term = st.term;
    for (std::int64_t n : st.S) {
      Rational hi = enclosure(n, beta).hi;
      Rational contrib = hi == 0 ? Rational(0) : pow_up(hi, r);
      row.contribution_hi += contrib;
      partial += contrib;
      rep.member_rows.push_back({st.t, n, hi, partial});
    }
    row.partial_sum_hi = partial;
    row.tail = st.t >= rep.tail_m;
    row.within_term = row.contribution_hi <= st.term.lo;
    if (row.tail) {
      ++rep.tail_stages;
      rep.tail_term_sum_hi += st.term.hi;
      if (!row.within_term) rep.tail_within_terms = false;
    }
    rep.stage_rows.push_back(row);
  }
  if (rep.tail_stages == 0) {
    rep.tail_within_terms = false;
    rep.verdict = "no built stage reaches the tail m = " + std::to_string(rep.tail_m);
  } else if (rep.tail_within_terms) {
    rep.verdict = "tail stage sums bounded by term_t for t >= " + std::to_string(rep.tail_m);
  } else {
    rep.verdict = "a tail stage sum exceeds its term_t bound";
  }
  return rep;
}

VerificationReport verify_nonmember(const std::vector<StageData>& stages, const TorusPoint& beta,
                                    const Rational& threshold, const Budgets& budgets) {
  if (threshold <= 0 || threshold > Rational(1, 2)) {
    throw InvalidInputError("witness threshold must lie in (0, 1/2]");
  }
  VerificationReport rep;
  rep.beta = beta;
  rep.mode = "nonmember";
  rep.threshold = threshold;
  for (const StageData& st : stages) {
    NonmemberRow row;
    row.stage = st.t;
    bool have = false;
    for (std::int64_t n : st.S) {
      NormInterval v = enclosure(n, beta);
      if (v.lo < threshold && v.hi >= threshold) {
        v = tight_norm(Integer(static_cast<long>(n)), beta, pow2(-220), budgets);
      }
      if (!have || v.lo > row.witness_norm_lo) {
        row.witness_norm_lo = v.lo;
        have = true;
        if (v.lo >= threshold) row.witness_n = n;
      }
    }
    if (row.witness_n) rep.witness_stages.push_back(st.t);
    rep.nonmember_rows.push_back(row);
  }
  if (rep.witness_stages.empty()) {
    rep.verdict = "no certified witness";
  } else {
    rep.verdict = "witnesses in " + std::to_string(rep.witness_stages.size()) + " stage(s)";
  }
  return rep;
}

std::vector<std::int64_t> oracle_bohr(const std::vector<Rational>& alphas, const Rational& eps,
                                      std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= N; ++n) {
    bool in = true;
    for (const Rational& a : alphas) {
      Rational x = a * Rational(Integer(static_cast<long>(n)));
      Integer fl = floor_of(x);
      Rational f = x - fl;
      Rational d = f <= Rational(1, 2) ? f : Rational(1 - f);
      if (d > eps) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(n);
  }
  return out;
}

std::vector<bool> oracle_arcs_membership(const ArcSet& arcs, std::int64_t grid_q) {
  if (grid_q < 1) throw InvalidInputError("grid_q must be >= 1");
  std::vector<Arc> list = arcs.arcs();
  std::vector<bool> out(static_cast<std::size_t>(grid_q), false);
  for (std::int64_t k = 0; k < grid_q; ++k) {
    Rational x(Integer(static_cast<long>(k)), Integer(static_cast<long>(grid_q)));
    x.canonicalize();
    for (const Arc& a : list) {
      bool in = a.wrap ? (x >= a.lo || x <= a.hi) : (x >= a.lo && x <= a.hi);
      if (in) {
        out[static_cast<std::size_t>(k)] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace bohrseq
