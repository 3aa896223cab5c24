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


#include "doctest.h"

#include "bohrseq/errors.hpp"
#include "bohrseq/harness.hpp"

using namespace bohrseq;

namespace {

std::vector<StageData> half_stages() {
  static const std::vector<StageData> cached = [] {
    StreamResult r = stream_sequence({{TorusPoint::rational(1, 2)}}, 3);
    std::vector<StageData> out;
    for (const StageArtifacts& s : r.stages) out.push_back(stage_data(s));
    return out;
  }();
  return cached;
}

}  // namespace

TEST_CASE("member report for beta = 1/2") {
  auto stages = half_stages();
  REQUIRE(stages.size() == 3);
  VerificationReport rep = verify_member(stages, {TorusPoint::rational(1, 2)},
                                         TorusPoint::rational(1, 2), {Integer(1)}, Rational(1));
  CHECK(rep.t0 == 1);
  CHECK(rep.tail_m == 2);
  CHECK(rep.tail_stages == 2);
  CHECK(rep.tail_within_terms);
  CHECK(rep.tail_term_sum_hi <= 1);
  Rational prev = 0;
  for (const MemberRow& row : rep.member_rows) {
    // exact: ||n/2|| is 0 or 1/2
    Rational want = (row.n % 2 == 0) ? Rational(0) : Rational(1, 2);
    CHECK(row.norm_hi == want);
    CHECK(row.partial_sum_hi >= prev);
    prev = row.partial_sum_hi;
  }
}

TEST_CASE("beta = 0 gives zero sums") {
  auto stages = half_stages();
  VerificationReport rep = verify_member(stages, {TorusPoint::rational(1, 2)},
                                         TorusPoint::rational(0, 1), {Integer(0)}, Rational(1, 3));
  for (const MemberRow& row : rep.member_rows) {
    CHECK(row.norm_hi == 0);
    CHECK(row.partial_sum_hi == 0);
  }
  CHECK(rep.tail_m == 4);
  CHECK(rep.tail_stages == 0);
  CHECK_FALSE(rep.tail_within_terms);
}

TEST_CASE("declared combination must match beta") {
  auto stages = half_stages();
  CHECK_THROWS_AS(verify_member(stages, {TorusPoint::rational(1, 2)}, TorusPoint::rational(1, 3),
                                {Integer(1)}, Rational(1)),
                  InvalidInputError);
  CHECK_THROWS_AS(verify_member(stages, {TorusPoint::rational(1, 2)}, TorusPoint::rational(1, 2),
                                {Integer(1)}, Rational(0)),
                  InvalidInputError);
}

TEST_CASE("non-member 1/3 has witnesses early") {
  auto stages = half_stages();
  VerificationReport rep = verify_nonmember(stages, TorusPoint::rational(1, 3));
  REQUIRE_FALSE(rep.witness_stages.empty());
  CHECK(rep.witness_stages.front() <= 3);
  for (const NonmemberRow& row : rep.nonmember_rows) {
    if (!row.witness_n) continue;
    CHECK(*row.witness_n % 3 != 0);
    CHECK(row.witness_norm_lo == Rational(1, 3));
  }
}

TEST_CASE("generator itself has no witnesses") {
  auto stages = half_stages();
  VerificationReport rep = verify_nonmember(stages, TorusPoint::rational(1, 2));
  CHECK(rep.witness_stages.empty());
}

TEST_CASE("irrational witnesses survive re-evaluation") {
  std::vector<StageData> stages{{1, {1, 2, 3, 4, 5, 6, 7}, {}}};
  TorusPoint s3 = TorusPoint::surd(3);
  VerificationReport rep = verify_nonmember(stages, s3);
  REQUIRE(rep.nonmember_rows.size() == 1);
  REQUIRE(rep.nonmember_rows[0].witness_n.has_value());
  std::int64_t n = *rep.nonmember_rows[0].witness_n;
  CHECK(rep.nonmember_rows[0].witness_norm_lo >= Rational(1, 6));
  NormInterval fine = scaled_norm(Integer(static_cast<long>(n)), s3, 600);
  CHECK(fine.lo >= Rational(1, 6));
}

TEST_CASE("oracle arcs membership rejects bad grids") {
  CHECK_THROWS_AS(oracle_arcs_membership(ArcSet::full(), 0), InvalidInputError);
}
