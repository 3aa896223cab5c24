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

#include "bohrseq/builder.hpp"
#include "bohrseq/errors.hpp"

using namespace bohrseq;

TEST_CASE("anchor examples") {
  std::vector<TorusPoint> third{TorusPoint::rational(1, 3)};
  Rational theta = anchor_threshold(Rational(1, 10), Rational(1), 10, 1);
  CHECK(theta > Rational(158, 10000));
  CHECK(theta < Rational(159, 10000));
  CHECK(choose_anchor_m(third, Rational(1, 10), Rational(1), 10, 100, 1) == 102);
  CHECK(choose_anchor_m(third, Rational(1, 10), Rational(1), 10, 200, 1) == 201);
  CHECK(choose_anchor_m({TorusPoint::rational(0, 1)}, Rational(1, 7), Rational(1, 3), 50, 77, 3) ==
        78);
  CHECK(choose_anchor_m({TorusPoint::surd(2)}, Rational(1, 10), Rational(1, 2), 100, 0, 2) == 985);
}

TEST_CASE("thin set examples") {
  std::vector<TorusPoint> third{TorusPoint::rational(1, 3)};
  ThinSet s = build_thin_set(third, Rational(1, 10), Rational(1), 10, 100);
  CHECK(s.m == 102);
  CHECK(s.members == std::vector<std::int64_t>{105, 108, 114, 126, 150});
  CHECK(s.certificate_ii);
  ThinSet u = build_thin_set(third, Rational(1, 10), Rational(1), 10, 200);
  CHECK(u.m == 201);
  CHECK(u.members == std::vector<std::int64_t>{204, 207, 213, 225, 249});

  BohrSet h = enumerate_bohr({TorusPoint::rational(1, 5)}, Rational(1, 10), 9);
  GapCover c;
  c.generators = {{5, 1}};
  c.achieved_a = cover_achieved_a(h, c.generators);
  c.achieved_b = cover_achieved_b(h, c.generators);
  c.c1 = cover_c1(1, c.achieved_a, c.achieved_b);
  c.containment_verified = verify_cover_containment(h, c);
  ThinSet single = build_thin_set_from_cover({TorusPoint::rational(1, 5)}, Rational(1, 10),
                                             Rational(1), 9, 0, c);
  CHECK(single.members.size() == 4);
}

TEST_CASE("epsilon schedule examples") {
  CHECK(epsilon_schedule(1, 1) == Rational(1, 64));
  CHECK(epsilon_schedule(2, 2) == pow2(-19));
  for (int t = 1; t <= 6; ++t) {
    Rational e = epsilon_schedule(t, 1);
    CHECK(stage_term(t, 17, e).hi <= pow2(-t));
  }
}

TEST_CASE("stage term bounds") {
  Bounds b = stage_term(1, 17, Rational(1, 64));
  CHECK(b.lo == Rational(17, 64));
  CHECK(b.hi == Rational(17, 64));
  Bounds c = stage_term(3, 17, pow2(-30));
  CHECK(c.lo <= c.hi);
  // 17 * 2^-10 / (2^(1/3) - 1)
  CHECK(c.lo > Rational(6387, 100000));
  CHECK(c.hi < Rational(6388, 100000));
}

TEST_CASE("stream over <1/2> is increasing and certified") {
  StreamResult r = stream_sequence({{TorusPoint::rational(1, 2)}}, 3);
  REQUIRE(r.complete);
  REQUIRE(r.stages.size() == 3);
  std::int64_t prev = 0;
  for (const StageArtifacts& s : r.stages) {
    CHECK(s.certificates.all());
    CHECK(s.c2 == s.c1 + 16 * s.c1 * s.c1);
    CHECK(s.S.members.front() > prev);
    for (std::size_t i = 1; i < s.S.members.size(); ++i) {
      CHECK(s.S.members[i - 1] < s.S.members[i]);
    }
    prev = s.S.members.back();
  }
  CHECK(r.stages[0].plan.V.member(Rational(1, 2)) == Membership::inside);
}

TEST_CASE("stream over <1/2, 1/3> sees sixths at stage 2") {
  SequenceStream stream({{TorusPoint::rational(1, 2), TorusPoint::rational(1, 3)}}, 2);
  auto s1 = stream.next();
  auto s2 = stream.next();
  REQUIRE(s1.has_value());
  REQUIRE(s2.has_value());
  CHECK_FALSE(stream.next().has_value());
  for (long k = 0; k < 6; ++k) CHECK(s2->plan.V.member(Rational(k, 6)) == Membership::inside);
}

TEST_CASE("single stage and degenerate generator") {
  StreamResult one = stream_sequence({{TorusPoint::rational(1, 2)}}, 1);
  REQUIRE(one.stages.size() == 1);
  StreamResult zero = stream_sequence({{TorusPoint::rational(0, 1)}}, 1);
  REQUIRE(zero.stages.size() == 1);
  CHECK(zero.stages[0].certificates.all());
  CHECK(zero.stages[0].H.members.size() == static_cast<std::size_t>(zero.stages[0].plan.N));
}

TEST_CASE("invalid input and exit codes") {
  CHECK_THROWS_AS(SequenceStream({{}}, 2), InvalidInputError);
  CHECK_THROWS_AS(SequenceStream({{TorusPoint::rational(1, 2)}}, 0), InvalidInputError);
  CHECK(exit_code_for(PrecisionCapError("x")) == 2);
  CHECK(exit_code_for(BudgetExhaustedError("x")) == 3);
  CHECK(exit_code_for(InvalidInputError("x")) == 4);
  CHECK(exit_code_for(std::runtime_error("x")) == 1);
}
