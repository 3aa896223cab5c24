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


#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "bohrseq/errors.hpp"
#include "bohrseq/io.hpp"

using namespace bohrseq;

TEST_CASE("point descriptors") {
  CHECK(point_from_json(Json::parse(R"({"kind":"rational","num":1,"den":3})")) ==
        TorusPoint::rational(1, 3));
  CHECK(point_from_json(Json::parse(R"({"kind":"rational","num":7,"den":-3})")) ==
        TorusPoint::rational(2, 3));
  CHECK(point_from_json(Json::parse(R"({"kind":"sqrt","radicand":2})")) == TorusPoint::surd(2));
  CHECK(point_from_json(Json::parse(R"({"kind":"cfrac","head":[1],"period":[2]})")) ==
        TorusPoint::surd(2));
  CHECK(point_from_json(Json::parse(R"({"kind":"sqrt","radicand":2,"coeff":2,"offset":"1/2"})")) ==
        TorusPoint::surd(2, 2, Rational(1, 2)));
}

TEST_CASE("descriptor round trip") {
  std::vector<TorusPoint> pts{TorusPoint::rational(5, 7), TorusPoint::surd(3, Rational(-2, 5)),
                              TorusPoint::surd(2) + TorusPoint::surd(5)};
  for (const TorusPoint& p : pts) CHECK(point_from_json(point_to_json(p)) == p);
}

TEST_CASE("malformed descriptors are invalid input") {
  CHECK_THROWS_AS(point_from_json(Json::parse(R"({"kind":"pi"})")), InvalidInputError);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"({"kind":"rational","num":1,"den":0})")),
                  InvalidInputError);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"({"kind":"sqrt","radicand":4})")),
                  InvalidInputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"generators":[]})")), InvalidInputError);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"("1/x")")), InvalidInputError);
}

TEST_CASE("group and beta files") {
  GroupSpec g = group_from_json(Json::parse(
      R"({"generators":[{"kind":"rational","num":1,"den":2},{"kind":"rational","num":1,"den":3}]})"));
  CHECK(g.generators.size() == 2);
  BetaSpec b = beta_from_json(
      Json::parse(R"({"kind":"sqrt","radicand":2,"coeff":2,"combination":[2]})"));
  CHECK(b.has_combination);
  CHECK(b.combination == std::vector<Integer>{Integer(2)});
  CHECK(b.beta == TorusPoint::surd(2, 2));
  CHECK_FALSE(beta_from_json(Json::parse(R"({"kind":"rational","num":1,"den":7})")).has_combination);
}

TEST_CASE("sequence CSV and report reload") {
  GroupSpec g{{TorusPoint::rational(1, 2)}};
  StreamResult r = stream_sequence(g, 2);
  REQUIRE(r.complete);
  Json rep = report_to_json(r, g);
  CHECK(rep["status"] == "complete");
  CHECK(rep["stages"].size() == 2);
  std::string path = "io_test_seq.csv";
  write_text_file(path, sequence_csv(r.stages));
  auto loaded = load_stages(path, Json::parse(rep.dump()));
  REQUIRE(loaded.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(loaded[i].t == r.stages[i].t);
    CHECK(loaded[i].S == r.stages[i].S.members);
    CHECK(loaded[i].term.lo == r.stages[i].term.lo);
    CHECK(loaded[i].term.hi == r.stages[i].term.hi);
  }
  {
    std::ofstream bad(path);
    bad << "n\n1\n";
  }
  CHECK_THROWS_AS(load_stages(path, rep), InvalidInputError);
  std::remove(path.c_str());
}

TEST_CASE("verification CSV headers") {
  VerificationReport m;
  m.mode = "member";
  m.member_rows.push_back({1, 6, Rational(0), Rational(0)});
  CHECK(member_csv(m) == "stage,n,norm_hi,partial_sum_hi\n1,6,0,0\n");
  VerificationReport n;
  n.mode = "nonmember";
  n.nonmember_rows.push_back({2, 7, Rational(1, 3)});
  CHECK(nonmember_csv(n) == "stage,witness_n,witness_norm_lo\n2,7,1/3\n");
}
