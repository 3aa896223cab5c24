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

#include "bohrseq/approx.hpp"
#include "bohrseq/errors.hpp"

using namespace bohrseq;

namespace {

ArcSet around(const std::vector<Rational>& centres, const Rational& radius) {
  std::vector<Interval> all;
  for (const Rational& c : centres) {
    ArcSet a = ArcSet::arc(c - radius, c + radius);
    all.insert(all.end(), a.intervals().begin(), a.intervals().end());
  }
  return ArcSet::from_intervals(all);
}

std::vector<TorusPoint> points_of(const GroupBall& b) {
  std::vector<TorusPoint> out;
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b.point(i));
  return out;
}

bool has_point(const std::vector<TorusPoint>& pts, const TorusPoint& p) {
  for (const TorusPoint& q : pts) {
    if (q == p) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group ball examples") {
  GroupBall a = enumerate_group_ball({TorusPoint::rational(1, 3)}, 1);
  CHECK(a.size() == 3);
  CHECK(a.exact());

  GroupBall b = enumerate_group_ball({TorusPoint::rational(1, 2), TorusPoint::rational(1, 3)}, 1);
  REQUIRE(b.size() == 6);
  auto pts = points_of(b);
  for (long k = 0; k < 6; ++k) CHECK(has_point(pts, TorusPoint::rational(k, 6)));

  GroupBall c = enumerate_group_ball({TorusPoint::surd(2)}, 2);
  REQUIRE(c.size() == 5);
  auto s = points_of(c);
  TorusPoint r2 = TorusPoint::surd(2);
  CHECK(has_point(s, TorusPoint::rational(0, 1)));
  CHECK(has_point(s, r2));
  CHECK(has_point(s, r2 + r2));
  CHECK(has_point(s, -r2));
  CHECK(has_point(s, -(r2 + r2)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto k = c.coefficients(i);
    CHECK(c.level(i) == std::abs(k[0]));
  }
}

TEST_CASE("group ball input checks and budget") {
  CHECK_THROWS_AS(enumerate_group_ball({}, 1), InvalidInputError);
  CHECK_THROWS_AS(enumerate_group_ball({TorusPoint::surd(2)}, 0), InvalidInputError);
  Budgets tiny;
  tiny.ball_points = 100;
  CHECK_THROWS_AS(enumerate_group_ball({TorusPoint::surd(2), TorusPoint::surd(3)}, 10, tiny),
                  BudgetExhaustedError);
}

TEST_CASE("min_gap examples") {
  CHECK(min_gap(enumerate_group_ball({TorusPoint::rational(1, 3)}, 1)) == Rational(1, 3));
  CHECK(min_gap(enumerate_group_ball({TorusPoint::rational(1, 2), TorusPoint::rational(1, 3)},
                                     1)) == Rational(1, 6));
  CHECK_THROWS_AS(min_gap(enumerate_group_ball({TorusPoint::rational(0, 1)}, 1)),
                  InvalidInputError);
  // the five points of <sqrt 2>_2: smallest circular gap is 3 - 2 sqrt 2
  Rational g = min_gap(enumerate_group_ball({TorusPoint::surd(2)}, 2));
  CHECK(g <= Rational("17157287525381/100000000000000"));
  CHECK(g > Rational("17157287525380/100000000000000") - pow2(-100));
}

TEST_CASE("cross_gap") {
  GroupBall half = enumerate_group_ball({TorusPoint::rational(1, 2)}, 1);
  CHECK_FALSE(cross_gap(half, half).has_value());
  GroupBall sixths =
      enumerate_group_ball({TorusPoint::rational(1, 2), TorusPoint::rational(1, 3)}, 1);
  auto g = cross_gap(half, sixths);
  REQUIRE(g.has_value());
  CHECK(*g == Rational(1, 6));
}

TEST_CASE("neighbourhood arcs of an exact ball") {
  GroupBall half = enumerate_group_ball({TorusPoint::rational(1, 2)}, 1);
  CHECK(neighbourhood_arcs(half, Rational(1, 8)) ==
        around({Rational(0), Rational(1, 2)}, Rational(1, 8)));
  CHECK_THROWS_AS(neighbourhood_arcs(half, Rational(1, 3)), InvalidInputError);
}

TEST_CASE("neighbourhood arcs of an irrational ball contain the exact arcs") {
  GroupBall b = enumerate_group_ball({TorusPoint::surd(2)}, 3);
  ArcSet V = neighbourhood_arcs(b, Rational(1, 64));
  CHECK(V.arc_count() == b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(V.member(b.point(i)) == Membership::inside);
  }
}

TEST_CASE("plan_stage examples") {
  GroupBall half = enumerate_group_ball({TorusPoint::rational(1, 2)}, 1);
  StagePlan p = plan_stage(1, half, &half, std::nullopt);
  CHECK(p.delta == Rational(1, 8));
  CHECK_FALSE(p.forward_gap.has_value());
  CHECK(p.V == around({Rational(0), Rational(1, 2)}, Rational(1, 8)));

  GroupBall sixths =
      enumerate_group_ball({TorusPoint::rational(1, 2), TorusPoint::rational(1, 3)}, 1);
  StagePlan q = plan_stage(2, sixths, &sixths, std::nullopt);
  CHECK(q.delta == Rational(1, 16));

  // chained: the second stage halves at least and respects the backward gap
  StagePlan first = plan_stage(1, half, &sixths, std::nullopt);
  CHECK(first.delta == Rational(1, 16));
  StagePlan second = plan_stage(2, sixths, &sixths, PreviousStage{&half, first.delta});
  CHECK(second.delta <= first.delta / 2);
  CHECK(second.delta + first.delta < Rational(1, 6));
}

TEST_CASE("find_N examples") {
  ArcSet V = around({Rational(0), Rational(1, 2)}, Rational(1, 10));
  CHECK(find_N({TorusPoint::rational(1, 2)}, Rational(1, 4), V) == 2);
  CHECK(find_N({TorusPoint::rational(1, 2)}, Rational(1, 4), ArcSet::full()) == 1);
  ArcSet W = around({Rational(0), Rational(1, 3), Rational(2, 3)}, Rational(1, 20));
  CHECK(find_N({TorusPoint::rational(1, 3)}, Rational(1, 10), W) == 6);
}

TEST_CASE("find_N budget") {
  Budgets tiny;
  tiny.probe_limit = 64;
  ArcSet V = around({Rational(0)}, Rational(1, 1000));
  CHECK_THROWS_AS(find_N({TorusPoint::rational(1, 2)}, Rational(1, 4), V, tiny),
                  BudgetExhaustedError);
}

TEST_CASE("find_M examples") {
  CHECK(find_M({TorusPoint::rational(1, 2)}, Rational(1, 4)) == 1);
  CHECK(find_M({TorusPoint::rational(1, 3)}, Rational(1, 10)) == 1);
  CHECK(find_M({TorusPoint::rational(0, 1)}, Rational(1, 4)) == 1);
}
