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
#include "bohrseq/torus.hpp"

using namespace bohrseq;

namespace {
// sqrt(2) - 1 to 50 digits.
const Rational kFracSqrt2("41421356237309504880168872420969807856967187537695/"
                          "100000000000000000000000000000000000000000000000000");
// |2 sqrt(2) - 3| to 50 digits.
const Rational kNorm2Sqrt2("17157287525380990239662255158060384286065624924610/"
                           "100000000000000000000000000000000000000000000000000");
const Rational kTol50(Integer(1), Integer("100000000000000000000000000000000000000000000000000"));
}  // namespace

TEST_CASE("rational points reduce mod 1") {
  CHECK(TorusPoint::rational(7, 3) == TorusPoint::rational(1, 3));
  CHECK(TorusPoint::rational(7, 3).offset() == Rational(1, 3));
  CHECK(TorusPoint::rational(0, 5).is_zero());
  CHECK(TorusPoint::rational(-1, 4).offset() == Rational(3, 4));
  CHECK(TorusPoint::rational(7, 3).kind() == PointKind::rational);
}

TEST_CASE("sqrt(2) approximants") {
  TorusPoint a = TorusPoint::surd(2);
  CHECK(a.kind() == PointKind::quadratic_surd);
  Rational a1 = a.approximant(1);
  CHECK(abs(a1 - kFracSqrt2) <= Rational(1, 2) + kTol50);
  for (long k : {10L, 40L, 100L}) {
    Rational ak = a.approximant(k);
    CHECK(abs(ak - kFracSqrt2) <= pow2(-k) + kTol50);
  }
}

TEST_CASE("fixed point stays within two units") {
  TorusPoint a = TorusPoint::surd(2);
  Rational fp = from_u128(a.fixed_point());
  Rational scaled = kFracSqrt2 * pow2(128);
  CHECK(abs(fp - scaled) <= Rational(3));
  CHECK(TorusPoint::rational(1, 2).fixed_point() == (u128{1} << 127));
}

TEST_CASE("square factors move into the coefficient") {
  TorusPoint a = TorusPoint::surd(8);
  TorusPoint b = TorusPoint::surd(2, 2);
  CHECK(a == b);
  CHECK_THROWS_AS(TorusPoint::surd(9), InvalidInputError);
}

TEST_CASE("periodic continued fractions are exact surds") {
  // [1; 2, 2, 2, ...] = sqrt(2)
  TorusPoint c = TorusPoint::cfrac({1}, {2});
  CHECK(c.kind() == PointKind::cfrac);
  CHECK(c == TorusPoint::surd(2));
  // [1; 1, 2, 1, 2, ...] = sqrt(3)
  CHECK(TorusPoint::cfrac({1}, {1, 2}) == TorusPoint::surd(3));
  // [0; 1, 1, ...] = (sqrt(5) - 1) / 2
  CHECK(TorusPoint::cfrac({0}, {1}) == TorusPoint::surd(5, Rational(1, 2), Rational(-1, 2)));
  // finite expansion [0; 2, 3] = 3/7
  CHECK(TorusPoint::cfrac({0, 2, 3}, {}) == TorusPoint::rational(3, 7));
}

TEST_CASE("combinations are exact") {
  TorusPoint s2 = TorusPoint::surd(2);
  TorusPoint half = TorusPoint::rational(1, 2);
  TorusPoint c = TorusPoint::combination({s2, half}, {Integer(2), Integer(3)});
  CHECK(c == TorusPoint::surd(2, 2, Rational(1, 2)));
  CHECK((s2 - s2).is_zero());
  CHECK(s2.scaled(Integer(-3)) == -(s2 + s2 + s2));
}

TEST_CASE("scaled_norm examples") {
  NormInterval v = scaled_norm(1, TorusPoint::rational(1, 3), 10);
  CHECK(v.lo == Rational(1, 3));
  CHECK(v.hi == Rational(1, 3));
  v = scaled_norm(3, TorusPoint::rational(3, 10), 10);
  CHECK(v.lo == Rational(1, 10));
  CHECK(v.hi == Rational(1, 10));

  Rational prev_width = 1;
  for (long k : {8L, 20L, 60L}) {
    NormInterval w = scaled_norm(2, TorusPoint::surd(2), k);
    CHECK(w.lo <= kNorm2Sqrt2 + kTol50);
    CHECK(w.hi >= kNorm2Sqrt2 - kTol50);
    CHECK(w.hi - w.lo < prev_width);
    prev_width = w.hi - w.lo;
  }
}

TEST_CASE("cmp_threshold") {
  Rational c(1, 6);
  CHECK(cmp_threshold({Rational(1, 10), Rational(1, 10)}, c) == Comparison::at_most);
  CHECK(cmp_threshold({Rational(1, 5), Rational(1, 4)}, c) == Comparison::greater);
  CHECK(cmp_threshold({Rational(1, 8), Rational(1, 5)}, c) == Comparison::undecided);
}

TEST_CASE("norm comparisons refine until decided") {
  TorusPoint s2 = TorusPoint::surd(2);
  CHECK(norm_at_most(Integer(2), s2, Rational(172, 1000)));
  CHECK_FALSE(norm_at_most(Integer(2), s2, Rational(171, 1000)));
  CHECK(norm_at_least(Integer(2), s2, Rational(171, 1000)));
  CHECK(norm_at_most(Integer(0), s2, Rational(0)));
}

TEST_CASE("tight_norm meets the requested width") {
  NormInterval v = tight_norm(Integer(169), TorusPoint::surd(2), pow2(-80));
  CHECK(v.hi - v.lo <= pow2(-80));
  CHECK(v.lo <= v.hi);
}

TEST_CASE("precision cap is reported") {
  Budgets tiny;
  tiny.precision_cap = 16;
  // ||sqrt(2)|| is compared against a threshold closer than 2^-16.
  Rational c = kFracSqrt2 + pow2(-40);
  CHECK_THROWS_AS(norm_at_most(Integer(1), TorusPoint::surd(2), c, tiny), PrecisionCapError);
}

TEST_CASE("lemma1_linear_bound examples") {
  auto b = lemma1_linear_bound(TorusPoint::rational(1, 50), 10, Rational(1, 5));
  REQUIRE(b.has_value());
  CHECK(b->hi == Rational(1, 50));
  CHECK(b->lo == Rational(1, 50));
  CHECK_FALSE(lemma1_linear_bound(TorusPoint::rational(1, 3), 2, Rational(3, 10)).has_value());
  auto z = lemma1_linear_bound(TorusPoint::rational(0, 1), 7, Rational(1, 10));
  REQUIRE(z.has_value());
  CHECK(z->lo == 0);
  CHECK(z->hi == 0);
  CHECK_THROWS_AS(lemma1_linear_bound(TorusPoint::rational(0, 1), 1, Rational(1, 3)),
                  InvalidInputError);
}

TEST_CASE("lemma1_geometric_bound examples") {
  TorusPoint zero = TorusPoint::rational(0, 1);
  auto z = lemma1_geometric_bound(zero, zero, 4, Rational(1, 10));
  REQUIRE(z.has_value());
  CHECK(z->hi == 0);
  auto b = lemma1_geometric_bound(TorusPoint::rational(1, 256), zero, 4, Rational(1, 10));
  REQUIRE(b.has_value());
  CHECK(b->hi == Rational(1, 256));
  CHECK(b->hi <= Rational(1, 40));
  CHECK_FALSE(
      lemma1_geometric_bound(TorusPoint::rational(1, 4), zero, 2, Rational(1, 7)).has_value());
}
