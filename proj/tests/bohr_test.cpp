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


#include <algorithm>
#include <random>

#include "doctest.h"

#include "bohrseq/bohr.hpp"
#include "bohrseq/errors.hpp"
#include "bohrseq/harness.hpp"

using namespace bohrseq;

TEST_CASE("enumerate_bohr examples") {
  using V = std::vector<std::int64_t>;
  CHECK(enumerate_bohr({TorusPoint::rational(1, 3)}, Rational(1, 10), 10).members == V{3, 6, 9});
  CHECK(enumerate_bohr({TorusPoint::rational(1, 3), TorusPoint::rational(1, 4)},
                       Rational(3, 10), 12)
            .members == V{3, 9, 12});
  CHECK(enumerate_bohr({TorusPoint::rational(0, 1)}, Rational(1, 100), 5).members ==
        V{1, 2, 3, 4, 5});
}

TEST_CASE("oracle example") {
  CHECK(oracle_bohr({Rational(1, 3)}, Rational(1, 10), 10) == std::vector<std::int64_t>{3, 6, 9});
}

TEST_CASE("irrational Bohr set holds near-multiples of convergent denominators") {
  BohrSet h = enumerate_bohr({TorusPoint::surd(2)}, Rational(1, 20), 200);
  // independent scan at high precision
  std::vector<std::int64_t> want;
  for (std::int64_t n = 1; n <= 200; ++n) {
    if (norm_at_most(Integer(static_cast<long>(n)), TorusPoint::surd(2), Rational(1, 20))) {
      want.push_back(n);
    }
  }
  CHECK(h.members == want);
  CHECK(std::find(want.begin(), want.end(), 29) != want.end());
  CHECK(std::find(want.begin(), want.end(), 169) != want.end());
}

TEST_CASE("kernel agrees with the oracle on random rational instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> qs;
    std::vector<TorusPoint> ps;
    int t = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < t; ++j) {
      long q = 1 + static_cast<long>(rng() % 200);
      long p = static_cast<long>(rng() % static_cast<unsigned long>(q));
      qs.emplace_back(p, q);
      qs.back().canonicalize();
      ps.push_back(TorusPoint::rational(p, q));
    }
    Rational eps(1, 10 + static_cast<long>(rng() % 91));
    std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 3000);
    CHECK(enumerate_bohr(ps, eps, N).members == oracle_bohr(qs, eps, N));
  }
}

TEST_CASE("first_member and input checks") {
  BohrKernel k({TorusPoint::rational(1, 7)}, Rational(1, 100));
  CHECK(k.first_member(1, 100) == std::optional<std::int64_t>(7));
  CHECK(k.first_member(8, 13) == std::nullopt);
  CHECK_THROWS_AS(enumerate_bohr({TorusPoint::rational(1, 2)}, Rational(1, 10), 0),
                  InvalidInputError);
}
