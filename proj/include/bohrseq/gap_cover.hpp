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
#include <string>
#include <vector>

#include "bohrseq/bohr.hpp"
#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"

namespace bohrseq {

struct Generator {
  std::int64_t n = 0;  // nonzero
  std::int64_t K = 1;  // >= 1
};

/// A generalized arithmetic progression { sum k_i n_i : 1 <= k_i <= K_i }
/// covering a Bohr set, with its achieved constants.
struct GapCover {
  std::vector<Generator> generators;
  /// max_j sum_i K_i ||n_i alpha_j|| / eps (an upper enclosure for
  /// irrational generators, exact otherwise).
  Rational achieved_a;
  /// sum_i K_i |n_i| / N.
  Rational achieved_b;
  bool containment_verified = false;
  /// ceil(max(R, achieved_a, achieved_b, 1)).
  std::int64_t c1 = 1;
  std::string method;

  std::int64_t R() const { return static_cast<std::int64_t>(generators.size()); }
};

Rational cover_achieved_a(const BohrSet& h, const std::vector<Generator>& gens);
Rational cover_achieved_b(const BohrSet& h, const std::vector<Generator>& gens);
std::int64_t cover_c1(std::int64_t R, const Rational& a, const Rational& b);

/// Builds a certified cover. Candidates are a reduced lattice basis of the
/// member vectors (n, round(n alpha_1), ..., round(n alpha_t)) and the plain
/// progression with step gcd(H); the one with the smallest c1 wins.
GapCover decompose_gap(const BohrSet& h, const Budgets& budgets = {});

/// Exact containment check by reachable-sum dynamic programming. Throws
/// BudgetExhaustedError when the sum range exceeds budgets.dp_states.
bool verify_cover_containment(const BohrSet& h, const GapCover& cover,
                              const Budgets& budgets = {});

}  // namespace bohrseq
