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
#include <optional>
#include <vector>

#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

/// H_{N,eps}(alphas): the n in [1, N] with ||n alpha_j|| <= eps for every j.
struct BohrSet {
  std::vector<TorusPoint> alphas;
  Rational eps;
  std::int64_t limit = 0;
  std::vector<std::int64_t> members;
};

/// Certified test of "||n alpha_j|| <= threshold for all j".
///
/// Rational generators with 62-bit denominators use residues. Everything else
/// uses 128-bit fixed-point positions with an explicit error radius and falls
/// back to exact refinement when the fast test cannot decide.
class BohrKernel {
 public:
  BohrKernel(std::vector<TorusPoint> alphas, const Rational& threshold,
             const Budgets& budgets = {});

  bool test(std::int64_t n) const;
  /// Appends the members of [lo, hi] to out in increasing order.
  void scan(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) const;
  /// Smallest member of [lo, hi], if any.
  std::optional<std::int64_t> first_member(std::int64_t lo, std::int64_t hi) const;

 private:
  struct Gen {
    bool residue = false;
    std::int64_t p = 0, q = 1, bound = 0;  // residue form
    u128 pos = 0;                           // fixed-point form
  };

  bool test_one(std::size_t j, std::int64_t n) const;

  std::vector<TorusPoint> alphas_;
  std::vector<Gen> gens_;
  Rational threshold_;
  bool trivial_ = false;
  u128 bound128_ = 0;
  Budgets budgets_;
};

BohrSet enumerate_bohr(const std::vector<TorusPoint>& alphas, const Rational& eps,
                       std::int64_t N, const Budgets& budgets = {});

}  // namespace bohrseq
