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

namespace bohrseq {

/// Limits shared by every search in the pipeline. Exceeding one raises
/// BudgetExhaustedError (or PrecisionCapError for precision_cap) instead of
/// returning an uncertified answer.
struct Budgets {
  /// Largest precision level k (bits) used when refining an enclosure.
  int precision_cap = 4096;
  /// Reachable-sum states allowed in the cover containment DP.
  std::uint64_t dp_states = 10'000'000;
  /// Points allowed in one group ball.
  std::uint64_t ball_points = 4'000'000;
  /// Arcs allowed in one ArcSet produced by the constraint engine.
  std::uint64_t arcs = 8'000'000;
  /// Largest Bohr limit N probed by find_N / find_M.
  std::int64_t probe_limit = std::int64_t{1} << 28;
  /// Candidates scanned by the anchor search.
  std::int64_t anchor_scan = std::int64_t{1} << 33;
};

}  // namespace bohrseq
