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

#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"
#include "bohrseq/torus.hpp"

namespace bohrseq {

/// Closed interval [lo, hi] of [0, 1].
struct Interval {
  Frac lo;
  Frac hi;
};

/// A closed arc as reported to users. Endpoints lie in [0, 1); an arc with
/// wrap = true runs from lo through 0 to hi. The full circle is [0, 1].
struct Arc {
  Rational lo;
  Rational hi;
  bool wrap = false;
};

enum class Membership { inside, outside, undecided };

/// Finite union of closed arcs on R/Z with rational endpoints.
///
/// Internally the circle is cut open at 0: the set is a sorted list of
/// pairwise disjoint, non-touching closed intervals of [0, 1], and it contains
/// the point 0 exactly when it contains the point 1.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet full();
  /// The arc from lo to hi read on the real line (lo <= hi). Arcs of length
  /// >= 1 give the full circle.
  static ArcSet arc(const Rational& lo, const Rational& hi);
  /// Builds the canonical form from arbitrary intervals of [0, 1].
  static ArcSet from_intervals(std::vector<Interval> pieces);

  const std::vector<Interval>& intervals() const { return pieces_; }
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;
  bool empty() const { return pieces_.empty(); }
  bool is_full() const;
  Rational measure() const;

  ArcSet intersect(const ArcSet& other) const;
  /// True iff inner is a subset of this set.
  bool contains(const ArcSet& inner) const;
  /// This set intersected with { x : ||n x|| <= c }, 0 < c < 1/2.
  ArcSet intersect_constraint(std::int64_t n, const Rational& c,
                              const Budgets& budgets = {}) const;

  Membership member(const Rational& x) const;
  Membership member(const TorusPoint& x, const Budgets& budgets = {}) const;

  bool operator==(const ArcSet& other) const;

 private:
  void canonicalize();

  std::vector<Interval> pieces_;
};

ArcSet arcset_intersect(const ArcSet& x, const ArcSet& y);
bool arcset_contains(const ArcSet& outer, const ArcSet& inner);
Membership arcset_member(const ArcSet& x, const TorusPoint& beta, const Budgets& budgets = {});

/// { x : ||n x|| <= c }.
ArcSet arcs_for_constraint(std::int64_t n, const Rational& c, const Budgets& budgets = {});

/// The intersection of arcs_for_constraint(n, c) over n in ns.
ArcSet solve_small_norm_set(std::vector<std::int64_t> ns, const Rational& c,
                            const Budgets& budgets = {});

}  // namespace bohrseq
