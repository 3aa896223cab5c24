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
#include <string>
#include <vector>

#include "bohrseq/config.hpp"
#include "bohrseq/rational.hpp"

namespace bohrseq {

enum class PointKind { rational, quadratic_surd, cfrac, combination };

std::string to_string(PointKind kind);

/// coeff * sqrt(radicand) with radicand squarefree and > 1.
struct SurdTerm {
  Rational coeff;
  Integer radicand;
};

/// A point of R/Z with an exact representation: a rational offset plus a
/// finite sum of surd terms over distinct squarefree radicands. The stored
/// value always lies in [0, 1). Rational inputs, quadratic surds and
/// eventually periodic continued fractions all land in this form, which makes
/// sums, integer multiples and equality exact.
class TorusPoint {
 public:
  TorusPoint() = default;

  static TorusPoint rational(const Rational& q);
  static TorusPoint rational(long num, long den);
  /// offset + coeff * sqrt(radicand). The radicand must be a positive
  /// non-square; square factors are pulled into the coefficient.
  static TorusPoint surd(const Integer& radicand, const Rational& coeff = 1,
                         const Rational& offset = 0);
  /// [head_0; head_1, ..., head_h, period_0, ..., period_p, period_0, ...].
  /// An empty period gives the finite (rational) continued fraction.
  static TorusPoint cfrac(const std::vector<Integer>& head,
                          const std::vector<Integer>& period);
  /// sum_j coeffs[j] * points[j].
  static TorusPoint combination(const std::vector<TorusPoint>& points,
                                const std::vector<Integer>& coeffs);

  PointKind kind() const { return kind_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && offset_ == 0; }
  /// The rational part; for rational points this is the value itself.
  const Rational& offset() const { return offset_; }
  const std::vector<SurdTerm>& terms() const { return terms_; }

  /// A rational a with |x - a| <= 2^-k.
  Rational approximant(long k) const;

  /// floor(x * 2^128) up to an error of at most 2 units.
  u128 fixed_point() const;

  TorusPoint operator+(const TorusPoint& other) const;
  TorusPoint operator-(const TorusPoint& other) const;
  TorusPoint operator-() const;
  TorusPoint scaled(const Integer& k) const;

  bool operator==(const TorusPoint& other) const;
  bool operator!=(const TorusPoint& other) const { return !(*this == other); }

  /// Human-readable exact form, e.g. "1/3" or "-1+1*sqrt(2)".
  std::string to_string() const;

 private:
  void normalize();

  PointKind kind_ = PointKind::rational;
  Rational offset_;
  std::vector<SurdTerm> terms_;
  mutable std::optional<u128> fixed_;
};

/// Certified enclosure of a norm value.
struct NormInterval {
  Rational lo;
  Rational hi;
};

enum class Comparison { at_most, greater, undecided };

/// Enclosure of ||n * beta|| computed from the precision-k approximant.
NormInterval scaled_norm(const Integer& n, const TorusPoint& beta, long k);
inline NormInterval scaled_norm(std::int64_t n, const TorusPoint& beta, long k) {
  return scaled_norm(Integer(static_cast<long>(n)), beta, k);
}

Comparison cmp_threshold(const NormInterval& v, const Rational& c);

/// Refines the precision until ||n * beta|| <= c is decided. Throws
/// PrecisionCapError when the cap is reached first.
bool norm_at_most(const Integer& n, const TorusPoint& beta, const Rational& c,
                  const Budgets& budgets = {});

/// Refines until lo >= c or hi < c decides whether ||n * beta|| >= c.
bool norm_at_least(const Integer& n, const TorusPoint& beta, const Rational& c,
                   const Budgets& budgets = {});

/// Enclosure of ||n * beta|| whose width is at most `width`, or exact.
NormInterval tight_norm(const Integer& n, const TorusPoint& beta, const Rational& width,
                        const Budgets& budgets = {});

/// When ||k alpha|| <= d is certified for k = 1..n, the enclosure of ||alpha||
/// cut down to [0, d/n]. A result with lo > hi means the cut is empty.
std::optional<NormInterval> lemma1_linear_bound(const TorusPoint& alpha, std::int64_t n,
                                                const Rational& d,
                                                const Budgets& budgets = {});

/// Same shape, for ||beta + 2^l alpha|| <= d over l = 0..n and the cap d/2^(n-2).
std::optional<NormInterval> lemma1_geometric_bound(const TorusPoint& alpha,
                                                   const TorusPoint& beta, std::int64_t n,
                                                   const Rational& d,
                                                   const Budgets& budgets = {});

}  // namespace bohrseq
