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

#include "bohrseq/arcset.hpp"

#include <algorithm>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

const Frac kZero{0, 1};
const Frac kOne{1, 1};
constexpr std::int64_t kMaxDen = std::int64_t{1} << 62;

const Frac& fmax(const Frac& a, const Frac& b) { return a < b ? b : a; }
const Frac& fmin(const Frac& a, const Frac& b) { return a < b ? a : b; }

// floor(num / den) for den > 0.
i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace

ArcSet ArcSet::full() {
  ArcSet s;
  s.pieces_.push_back({kZero, kOne});
  return s;
}

ArcSet ArcSet::arc(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw InvalidInputError("arc with hi < lo");
  if (hi - lo >= 1) return full();
  Integer shift = floor_of(lo);
  Rational a = lo - shift, b = hi - shift;
  std::vector<Interval> pieces;
  if (b <= 1) {
    pieces.push_back({Frac::from_rational(a), Frac::from_rational(b)});
  } else {
    pieces.push_back({Frac::from_rational(a), kOne});
    pieces.push_back({kZero, Frac::from_rational(b - 1)});
  }
  return from_intervals(std::move(pieces));
}

ArcSet ArcSet::from_intervals(std::vector<Interval> pieces) {
  ArcSet s;
  s.pieces_ = std::move(pieces);
  s.canonicalize();
  return s;
}

void ArcSet::canonicalize() {
  for (const Interval& iv : pieces_) {
    if (iv.hi < iv.lo || iv.lo < kZero || kOne < iv.hi) {
      throw InvalidInputError("interval outside [0, 1] or reversed");
    }
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const Interval& iv : pieces_) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  if (!out.empty()) {
    bool has0 = out.front().lo == kZero;
    bool has1 = out.back().hi == kOne;
    if (has0 && !has1) out.push_back({kOne, kOne});
    if (has1 && !has0) out.insert(out.begin(), {kZero, kZero});
  }
  pieces_ = std::move(out);
}

bool ArcSet::is_full() const {
  return pieces_.size() == 1 && pieces_[0].lo == kZero && pieces_[0].hi == kOne;
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  if (pieces_.empty()) return out;
  if (is_full()) {
    out.push_back({Rational(0), Rational(1), false});
    return out;
  }
  bool wraps = pieces_.front().lo == kZero && pieces_.back().hi == kOne;
  std::size_t first = wraps ? 1 : 0;
  std::size_t last = wraps ? pieces_.size() - 1 : pieces_.size();
  if (wraps) {
    Rational lo = pieces_.back().lo.to_rational();
    Rational hi = pieces_.front().hi.to_rational();
    if (lo == 1) lo = 0;
    out.push_back({lo, hi, lo > hi});
  }
  for (std::size_t i = first; i < last; ++i) {
    out.push_back({pieces_[i].lo.to_rational(), pieces_[i].hi.to_rational(), false});
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  return out;
}

std::size_t ArcSet::arc_count() const {
  if (pieces_.empty()) return 0;
  if (is_full()) return 1;
  bool wraps = pieces_.front().lo == kZero && pieces_.back().hi == kOne;
  return wraps ? pieces_.size() - 1 : pieces_.size();
}

Rational ArcSet::measure() const {
  Rational m;
  for (const Interval& iv : pieces_) m += iv.hi.to_rational() - iv.lo.to_rational();
  return m;
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
  ArcSet out;
  std::size_t i = 0, j = 0;
  const auto& a = pieces_;
  const auto& b = other.pieces_;
  while (i < a.size() && j < b.size()) {
    const Frac& lo = fmax(a[i].lo, b[j].lo);
    const Frac& hi = fmin(a[i].hi, b[j].hi);
    if (lo <= hi) out.pieces_.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

bool ArcSet::contains(const ArcSet& inner) const {
  std::size_t j = 0;
  for (const Interval& iv : inner.pieces_) {
    while (j < pieces_.size() && pieces_[j].hi < iv.lo) ++j;
    if (j == pieces_.size()) return false;
    if (iv.lo < pieces_[j].lo || pieces_[j].hi < iv.hi) return false;
  }
  return true;
}

ArcSet ArcSet::intersect_constraint(std::int64_t n, const Rational& c,
                                    const Budgets& budgets) const {
  if (n < 1) throw InvalidInputError("constraint needs n >= 1");
  if (c <= 0 || c >= Rational(1, 2)) throw InvalidInputError("constraint needs 0 < c < 1/2");
  if (!fits_int64(c.get_den())) throw BudgetExhaustedError("constraint denominator too large");
  const std::int64_t cp = to_int64(c.get_num());
  const std::int64_t cq = to_int64(c.get_den());
  if (static_cast<i128>(n) * cq > kMaxDen) {
    throw BudgetExhaustedError("arc endpoint denominator exceeds 62 bits for n = " +
                               std::to_string(n));
  }
  const std::int64_t den = n * cq;

  // For [a, b] the relevant k run from ceil(n a - c) to floor(n b + c).
  auto k_range = [&](const Interval& iv, i128& klo, i128& khi) {
    i128 xa = static_cast<i128>(n) * iv.lo.num;
    i128 fa = floor_div(xa, iv.lo.den);
    i128 ra = xa - fa * iv.lo.den;
    klo = fa + ((ra * cq > static_cast<i128>(cp) * iv.lo.den) ? 1 : 0);
    i128 xb = static_cast<i128>(n) * iv.hi.num;
    i128 fb = floor_div(xb, iv.hi.den);
    i128 rb = xb - fb * iv.hi.den;
    khi = fb + ((rb * cq + static_cast<i128>(cp) * iv.hi.den >=
                 static_cast<i128>(iv.hi.den) * cq) ? 1 : 0);
  };

  i128 total = 0;
  for (const Interval& iv : pieces_) {
    i128 klo, khi;
    k_range(iv, klo, khi);
    if (khi >= klo) total += khi - klo + 1;
  }
  if (total > static_cast<i128>(budgets.arcs)) {
    throw BudgetExhaustedError("constraint n = " + std::to_string(n) + " would create " +
                               to_string(total) + " arcs (budget " +
                               std::to_string(budgets.arcs) + ")");
  }

  ArcSet out;
  out.pieces_.reserve(static_cast<std::size_t>(total));
  for (const Interval& iv : pieces_) {
    i128 klo, khi;
    k_range(iv, klo, khi);
    for (i128 k = klo; k <= khi; ++k) {
      std::int64_t centre = static_cast<std::int64_t>(k) * cq;
      Frac lo{centre - cp, den}, hi{centre + cp, den};
      const Frac& l = fmax(lo, iv.lo);
      const Frac& h = fmin(hi, iv.hi);
      if (l <= h) out.pieces_.push_back({l, h});
    }
  }
  return out;
}

Membership ArcSet::member(const Rational& x) const {
  Rational y = frac_part(x);
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), y,
                             [](const Rational& v, const Interval& iv) {
                               return cmp(iv.lo, v) > 0;
                             });
  if (it == pieces_.begin()) return Membership::outside;
  --it;
  return cmp(it->hi, y) >= 0 ? Membership::inside : Membership::outside;
}

Membership ArcSet::member(const TorusPoint& x, const Budgets& budgets) const {
  if (x.is_rational()) return member(x.offset());
  for (long k = 64;; k *= 2) {
    if (k > budgets.precision_cap) k = budgets.precision_cap;
    Rational a = frac_part(x.approximant(k));
    Rational e = pow2(-k);
    Rational lo = a - e, hi = a + e;
    if (lo >= 0 && hi <= 1) {
      auto it = std::upper_bound(pieces_.begin(), pieces_.end(), hi,
                                 [](const Rational& v, const Interval& iv) {
                                   return cmp(iv.lo, v) > 0;
                                 });
      if (it == pieces_.begin()) return Membership::outside;
      --it;
      if (cmp(it->hi, lo) < 0) return Membership::outside;
      if (cmp(it->lo, lo) <= 0 && cmp(it->hi, hi) >= 0) return Membership::inside;
    }
    if (k >= budgets.precision_cap) return Membership::undecided;
  }
}

bool ArcSet::operator==(const ArcSet& other) const {
  if (pieces_.size() != other.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].lo != other.pieces_[i].lo || pieces_[i].hi != other.pieces_[i].hi) {
      return false;
    }
  }
  return true;
}

ArcSet arcset_intersect(const ArcSet& x, const ArcSet& y) { return x.intersect(y); }

bool arcset_contains(const ArcSet& outer, const ArcSet& inner) { return outer.contains(inner); }

Membership arcset_member(const ArcSet& x, const TorusPoint& beta, const Budgets& budgets) {
  return x.member(beta, budgets);
}

ArcSet arcs_for_constraint(std::int64_t n, const Rational& c, const Budgets& budgets) {
  return ArcSet::full().intersect_constraint(n, c, budgets);
}

ArcSet solve_small_norm_set(std::vector<std::int64_t> ns, const Rational& c,
                            const Budgets& budgets) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  ArcSet s = ArcSet::full();
  for (std::int64_t n : ns) {
    s = s.intersect_constraint(n, c, budgets);
    if (s.empty()) break;
  }
  return s;
}

}  // namespace bohrseq
