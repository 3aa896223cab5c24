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
#include <numeric>

#include "bohrseq/approx.hpp"
#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;

std::int64_t mod_floor(i128 v, std::int64_t m) {
  i128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

u128 wrap_diff(u128 from, u128 to) { return to - from; }

Rational units_to_rational(u128 v) { return Rational(from_u128(v)) * pow2(-128); }

struct Entry {
  u128 pos;
  std::uint64_t err;
  std::int64_t level;
  std::int64_t residue;
  std::size_t source;  // coefficient row
  int type;
};

std::vector<std::int64_t> padded(const GroupBall& b, std::size_t i, std::size_t dim) {
  std::vector<std::int64_t> c = b.coefficients(i);
  c.resize(dim, 0);
  return c;
}

bool same_point(const std::vector<TorusPoint>& alphas, const std::vector<std::int64_t>& x,
                const std::vector<std::int64_t>& y) {
  std::vector<Integer> d(alphas.size());
  for (std::size_t j = 0; j < alphas.size(); ++j) d[j] = Integer(static_cast<long>(x[j] - y[j]));
  return TorusPoint::combination(alphas, d).is_zero();
}

}  // namespace

GroupBall GroupBall::enumerate(const std::vector<TorusPoint>& alphas, std::int64_t M,
                               const Budgets& budgets) {
  if (alphas.empty()) throw InvalidInputError("group ball needs at least one generator");
  if (M < 1) throw InvalidInputError("group ball needs M >= 1");
  const std::size_t t = alphas.size();
  long double total = 1;
  for (std::size_t j = 0; j < t; ++j) total *= static_cast<long double>(2 * M + 1);
  if (total > static_cast<long double>(budgets.ball_points)) {
    throw BudgetExhaustedError("group ball with M = " + std::to_string(M) + " has " +
                               std::to_string(static_cast<double>(total)) +
                               " combinations (budget " + std::to_string(budgets.ball_points) +
                               ")");
  }
  GroupBall b;
  b.alphas_ = alphas;
  b.M_ = M;

  bool exact = true;
  Integer D = 1;
  for (const TorusPoint& a : alphas) {
    if (!a.is_rational()) {
      exact = false;
      break;
    }
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), a.offset().get_den_mpz_t());
    if (D > kMaxModulus) {
      exact = false;
      break;
    }
  }
  std::vector<std::int64_t> unit_res(t, 0);
  std::vector<u128> fixed(t);
  for (std::size_t j = 0; j < t; ++j) fixed[j] = alphas[j].fixed_point();
  if (exact) {
    b.exact_ = true;
    b.modulus_ = D.get_si();
    for (std::size_t j = 0; j < t; ++j) {
      Integer r = alphas[j].offset().get_num() * (D / alphas[j].offset().get_den());
      unit_res[j] = r.get_si();
    }
  }

  const std::size_t count = static_cast<std::size_t>(total);
  std::vector<std::int32_t> coeffs(count * t);
  std::vector<Entry> entries;
  entries.reserve(count);
  std::vector<std::int64_t> k(t, -M);
  for (std::size_t idx = 0; idx < count; ++idx) {
    u128 pos = 0;
    std::uint64_t err = 0;
    std::int64_t level = 0;
    i128 res = 0;
    for (std::size_t j = 0; j < t; ++j) {
      coeffs[idx * t + j] = static_cast<std::int32_t>(k[j]);
      pos += fixed[j] * static_cast<u128>(static_cast<i128>(k[j]));
      std::int64_t ak = k[j] < 0 ? -k[j] : k[j];
      err += 2 * static_cast<std::uint64_t>(ak);
      level = std::max(level, ak);
      if (exact) res += static_cast<i128>(k[j]) * unit_res[j];
    }
    Entry e{pos, err, level, 0, idx, 0};
    if (exact) {
      e.residue = mod_floor(res, b.modulus_);
      e.pos = to_u128(floor_of(Rational(Integer(static_cast<long>(e.residue)), D) * pow2(128)));
      e.err = 1;
    }
    entries.push_back(e);
    for (std::size_t j = 0; j < t; ++j) {
      if (++k[j] <= M) break;
      k[j] = -M;
    }
  }

  std::vector<Entry> kept;
  if (exact) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      return x.residue != y.residue ? x.residue < y.residue : x.level < y.level;
    });
    for (const Entry& e : entries) {
      if (kept.empty() || kept.back().residue != e.residue) kept.push_back(e);
    }
  } else {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.pos < y.pos; });
    auto coeff_of = [&](const Entry& e) {
      return std::vector<std::int64_t>(coeffs.begin() + e.source * t,
                                       coeffs.begin() + (e.source + 1) * t);
    };
    bool distinct_multiples = t == 1;  // k alpha for an irrational alpha
    for (const Entry& e : entries) {
      bool dup = false;
      if (!distinct_multiples) {
        for (std::size_t q = kept.size(); q-- > 0;) {
          Entry& o = kept[q];
          if (wrap_diff(o.pos, e.pos) > static_cast<u128>(o.err) + e.err) break;
          if (same_point(alphas, coeff_of(o), coeff_of(e))) {
            if (e.level < o.level) o = e;
            dup = true;
            break;
          }
        }
      }
      if (!dup) kept.push_back(e);
    }
    // Positions just below 2^128 may duplicate points just above 0.
    while (!distinct_multiples && kept.size() >= 2) {
      const Entry& first = kept.front();
      const Entry& last = kept.back();
      if (wrap_diff(last.pos, first.pos) > static_cast<u128>(first.err) + last.err) break;
      if (!same_point(alphas, coeff_of(first), coeff_of(last))) break;
      if (last.level < first.level) kept.front() = last;
      kept.pop_back();
    }
  }

  for (const Entry& e : kept) {
    b.pos_.push_back(e.pos);
    b.err_.push_back(e.err);
    b.level_.push_back(e.level);
    for (std::size_t j = 0; j < t; ++j) b.coeffs_.push_back(coeffs[e.source * t + j]);
    if (exact) b.residue_.push_back(e.residue);
  }
  return b;
}

std::vector<std::int64_t> GroupBall::coefficients(std::size_t i) const {
  const std::size_t t = dimension();
  return std::vector<std::int64_t>(coeffs_.begin() + i * t, coeffs_.begin() + (i + 1) * t);
}

TorusPoint GroupBall::point(std::size_t i) const {
  std::vector<Integer> c;
  for (std::int64_t k : coefficients(i)) c.emplace_back(static_cast<long>(k));
  return TorusPoint::combination(alphas_, c);
}

GroupBall enumerate_group_ball(const std::vector<TorusPoint>& alphas, std::int64_t M,
                               const Budgets& budgets) {
  return GroupBall::enumerate(alphas, M, budgets);
}

Rational min_gap(const GroupBall& ball) {
  const std::size_t n = ball.size();
  if (n < 2) throw InvalidInputError("min_gap needs at least two points");
  if (ball.exact()) {
    std::int64_t best = ball.residue(0) + ball.modulus() - ball.residue(n - 1);
    for (std::size_t i = 1; i < n; ++i) best = std::min(best, ball.residue(i) - ball.residue(i - 1));
    Rational g(Integer(static_cast<long>(best)), Integer(static_cast<long>(ball.modulus())));
    g.canonicalize();
    return g;
  }
  u128 best = ~u128{0};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    u128 d = wrap_diff(ball.position(i), ball.position(j));
    u128 e = static_cast<u128>(ball.error(i)) + ball.error(j);
    if (d <= e) throw PrecisionCapError("two ball points are too close to separate");
    best = std::min(best, d - e);
  }
  return units_to_rational(best);
}

std::optional<Rational> cross_gap(const GroupBall& inner, const GroupBall& outer) {
  const std::size_t ti = inner.dimension(), to = outer.dimension();
  if (ti > to) throw InvalidInputError("cross_gap: inner ball has more generators");
  for (std::size_t j = 0; j < ti; ++j) {
    if (inner.alphas()[j] != outer.alphas()[j]) {
      throw InvalidInputError("cross_gap: generators are not a prefix");
    }
  }
  bool exact = inner.exact() && outer.exact();
  std::int64_t D = 1;
  if (exact) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), Integer(static_cast<long>(inner.modulus())).get_mpz_t(),
            Integer(static_cast<long>(outer.modulus())).get_mpz_t());
    if (l > kMaxModulus) {
      exact = false;
    } else {
      D = l.get_si();
    }
  }
  std::vector<Entry> all;
  all.reserve(inner.size() + outer.size());
  for (int type = 0; type < 2; ++type) {
    const GroupBall& b = type == 0 ? inner : outer;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Entry e{b.position(i), b.error(i), b.level(i), 0, i, type};
      if (exact) e.residue = b.residue(i) * (D / b.modulus());
      all.push_back(e);
    }
  }
  std::vector<Entry> merged;
  if (exact) {
    std::sort(all.begin(), all.end(), [](const Entry& x, const Entry& y) {
      return x.residue != y.residue ? x.residue < y.residue : x.type < y.type;
    });
    for (const Entry& e : all) {
      if (e.type == 1 && !merged.empty() && merged.back().residue == e.residue) continue;
      merged.push_back(e);
    }
  } else {
    std::sort(all.begin(), all.end(), [](const Entry& x, const Entry& y) {
      return x.pos != y.pos ? x.pos < y.pos : x.type < y.type;
    });
    std::uint64_t max_err = 0;
    for (const Entry& e : all) max_err = std::max(max_err, e.err);
    const std::size_t n = all.size();
    std::vector<char> drop(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (all[i].type != 1) continue;
      const u128 reach = static_cast<u128>(all[i].err) + max_err;
      std::vector<std::int64_t> ci = padded(outer, all[i].source, to);
      for (int dir = -1; dir <= 1 && !drop[i]; dir += 2) {
        for (std::size_t step = 1; step < n; ++step) {
          std::size_t j = dir < 0 ? (i + n - step) % n : (i + step) % n;
          u128 d = dir < 0 ? wrap_diff(all[j].pos, all[i].pos) : wrap_diff(all[i].pos, all[j].pos);
          if (d > reach) break;
          if (all[j].type != 0) continue;
          if (same_point(outer.alphas(), ci, padded(inner, all[j].source, to))) {
            drop[i] = 1;
            break;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!drop[i]) merged.push_back(all[i]);
    }
  }
  const std::size_t n = merged.size();
  bool any_outer = false;
  for (const Entry& e : merged) any_outer |= e.type == 1;
  if (!any_outer) return std::nullopt;
  if (exact) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + 1) % n;
      if (merged[i].type == merged[j].type) continue;
      std::int64_t d = merged[j].residue - merged[i].residue;
      if (j == 0) d += D;
      if (best < 0 || d < best) best = d;
    }
    Rational g(Integer(static_cast<long>(best)), Integer(static_cast<long>(D)));
    g.canonicalize();
    return g;
  }
  u128 best = ~u128{0};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (merged[i].type == merged[j].type) continue;
    u128 d = wrap_diff(merged[i].pos, merged[j].pos);
    u128 e = static_cast<u128>(merged[i].err) + merged[j].err;
    if (d <= e) throw PrecisionCapError("cross gap below the fixed-point resolution");
    best = std::min(best, d - e);
  }
  return units_to_rational(best);
}

ArcSet neighbourhood_arcs(const GroupBall& ball, const Rational& delta) {
  if (delta <= 0 || delta.get_num() != 1 ||
      mpz_popcount(delta.get_den_mpz_t()) != 1) {
    throw InvalidInputError("delta must be a power of two");
  }
  const long e = bit_length(delta.get_den()) - 1;
  if (ball.exact()) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), Integer(static_cast<long>(ball.modulus())).get_mpz_t(),
            delta.get_den_mpz_t());
    if (bit_length(den) <= 62) {
      const std::int64_t one = den.get_si();
      const std::int64_t scale = one / ball.modulus();
      const std::int64_t r = one >> e;
      std::vector<Interval> pieces;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        const std::int64_t c = ball.residue(i) * scale;
        const std::int64_t lo = c - r, hi = c + r;
        if (lo < 0) {
          pieces.push_back({Frac{0, one}, Frac{hi, one}});
          pieces.push_back({Frac{lo + one, one}, Frac{one, one}});
        } else if (hi > one) {
          pieces.push_back({Frac{lo, one}, Frac{one, one}});
          pieces.push_back({Frac{0, one}, Frac{hi - one, one}});
        } else {
          pieces.push_back({Frac{lo, one}, Frac{hi, one}});
        }
      }
      return ArcSet::from_intervals(std::move(pieces));
    }
  }
  const long K = e + 22;
  if (K > 62) throw PrecisionCapError("delta below 2^-40 is not supported");
  const int shift = static_cast<int>(128 - K);
  const std::int64_t one = std::int64_t{1} << K;
  const std::int64_t R = (std::int64_t{1} << 22) - 8;
  std::vector<Interval> pieces;
  pieces.reserve(ball.size() + 2);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::int64_t P;
    if (ball.exact()) {
      i128 num = static_cast<i128>(ball.residue(i)) << K;
      P = static_cast<std::int64_t>(num / ball.modulus());
    } else {
      if (static_cast<u128>(ball.error(i)) >= (u128{1} << shift)) {
        throw PrecisionCapError("ball point error exceeds the arc grid");
      }
      P = static_cast<std::int64_t>(ball.position(i) >> shift);
    }
    std::int64_t lo = P - 1 - R, hi = P + 2 + R;
    if (lo < 0) {
      pieces.push_back({Frac{0, one}, Frac{hi, one}});
      pieces.push_back({Frac{lo + one, one}, Frac{one, one}});
    } else if (hi > one) {
      pieces.push_back({Frac{lo, one}, Frac{one, one}});
      pieces.push_back({Frac{0, one}, Frac{hi - one, one}});
    } else {
      pieces.push_back({Frac{lo, one}, Frac{hi, one}});
    }
  }
  return ArcSet::from_intervals(std::move(pieces));
}

}  // namespace bohrseq
