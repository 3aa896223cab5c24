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

#include "bohrseq/torus.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

const Rational kHalf(1, 2);
constexpr unsigned long kTrialLimit = 1000000;

// radicand = square^2 * free with free squarefree.
void split_square(const Integer& radicand, Integer& square, Integer& free) {
  if (radicand <= 0) throw InvalidInputError("radicand must be positive");
  square = 1;
  free = 1;
  Integer rest = radicand;
  bool exhausted = true;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) {
      exhausted = false;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2 == 1) free *= p;
  }
  if (rest == 1) return;
  if (exhausted) {
    // Every prime factor of rest exceeds the trial limit.
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
      square *= s;
      return;
    }
    if (rest >= Integer("1000000000000000000")) {
      throw InvalidInputError("cannot certify the radicand squarefree: " + radicand.get_str());
    }
  }
  free *= rest;
}

using Mat = std::array<Integer, 4>;  // [[m0, m1], [m2, m3]]

Mat cf_matrix(const std::vector<Integer>& q) {
  Mat m{Integer(1), Integer(0), Integer(0), Integer(1)};
  for (const Integer& a : q) {
    Mat n{m[0] * a + m[1], m[0], m[2] * a + m[3], m[2]};
    m = n;
  }
  return m;
}

}  // namespace

std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::rational: return "rational";
    case PointKind::quadratic_surd: return "sqrt";
    case PointKind::cfrac: return "cfrac";
    case PointKind::combination: return "combination";
  }
  return "?";
}

TorusPoint TorusPoint::rational(const Rational& q) {
  TorusPoint p;
  p.offset_ = q;
  p.offset_.canonicalize();
  p.normalize();
  return p;
}

TorusPoint TorusPoint::rational(long num, long den) {
  if (den == 0) throw InvalidInputError("zero denominator");
  return rational(Rational(Integer(num), Integer(den)));
}

TorusPoint TorusPoint::surd(const Integer& radicand, const Rational& coeff,
                            const Rational& offset) {
  if (radicand <= 0) throw InvalidInputError("radicand must be positive");
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    throw InvalidInputError("radicand is a perfect square: " + radicand.get_str());
  }
  Integer square, free;
  split_square(radicand, square, free);
  TorusPoint p;
  p.offset_ = offset;
  p.offset_.canonicalize();
  Rational c = coeff * square;
  c.canonicalize();
  if (c != 0) p.terms_.push_back({c, free});
  p.normalize();
  return p;
}

TorusPoint TorusPoint::cfrac(const std::vector<Integer>& head,
                             const std::vector<Integer>& period) {
  if (head.empty() && period.empty()) throw InvalidInputError("empty continued fraction");
  for (size_t i = 1; i < head.size(); ++i) {
    if (head[i] < 1) throw InvalidInputError("partial quotients after the first must be >= 1");
  }
  for (const Integer& b : period) {
    if (b < 1) throw InvalidInputError("periodic partial quotients must be >= 1");
  }
  Mat h = cf_matrix(head);
  if (period.empty()) {
    // x = h0 / h2 for the finite expansion.
    TorusPoint p = rational(Rational(h[0], h[2]));
    p.kind_ = PointKind::cfrac;
    return p;
  }
  // y = [b0; b1, ..., y] solves Q y^2 + (Q' - P) y - P' = 0.
  Mat per = cf_matrix(period);
  Integer P = per[0], P1 = per[1], Q = per[2], Q1 = per[3];
  Integer disc = (Q1 - P) * (Q1 - P) + 4 * Q * P1;
  if (mpz_perfect_square_p(disc.get_mpz_t())) {
    throw InvalidInputError("periodic tail does not define a quadratic irrational");
  }
  // y = (u + sqrt(disc)) / v and x = (A y + A') / (B y + B').
  Integer u = P - Q1, v = 2 * Q;
  Integer n0 = h[0] * u + h[1] * v, n1 = h[0];
  Integer d0 = h[2] * u + h[3] * v, d1 = h[2];
  Integer den = d0 * d0 - d1 * d1 * disc;
  Rational off(n0 * d0 - n1 * d1 * disc, den);
  Rational coeff(n1 * d0 - n0 * d1, den);
  off.canonicalize();
  coeff.canonicalize();
  TorusPoint p = surd(disc, coeff, off);
  p.kind_ = PointKind::cfrac;
  return p;
}

TorusPoint TorusPoint::combination(const std::vector<TorusPoint>& points,
                                   const std::vector<Integer>& coeffs) {
  if (points.size() != coeffs.size()) {
    throw InvalidInputError("combination length does not match the generator count");
  }
  TorusPoint acc;
  for (size_t j = 0; j < points.size(); ++j) {
    if (coeffs[j] != 0) acc = acc + points[j].scaled(coeffs[j]);
  }
  return acc;
}

void TorusPoint::normalize() {
  fixed_.reset();
  if (terms_.empty()) {
    offset_ = frac_part(offset_);
    if (kind_ != PointKind::cfrac) kind_ = PointKind::rational;
    return;
  }
  if (kind_ == PointKind::rational) {
    kind_ = terms_.size() == 1 ? PointKind::quadratic_surd : PointKind::combination;
  } else if (kind_ == PointKind::quadratic_surd && terms_.size() > 1) {
    kind_ = PointKind::combination;
  }
  // The value is irrational, so its floor is decided at some finite precision.
  for (long k = 64;; k *= 2) {
    Rational a = approximant(k);
    Rational e = pow2(-k);
    Integer f1 = floor_of(a - e), f2 = floor_of(a + e);
    if (f1 == f2) {
      offset_ -= f1;
      return;
    }
    if (k > 1 << 16) throw PrecisionCapError("cannot reduce point modulo 1");
  }
}

Rational TorusPoint::approximant(long k) const {
  if (terms_.empty()) return offset_;
  if (k < 0) k = 0;
  long K = k + 1 + bit_length(Integer(static_cast<unsigned long>(terms_.size())));
  Rational sum = offset_;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 4, static_cast<unsigned long>(K));
  Integer twoK;
  mpz_ui_pow_ui(twoK.get_mpz_t(), 2, static_cast<unsigned long>(K));
  for (const SurdTerm& t : terms_) {
    const Integer& a = t.coeff.get_num();
    const Integer& b = t.coeff.get_den();
    Integer radicand = a * a * t.radicand * scale;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
    Rational term(s, b * twoK);
    term.canonicalize();
    if (a < 0) term = -term;
    sum += term;
  }
  return sum;
}

u128 TorusPoint::fixed_point() const {
  if (fixed_) return *fixed_;
  Rational a = frac_part(approximant(130));
  Integer f = floor_of(a * pow2(128));
  fixed_ = to_u128(f);
  return *fixed_;
}

TorusPoint TorusPoint::operator+(const TorusPoint& other) const {
  TorusPoint out;
  out.offset_ = offset_ + other.offset_;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() && terms_[i].radicand < other.terms_[j].radicand)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || other.terms_[j].radicand < terms_[i].radicand) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({c, terms_[i].radicand});
      ++i;
      ++j;
    }
  }
  out.kind_ = PointKind::rational;
  out.normalize();
  return out;
}

TorusPoint TorusPoint::operator-() const {
  TorusPoint out;
  out.offset_ = -offset_;
  for (const SurdTerm& t : terms_) out.terms_.push_back({-t.coeff, t.radicand});
  out.normalize();
  return out;
}

TorusPoint TorusPoint::operator-(const TorusPoint& other) const { return *this + (-other); }

TorusPoint TorusPoint::scaled(const Integer& k) const {
  TorusPoint out;
  if (k == 0) return out;
  out.offset_ = offset_ * k;
  for (const SurdTerm& t : terms_) out.terms_.push_back({t.coeff * k, t.radicand});
  out.normalize();
  return out;
}

bool TorusPoint::operator==(const TorusPoint& other) const {
  if (offset_ != other.offset_ || terms_.size() != other.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].radicand != other.terms_[i].radicand ||
        terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string TorusPoint::to_string() const {
  std::ostringstream os;
  os << bohrseq::to_string(offset_);
  for (const SurdTerm& t : terms_) {
    os << (t.coeff < 0 ? "-" : "+") << bohrseq::to_string(Rational(abs(t.coeff)))
       << "*sqrt(" << t.radicand.get_str() << ")";
  }
  return os.str();
}

NormInterval scaled_norm(const Integer& n, const TorusPoint& beta, long k) {
  if (beta.is_rational()) {
    Rational v = dist_to_int(beta.offset() * n);
    return {v, v};
  }
  Rational a = beta.approximant(k);
  Rational v = dist_to_int(a * n);
  Rational err = pow2(-k) * abs(n);
  Rational lo = v - err, hi = v + err;
  if (lo < 0) lo = 0;
  if (hi > kHalf) hi = kHalf;
  return {lo, hi};
}

Comparison cmp_threshold(const NormInterval& v, const Rational& c) {
  if (v.hi <= c) return Comparison::at_most;
  if (v.lo > c) return Comparison::greater;
  return Comparison::undecided;
}

namespace {

long start_precision(const Integer& n) { return 64 + bit_length(n); }

}  // namespace

bool norm_at_most(const Integer& n, const TorusPoint& beta, const Rational& c,
                  const Budgets& budgets) {
  for (long k = start_precision(n);; k *= 2) {
    if (k > budgets.precision_cap) k = budgets.precision_cap;
    Comparison r = cmp_threshold(scaled_norm(n, beta, k), c);
    if (r != Comparison::undecided) return r == Comparison::at_most;
    if (k >= budgets.precision_cap) {
      throw PrecisionCapError("||" + n.get_str() + " * (" + beta.to_string() +
                              ")|| <= " + to_string(c) + " undecided at the precision cap");
    }
  }
}

bool norm_at_least(const Integer& n, const TorusPoint& beta, const Rational& c,
                   const Budgets& budgets) {
  for (long k = start_precision(n);; k *= 2) {
    if (k > budgets.precision_cap) k = budgets.precision_cap;
    NormInterval v = scaled_norm(n, beta, k);
    if (v.lo >= c) return true;
    if (v.hi < c) return false;
    if (k >= budgets.precision_cap) {
      throw PrecisionCapError("||" + n.get_str() + " * (" + beta.to_string() +
                              ")|| >= " + to_string(c) + " undecided at the precision cap");
    }
  }
}

NormInterval tight_norm(const Integer& n, const TorusPoint& beta, const Rational& width,
                        const Budgets& budgets) {
  for (long k = start_precision(n);; k *= 2) {
    if (k > budgets.precision_cap) k = budgets.precision_cap;
    NormInterval v = scaled_norm(n, beta, k);
    if (v.hi - v.lo <= width || k >= budgets.precision_cap) return v;
  }
}

std::optional<NormInterval> lemma1_linear_bound(const TorusPoint& alpha, std::int64_t n,
                                                const Rational& d, const Budgets& budgets) {
  if (n < 1) throw InvalidInputError("lemma1_linear_bound needs n >= 1");
  if (d < 0 || d >= Rational(1, 3)) throw InvalidInputError("lemma1_linear_bound needs 0 <= d < 1/3");
  for (std::int64_t k = 1; k <= n; ++k) {
    if (!norm_at_most(Integer(static_cast<long>(k)), alpha, d, budgets)) return std::nullopt;
  }
  NormInterval v = tight_norm(1, alpha, pow2(-64), budgets);
  Rational cap = d / n;
  if (v.hi > cap) v.hi = cap;
  return v;
}

std::optional<NormInterval> lemma1_geometric_bound(const TorusPoint& alpha,
                                                   const TorusPoint& beta, std::int64_t n,
                                                   const Rational& d,
                                                   const Budgets& budgets) {
  if (n < 1) throw InvalidInputError("lemma1_geometric_bound needs n >= 1");
  if (d < 0 || d >= Rational(1, 6)) {
    throw InvalidInputError("lemma1_geometric_bound needs 0 <= d < 1/6");
  }
  TorusPoint step = alpha;
  for (std::int64_t l = 0; l <= n; ++l) {
    if (!norm_at_most(1, beta + step, d, budgets)) return std::nullopt;
    step = step + step;
  }
  NormInterval v = tight_norm(1, alpha, pow2(-64), budgets);
  Rational cap = d * pow2(2 - static_cast<long>(n));
  if (v.hi > cap) v.hi = cap;
  return v;
}

}  // namespace bohrseq
