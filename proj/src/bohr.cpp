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

#include "bohrseq/bohr.hpp"

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

constexpr std::int64_t kMaxN = std::int64_t{1} << 60;

}  // namespace

BohrKernel::BohrKernel(std::vector<TorusPoint> alphas, const Rational& threshold,
                       const Budgets& budgets)
    : alphas_(std::move(alphas)), threshold_(threshold), budgets_(budgets) {
  if (alphas_.empty()) throw InvalidInputError("Bohr set needs at least one generator");
  if (threshold_ <= 0) throw InvalidInputError("Bohr set needs eps > 0");
  trivial_ = threshold_ >= Rational(1, 2);
  if (!trivial_) bound128_ = to_u128(floor_of(threshold_ * pow2(128)));
  for (const TorusPoint& a : alphas_) {
    Gen g;
    const Integer& q = a.offset().get_den();
    if (a.is_rational() && bit_length(q) <= 62) {
      g.residue = true;
      g.p = a.offset().get_num().get_si();
      g.q = q.get_si();
      g.bound = trivial_ ? g.q : floor_of(threshold_ * q).get_si();
    } else {
      g.pos = a.fixed_point();
    }
    gens_.push_back(g);
  }
}

bool BohrKernel::test_one(std::size_t j, std::int64_t n) const {
  const Gen& g = gens_[j];
  if (g.residue) {
    std::int64_t r = static_cast<std::int64_t>(
        static_cast<i128>(n % g.q) * g.p % g.q);
    std::int64_t d = r < g.q - r ? r : g.q - r;
    return d <= g.bound;
  }
  u128 v = g.pos * static_cast<u128>(n);
  i128 s = static_cast<i128>(v);
  u128 a = s < 0 ? static_cast<u128>(-(s + 1)) + 1 : static_cast<u128>(s);
  u128 err = static_cast<u128>(n) * 2;
  if (a + err <= bound128_) return true;
  if (a >= err && a - err > bound128_) return false;
  return norm_at_most(Integer(static_cast<long>(n)), alphas_[j], threshold_, budgets_);
}

bool BohrKernel::test(std::int64_t n) const {
  if (n < 1 || n > kMaxN) throw BudgetExhaustedError("Bohr index out of range");
  if (trivial_) return true;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (!test_one(j, n)) return false;
  }
  return true;
}

void BohrKernel::scan(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) const {
  if (lo < 1) lo = 1;
  if (hi > kMaxN) throw BudgetExhaustedError("Bohr scan beyond 2^60");
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (test(n)) out.push_back(n);
  }
}

std::optional<std::int64_t> BohrKernel::first_member(std::int64_t lo, std::int64_t hi) const {
  if (lo < 1) lo = 1;
  if (hi > kMaxN) throw BudgetExhaustedError("Bohr scan beyond 2^60");
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (test(n)) return n;
  }
  return std::nullopt;
}

BohrSet enumerate_bohr(const std::vector<TorusPoint>& alphas, const Rational& eps,
                       std::int64_t N, const Budgets& budgets) {
  if (N < 1) throw InvalidInputError("Bohr limit must be >= 1");
  BohrKernel kernel(alphas, eps, budgets);
  BohrSet h{alphas, eps, N, {}};
  kernel.scan(1, N, h.members);
  return h;
}

}  // namespace bohrseq
