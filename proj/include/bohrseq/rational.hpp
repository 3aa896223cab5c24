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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bohrseq {

using Integer = mpz_class;
using Rational = mpq_class;
using u128 = unsigned __int128;
using i128 = __int128;

/// Parses "p/q", "p" or a finite decimal such as "0.25". Throws
/// InvalidInputError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(i128 v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// The representative of q modulo 1 in [0, 1).
Rational frac_part(const Rational& q);

/// ||q||, the distance from q to the nearest integer.
Rational dist_to_int(const Rational& q);

/// 2^e for any integer e.
Rational pow2(long e);

/// Number of bits needed to write |z|; 0 for z = 0.
long bit_length(const Integer& z);

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);  // throws BudgetExhaustedError
Integer from_i128(i128 v);
i128 to_i128(const Integer& z);  // throws BudgetExhaustedError
Integer from_u128(u128 v);
u128 to_u128(const Integer& z);  // requires 0 <= z < 2^128

/// A not necessarily reduced fraction with 64-bit parts and positive
/// denominator. Arc endpoints are stored this way; all comparisons go through
/// 128-bit cross multiplication and are exact.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational to_rational() const;
  static Frac from_rational(const Rational& q);  // throws if it does not fit
};

inline int cmp(const Frac& a, const Frac& b) {
  i128 l = static_cast<i128>(a.num) * b.den;
  i128 r = static_cast<i128>(b.num) * a.den;
  return (l > r) - (l < r);
}
inline bool operator<(const Frac& a, const Frac& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Frac& a, const Frac& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Frac& a, const Frac& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Frac& a, const Frac& b) { return cmp(a, b) >= 0; }
inline bool operator==(const Frac& a, const Frac& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Frac& a, const Frac& b) { return cmp(a, b) != 0; }

int cmp(const Frac& a, const Rational& b);

std::string to_string(const Frac& f);

}  // namespace bohrseq
