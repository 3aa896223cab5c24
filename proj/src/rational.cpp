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

#include "bohrseq/rational.hpp"

#include <cctype>
#include <limits>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw InvalidInputError("not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw InvalidInputError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer p = parse_integer(text.substr(0, slash));
    Integer q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw InvalidInputError("zero denominator in '" + raw + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string digits = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (digits.empty()) digits = "0";
    Integer w = parse_integer(whole);
    Integer f = parse_integer(digits);
    if (digits[0] == '-' || digits[0] == '+') throw InvalidInputError("bad decimal '" + raw + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits.size());
    Integer absw = abs(w);
    Rational r(absw * scale + f, scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(i128 v) { return from_i128(v).get_str(); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_part(const Rational& q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational out(r, q.get_den());
  out.canonicalize();
  return out;
}

Rational dist_to_int(const Rational& q) {
  Rational f = frac_part(q);
  Rational g = 1 - f;
  return f < g ? f : g;
}

Rational pow2(long e) {
  Integer p;
  if (e >= 0) {
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return Rational(p);
  }
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return Rational(Integer(1), p);
}

long bit_length(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

bool fits_int64(const Integer& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == 8;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw BudgetExhaustedError("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

Integer from_u128(u128 v) {
  Integer hi(static_cast<unsigned long>(v >> 64));
  Integer lo(static_cast<unsigned long>(v & ~std::uint64_t{0}));
  return (hi << 64) + lo;
}

Integer from_i128(i128 v) {
  if (v >= 0) return from_u128(static_cast<u128>(v));
  return -from_u128(static_cast<u128>(-(v + 1)) + 1);
}

u128 to_u128(const Integer& z) {
  Integer lo = z & Integer("18446744073709551615");
  Integer hi = z >> 64;
  return (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
}

i128 to_i128(const Integer& z) {
  if (bit_length(z) > 126) throw BudgetExhaustedError("integer exceeds 127 bits: " + z.get_str());
  if (z >= 0) return static_cast<i128>(to_u128(z));
  return -static_cast<i128>(to_u128(-z));
}

Rational Frac::to_rational() const {
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Frac Frac::from_rational(const Rational& q) {
  return Frac{to_int64(q.get_num()), to_int64(q.get_den())};
}

int cmp(const Frac& a, const Rational& b) {
  Integer l = Integer(static_cast<long>(a.num)) * b.get_den();
  Integer r = b.get_num() * Integer(static_cast<long>(a.den));
  int c = mpz_cmp(l.get_mpz_t(), r.get_mpz_t());
  return (c > 0) - (c < 0);
}

std::string to_string(const Frac& f) { return to_string(f.to_rational()); }

}  // namespace bohrseq
