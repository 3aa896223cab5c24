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

#include "bohrseq/certified.hpp"

#include <mpfr.h>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

constexpr mpfr_prec_t kPrec = 256;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kPrec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

unsigned long small_part(const Integer& z) {
  if (z <= 0 || !mpz_fits_ulong_p(z.get_mpz_t())) {
    throw InvalidInputError("exponent part out of range: " + z.get_str());
  }
  return z.get_ui();
}

Rational pow_dir(const Rational& x, const Rational& r, mpfr_rnd_t rnd) {
  if (x < 0) throw InvalidInputError("negative base in power bound");
  if (r <= 0) throw InvalidInputError("power bound needs a positive exponent");
  if (x == 0) return Rational(0);
  unsigned long p = small_part(r.get_num());
  unsigned long q = small_part(r.get_den());
  Mpfr v;
  mpfr_set_q(v.get(), x.get_mpq_t(), rnd);
  mpfr_pow_ui(v.get(), v.get(), p, rnd);
  if (q != 1) mpfr_rootn_ui(v.get(), v.get(), q, rnd);
  return v.to_rational();
}

Rational log2_dir(const Rational& x, mpfr_rnd_t rnd) {
  if (x <= 0) throw InvalidInputError("log2 of a non-positive value");
  Mpfr v;
  mpfr_set_q(v.get(), x.get_mpq_t(), rnd);
  mpfr_log2(v.get(), v.get(), rnd);
  return v.to_rational();
}

}  // namespace

Rational pow_up(const Rational& x, const Rational& r) { return pow_dir(x, r, MPFR_RNDU); }
Rational pow_down(const Rational& x, const Rational& r) { return pow_dir(x, r, MPFR_RNDD); }
Rational log2_up(const Rational& x) { return log2_dir(x, MPFR_RNDU); }
Rational log2_down(const Rational& x) { return log2_dir(x, MPFR_RNDD); }

}  // namespace bohrseq
