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

#include "bohrseq/rational.hpp"

namespace bohrseq {

// Directed-rounding bounds for the few transcendental quantities the
// construction needs. Each *_up result is >= the true value and each *_down
// result is <= it; the returned rationals are exact images of MPFR values.

/// Bounds on x^r for x >= 0 and rational r > 0.
Rational pow_up(const Rational& x, const Rational& r);
Rational pow_down(const Rational& x, const Rational& r);

/// Bounds on log2(x) for x > 0.
Rational log2_up(const Rational& x);
Rational log2_down(const Rational& x);

}  // namespace bohrseq
