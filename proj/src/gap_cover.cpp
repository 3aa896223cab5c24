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

#include "bohrseq/gap_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "bohrseq/errors.hpp"

namespace bohrseq {

namespace {

using Vec = std::vector<Integer>;

constexpr long kNormPrecision = 256;

// Row-style Hermite normal form, grown one vector at a time.
class Hnf {
 public:
  explicit Hnf(std::size_t dim) : rows_(dim) {}

  void insert(Vec v) {
    const std::size_t dim = rows_.size();
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[c] == 0) continue;
      if (!rows_[c]) {
        if (v[c] < 0) {
          for (Integer& x : v) x = -x;
        }
        rows_[c] = std::move(v);
        tidy();
        return;
      }
      Vec& h = *rows_[c];
      if (mpz_divisible_p(v[c].get_mpz_t(), h[c].get_mpz_t())) {
        Integer q = v[c] / h[c];
        for (std::size_t i = c; i < dim; ++i) v[i] -= q * h[i];
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h[c].get_mpz_t(),
                 v[c].get_mpz_t());
      Integer hc = h[c] / g, vc = v[c] / g;
      Vec nh(dim), nv(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        nh[i] = x * h[i] + y * v[i];
        nv[i] = hc * v[i] - vc * h[i];
      }
      h = std::move(nh);
      v = std::move(nv);
      tidy();
    }
  }

  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    for (const auto& r : rows_) {
      if (r) out.push_back(*r);
    }
    return out;
  }

 private:
  void tidy() {
    const std::size_t dim = rows_.size();
    for (std::size_t c = 0; c < dim; ++c) {
      if (!rows_[c]) continue;
      Vec& row = *rows_[c];
      for (std::size_t d = c + 1; d < dim; ++d) {
        if (!rows_[d]) continue;
        const Vec& piv = *rows_[d];
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), row[d].get_mpz_t(), piv[d].get_mpz_t());
        if (q == 0) continue;
        for (std::size_t i = d; i < dim; ++i) row[i] -= q * piv[i];
      }
    }
  }

  std::vector<std::optional<Vec>> rows_;
};

// Embeds (n, p_1, ..., p_t) as (n / N, (n a_1 - p_1) / eps, ...).
class Embedding {
 public:
  Embedding(const BohrSet& h) : eps_(h.eps), N_(h.limit) {
    for (const TorusPoint& a : h.alphas) approx_.push_back(a.approximant(160));
  }

  std::vector<double> operator()(const Vec& v) const {
    std::vector<double> f(v.size());
    f[0] = Rational(v[0], Integer(static_cast<long>(N_))).get_d();
    for (std::size_t j = 1; j < v.size(); ++j) {
      Rational r = (approx_[j - 1] * v[0] - v[j]) / eps_;
      f[j] = r.get_d();
    }
    return f;
  }

 private:
  Rational eps_;
  std::int64_t N_;
  std::vector<Rational> approx_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void lll_reduce(std::vector<Vec>& b, const Embedding& embed) {
  const std::size_t r = b.size();
  if (r < 2) return;
  const double delta = 0.99;
  std::vector<std::vector<double>> f(r);
  for (std::size_t i = 0; i < r; ++i) f[i] = embed(b[i]);

  std::vector<std::vector<double>> mu(r, std::vector<double>(r, 0.0));
  std::vector<double> bn(r, 0.0);
  auto gram_schmidt = [&]() {
    std::vector<std::vector<double>> star(r);
    for (std::size_t i = 0; i < r; ++i) {
      star[i] = f[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = bn[j] > 0 ? dot(f[i], star[j]) / bn[j] : 0.0;
        for (std::size_t k = 0; k < star[i].size(); ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      bn[i] = dot(star[i], star[i]);
    }
  };

  std::size_t k = 1;
  for (int iter = 0; k < r && iter < 10000; ++iter) {
    gram_schmidt();
    bool changed = false;
    for (std::size_t jj = k; jj-- > 0;) {
      double q = std::nearbyint(mu[k][jj]);
      if (q == 0.0 || !std::isfinite(q)) continue;
      Integer qi;
      mpz_set_d(qi.get_mpz_t(), q);
      for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= qi * b[jj][i];
      f[k] = embed(b[k]);
      gram_schmidt();
      changed = true;
    }
    (void)changed;
    if (bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(f[k], f[k - 1]);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

// Inverse of an r x r rational matrix, or nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational s = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= s;
      inv[c][k] /= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[i][k] -= f * m[c][k];
        inv[i][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Integer round_product(std::int64_t m, const TorusPoint& a, const Rational& approx) {
  if (a.is_rational()) return floor_of(a.offset() * m + Rational(1, 2));
  return floor_of(approx * m + Rational(1, 2));
}

struct Candidate {
  GapCover cover;
  bool valid = false;
};

void finish(const BohrSet& h, GapCover& c) {
  c.achieved_a = cover_achieved_a(h, c.generators);
  c.achieved_b = cover_achieved_b(h, c.generators);
  c.c1 = cover_c1(c.R(), c.achieved_a, c.achieved_b);
}

bool better(const GapCover& x, const GapCover& y) {
  if (x.c1 != y.c1) return x.c1 < y.c1;
  if (x.R() != y.R()) return x.R() < y.R();
  Rational mx = std::max(x.achieved_a, x.achieved_b);
  Rational my = std::max(y.achieved_a, y.achieved_b);
  return mx < my;
}

GapCover progression_cover(const BohrSet& h) {
  std::int64_t g = 0;
  for (std::int64_t m : h.members) g = std::gcd(g, m);
  GapCover c;
  c.generators.push_back({g, h.members.back() / g});
  c.method = "progression";
  c.containment_verified = true;  // m = (m / g) * g with 1 <= m / g <= K
  finish(h, c);
  return c;
}

std::optional<GapCover> lattice_cover(const BohrSet& h) {
  const std::size_t t = h.alphas.size();
  const std::size_t dim = t + 1;
  std::vector<Rational> approx;
  for (const TorusPoint& a : h.alphas) approx.push_back(a.approximant(160));

  auto member_vector = [&](std::int64_t m) {
    Vec w(dim);
    w[0] = Integer(static_cast<long>(m));
    for (std::size_t j = 0; j < t; ++j) w[j + 1] = round_product(m, h.alphas[j], approx[j]);
    return w;
  };

  Hnf hnf(dim);
  for (std::int64_t m : h.members) hnf.insert(member_vector(m));
  std::vector<Vec> basis = hnf.basis();
  Embedding embed(h);
  lll_reduce(basis, embed);
  const std::size_t r = basis.size();

  // Pick r columns with an invertible minor.
  std::vector<std::size_t> cols;
  std::optional<std::vector<std::vector<Rational>>> inv;
  for (unsigned mask = 0; mask < (1u << dim) && !inv; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    cols.clear();
    for (std::size_t c = 0; c < dim; ++c) {
      if (mask & (1u << c)) cols.push_back(c);
    }
    std::vector<std::vector<Rational>> minor(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) minor[i][k] = basis[i][cols[k]];
    }
    inv = invert(minor);
  }
  if (!inv) return std::nullopt;
  Integer D = 1;
  for (const auto& row : *inv) {
    for (const Rational& x : row) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Vec> adj(r, Vec(r));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      Rational x = (*inv)[k][i] * D;
      adj[k][i] = x.get_num();
    }
  }

  // Coefficients of every member in the reduced basis.
  const std::size_t M = h.members.size();
  std::vector<std::int64_t> coef(M * r);
  std::vector<std::int64_t> lo(r, 0), hi(r, 0);
  for (std::size_t idx = 0; idx < M; ++idx) {
    Vec w = member_vector(h.members[idx]);
    Integer n_check = 0;
    for (std::size_t i = 0; i < r; ++i) {
      Integer s = 0;
      for (std::size_t k = 0; k < r; ++k) s += w[cols[k]] * adj[k][i];
      if (!mpz_divisible_p(s.get_mpz_t(), D.get_mpz_t())) return std::nullopt;
      s /= D;
      if (!fits_int64(s) || abs(s) > Integer("4611686018427387904")) return std::nullopt;
      std::int64_t ci = s.get_si();
      coef[idx * r + i] = ci;
      if (idx == 0 || ci < lo[i]) lo[i] = ci;
      if (idx == 0 || ci > hi[i]) hi[i] = ci;
      n_check += s * basis[i][0];
    }
    if (n_check != w[0]) return std::nullopt;
  }

  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i][0] != 0) {
      if (!fits_int64(basis[i][0])) return std::nullopt;
      used.push_back(i);
    }
  }
  if (used.empty()) return std::nullopt;

  std::optional<GapCover> best;
  std::vector<int> bestsign;
  const std::size_t u = used.size();
  for (unsigned signs = 0; signs < (1u << u); ++signs) {
    GapCover c;
    c.method = "lattice";
    i128 offset = 0;
    bool ok = true;
    for (std::size_t q = 0; q < u; ++q) {
      std::size_t i = used[q];
      std::int64_t n = basis[i][0].get_si();
      bool flip = (signs >> q) & 1u;
      i128 width = static_cast<i128>(hi[i]) - lo[i] + 1;
      if (width > (i128{1} << 62)) ok = false;
      std::int64_t gn = flip ? -n : n;
      i128 least = flip ? -static_cast<i128>(hi[i]) : lo[i];
      offset += (least - 1) * static_cast<i128>(gn);
      c.generators.push_back({gn, static_cast<std::int64_t>(width)});
    }
    if (!ok || offset > (i128{1} << 62) || offset < -(i128{1} << 62)) continue;
    if (offset != 0) c.generators.push_back({static_cast<std::int64_t>(offset), 1});
    finish(h, c);
    if (!best || better(c, *best)) {
      best = c;
      bestsign.assign(u, 0);
      for (std::size_t q = 0; q < u; ++q) bestsign[q] = (signs >> q) & 1u;
    }
  }
  if (!best) return std::nullopt;

  // Replay every member through the chosen generators.
  for (std::size_t idx = 0; idx < M; ++idx) {
    i128 sum = 0;
    for (std::size_t q = 0; q < u; ++q) {
      std::size_t i = used[q];
      std::int64_t ci = coef[idx * r + i];
      std::int64_t least = bestsign[q] ? -hi[i] : lo[i];
      std::int64_t k = (bestsign[q] ? -ci : ci) - least + 1;
      const Generator& g = best->generators[q];
      if (k < 1 || k > g.K) return std::nullopt;
      sum += static_cast<i128>(k) * g.n;
    }
    if (best->R() > static_cast<std::int64_t>(u)) sum += best->generators.back().n;
    if (sum != h.members[idx]) return std::nullopt;
  }
  best->containment_verified = true;
  return best;
}

}  // namespace

Rational cover_achieved_a(const BohrSet& h, const std::vector<Generator>& gens) {
  Rational best = 0;
  for (const TorusPoint& a : h.alphas) {
    Rational s = 0;
    for (const Generator& g : gens) {
      s += scaled_norm(g.n < 0 ? -g.n : g.n, a, kNormPrecision).hi * g.K;
    }
    s /= h.eps;
    if (s > best) best = s;
  }
  return best;
}

Rational cover_achieved_b(const BohrSet& h, const std::vector<Generator>& gens) {
  Integer s = 0;
  for (const Generator& g : gens) {
    Integer n(static_cast<long>(g.n));
    s += abs(n) * Integer(static_cast<long>(g.K));
  }
  Rational b(s, Integer(static_cast<long>(h.limit)));
  b.canonicalize();
  return b;
}

std::int64_t cover_c1(std::int64_t R, const Rational& a, const Rational& b) {
  Rational m = Rational(R);
  if (a > m) m = a;
  if (b > m) m = b;
  if (m < 1) m = 1;
  return to_int64(ceil_of(m));
}

GapCover decompose_gap(const BohrSet& h, const Budgets& budgets) {
  if (h.members.empty()) throw InvalidInputError("cannot cover an empty Bohr set");
  GapCover best = progression_cover(h);
  if (h.members.size() > 1) {
    std::optional<GapCover> lat = lattice_cover(h);
    if (lat && better(*lat, best)) best = *lat;
  }
  // Cross-check the replayed witnesses with the reachable-sum DP when the sum
  // range is small enough.
  Integer width = 1;
  for (const Generator& g : best.generators) {
    width += Integer(static_cast<long>(g.K - 1)) * abs(Integer(static_cast<long>(g.n)));
  }
  if (width <= Integer(static_cast<unsigned long>(budgets.dp_states))) {
    if (!verify_cover_containment(h, best, budgets)) {
      throw std::logic_error("cover witnesses disagree with the containment DP");
    }
  }
  return best;
}

bool verify_cover_containment(const BohrSet& h, const GapCover& cover,
                              const Budgets& budgets) {
  if (cover.generators.empty()) return h.members.empty();
  i128 base = 0, width = 1;
  for (const Generator& g : cover.generators) {
    if (g.n == 0 || g.K < 1) return false;
    base += g.n > 0 ? static_cast<i128>(g.n) : static_cast<i128>(g.K) * g.n;
    width += static_cast<i128>(g.K - 1) * (g.n < 0 ? -static_cast<i128>(g.n) : g.n);
    if (width > static_cast<i128>(budgets.dp_states)) {
      throw BudgetExhaustedError("containment DP needs more than " +
                                 std::to_string(budgets.dp_states) + " states");
    }
  }
  const std::size_t W = static_cast<std::size_t>(width);
  std::vector<char> reach(W, 0), next(W, 0);
  reach[0] = 1;
  std::size_t span = 1;  // reachable offsets lie in [0, span)
  for (const Generator& g : cover.generators) {
    const std::size_t step = static_cast<std::size_t>(g.n < 0 ? -g.n : g.n);
    const std::size_t K = static_cast<std::size_t>(g.K);
    std::size_t new_span = span + (K - 1) * step;
    std::fill(next.begin(), next.begin() + new_span, 0);
    for (std::size_t res = 0; res < step && res < new_span; ++res) {
      std::size_t count = 0;
      std::size_t idx = 0;
      for (std::size_t x = res; x < new_span; x += step, ++idx) {
        if (x < span && reach[x]) ++count;
        if (idx >= K) {
          std::size_t old = x - K * step;
          if (old < span && reach[old]) --count;
        }
        next[x] = count > 0;
      }
    }
    std::swap(reach, next);
    span = new_span;
  }
  for (std::int64_t m : h.members) {
    i128 off = static_cast<i128>(m) - base;
    if (off < 0 || off >= width || !reach[static_cast<std::size_t>(off)]) return false;
  }
  return true;
}

}  // namespace bohrseq
