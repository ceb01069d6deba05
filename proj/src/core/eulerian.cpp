// Copyright 2026 The qeuler Authors
//
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

#include "core/eulerian.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace qeuler {

char family_char(Family f) {
  switch (f) {
    case Family::CarlitzA: return 'A';
    case Family::TypeB: return 'B';
    case Family::GammaA: return 'a';
    case Family::GammaB: return 'b';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::CarlitzA;
    case 'B': return Family::TypeB;
    case 'a': return Family::GammaA;
    case 'b': return Family::GammaB;
    default: throw std::invalid_argument(std::string("unknown triangle family '") + c + "'");
  }
}

int family_min_n(Family f) { return f == Family::TypeB ? 0 : 1; }

int family_kmin(Family f, int /*n*/) {
  return (f == Family::CarlitzA || f == Family::GammaA) ? 1 : 0;
}

int family_kmax(Family f, int n) {
  switch (f) {
    case Family::CarlitzA: return n;
    case Family::TypeB: return n;
    case Family::GammaA: return (n + 1) / 2;
    case Family::GammaB: return n / 2;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Triangle

namespace {
const QPoly kZeroPoly{};
}

Triangle::Triangle(Family family, int max_n) : family_(family) {
  rows_.push_back({QPoly(1)});  // A_{1,1}, B_{0,0}, a_{1,1}, b_{1,0}
  max_n_ = min_n();
  grow_to(max_n);
}

const QPoly& Triangle::at(int n, int k) const {
  if (n < min_n() || n > max_n_ || k < kmin(n) || k > kmax(n)) return kZeroPoly;
  return rows_[static_cast<std::size_t>(n - min_n())][static_cast<std::size_t>(k - kmin(n))];
}

std::span<const QPoly> Triangle::row(int n) const {
  if (n < min_n() || n > max_n_) throw std::out_of_range("triangle row out of range");
  return rows_[static_cast<std::size_t>(n - min_n())];
}

QPoly Triangle::next_entry(int n, int k) const {
  const std::size_t ks = static_cast<std::size_t>(k);
  switch (family_) {
    case Family::CarlitzA:
      // [k] A_{n-1,k} + q^{k-1} [n+1-k] A_{n-1,k-1}
      return q_int(k) * at(n - 1, k) + (q_int(n + 1 - k) * at(n - 1, k - 1)).shifted(ks - 1);
    case Family::TypeB: {
      QPoly r = q_int(2 * k + 1) * at(n - 1, k);
      if (k >= 1) r += (q_int(2 * n - 2 * k + 1) * at(n - 1, k - 1)).shifted(2 * ks - 1);
      return r;
    }
    case Family::GammaA: {
      // [k] a_{n-1,k} + (1 + q^{k-1}) q^{k-1} [n+2-2k] a_{n-1,k-1}
      const QPoly lift = QPoly(1) + QPoly::monomial(1, ks - 1);
      return q_int(k) * at(n - 1, k) +
             (lift * q_int(n + 2 - 2 * k) * at(n - 1, k - 1)).shifted(ks - 1);
    }
    case Family::GammaB: {
      // [2k+1] b_{n-1,k} + (1+q)(1+q^{2k-1}) q^{2k-1} [n+1-2k]_{q^2} b_{n-1,k-1}
      QPoly r = q_int(2 * k + 1) * at(n - 1, k);
      if (k >= 1) {
        const QPoly lift = QPoly{1, 1} * (QPoly(1) + QPoly::monomial(1, 2 * ks - 1));
        r += (lift * q_int(n + 1 - 2 * k).substitute_power(2) * at(n - 1, k - 1))
                 .shifted(2 * ks - 1);
      }
      return r;
    }
  }
  return {};
}

void Triangle::grow_to(int max_n) {
  for (int n = max_n_ + 1; n <= max_n; ++n) {
    std::vector<QPoly> row;
    row.reserve(static_cast<std::size_t>(kmax(n) - kmin(n) + 1));
    for (int k = kmin(n); k <= kmax(n); ++k) row.push_back(next_entry(n, k));
    rows_.push_back(std::move(row));
    max_n_ = n;
  }
}

namespace {

struct TriangleCache {
  std::mutex mu;
  std::array<std::shared_ptr<const Triangle>, 4> slots;
};

TriangleCache& triangle_cache() {
  static TriangleCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const Triangle> triangle(Family family, int max_n) {
  auto& cache = triangle_cache();
  std::lock_guard lock(cache.mu);
  auto& slot = cache.slots[static_cast<std::size_t>(family)];
  if (!slot) {
    slot = std::make_shared<const Triangle>(family, max_n);
  } else if (slot->max_n() < max_n) {
    auto grown = std::make_shared<Triangle>(*slot);
    grown->grow_to(max_n);
    slot = std::move(grown);
  }
  return slot;
}

Triangle carlitz_triangle(int max_n) {
  if (max_n < 1) throw std::invalid_argument("carlitz_triangle: max_n must be >= 1");
  return Triangle(Family::CarlitzA, max_n);
}

Triangle typeB_triangle(int max_n) {
  if (max_n < 0) throw std::invalid_argument("typeB_triangle: max_n must be >= 0");
  return Triangle(Family::TypeB, max_n);
}

Triangle gamma_a_triangle(int max_n) {
  if (max_n < 1) throw std::invalid_argument("gamma_a_triangle: max_n must be >= 1");
  return Triangle(Family::GammaA, max_n);
}

Triangle gamma_b_triangle(int max_n) {
  if (max_n < 1) throw std::invalid_argument("gamma_b_triangle: max_n must be >= 1");
  return Triangle(Family::GammaB, max_n);
}

// ---------------------------------------------------------------------------
// Bivariate polynomials and oracles

TQPoly carlitz_poly(int n) {
  if (n < 1) throw std::invalid_argument("carlitz_poly: n must be >= 1");
  const auto tri = triangle(Family::CarlitzA, n);
  std::vector<QLaurent> terms;
  for (int k = 1; k <= n; ++k) terms.emplace_back(tri->at(n, k));
  return TQPoly(std::move(terms));
}

TQPoly typeB_poly(int n) {
  if (n < 0) throw std::invalid_argument("typeB_poly: n must be >= 0");
  const auto tri = triangle(Family::TypeB, n);
  std::vector<QLaurent> terms;
  for (int k = 0; k <= n; ++k) terms.emplace_back(tri->at(n, k));
  return TQPoly(std::move(terms));
}

namespace {

QPoly power(const QPoly& base, int e) {
  QPoly acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

// denominator * sum_{k<=window} [step*k + 1]_q^n t^k, truncated; t-degrees
// above keep_tdeg must vanish.
TQPoly series_oracle(int n, int window, int step, int keep_tdeg, const char* what) {
  std::vector<QLaurent> series;
  series.reserve(static_cast<std::size_t>(window) + 1);
  for (int k = 0; k <= window; ++k) series.emplace_back(power(q_int(step * k + 1), n));
  const TQPoly denom = poch_t(0, n + 1, Sign::Plus, static_cast<unsigned>(step));
  const TQPoly product = (denom * TQPoly(std::move(series))).truncated(window);
  for (int d = keep_tdeg + 1; d <= window; ++d) {
    if (!product.coeff(static_cast<std::size_t>(d)).is_zero()) {
      throw VerificationError(std::string(what) + ": nonzero tail coefficient at t^" +
                             std::to_string(d) + " for n=" + std::to_string(n));
    }
  }
  return product.truncated(static_cast<std::size_t>(keep_tdeg));
}

}  // namespace

TQPoly carlitz_series_oracle(int n, int window) {
  if (n < 1) throw std::invalid_argument("carlitz_series_oracle: n must be >= 1");
  if (window < n) throw std::invalid_argument("carlitz_series_oracle: window must be >= n");
  return series_oracle(n, window, 1, n - 1, "carlitz_series_oracle");
}

TQPoly typeB_series_oracle(int n, int window) {
  if (n < 0) throw std::invalid_argument("typeB_series_oracle: n must be >= 0");
  if (window < n + 1) throw std::invalid_argument("typeB_series_oracle: window must be >= n+1");
  return series_oracle(n, window, 2, n, "typeB_series_oracle");
}

TQPoly gamma_expand_A(int n) {
  if (n < 1) throw std::invalid_argument("gamma_expand_A: n must be >= 1");
  const auto tri = triangle(Family::GammaA, n);
  TQPoly sum;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    sum += TQPoly::monomial(QLaurent(tri->at(n, k)), static_cast<std::size_t>(k - 1)) *
           poch_t(k, n + 1 - 2 * k, Sign::Minus, 1);
  }
  return sum;
}

TQPoly gamma_expand_B(int n) {
  if (n < 1) throw std::invalid_argument("gamma_expand_B: n must be >= 1");
  const auto tri = triangle(Family::GammaB, n);
  TQPoly sum;
  for (int k = 0; k <= n / 2; ++k) {
    sum += TQPoly::monomial(QLaurent(tri->at(n, k)), static_cast<std::size_t>(k)) *
           poch_t(2 * k + 1, n - 2 * k, Sign::Minus, 2);
  }
  return sum;
}

QPoly basis_change_A(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("basis_change_A: need 1 <= k <= n");
  const auto tri = triangle(Family::GammaA, n);
  QPoly sum;
  for (int s = 1; s <= std::min(k, (n + 1) / 2); ++s) {
    // q^{(k-s)s + C(k-s,2)}
    const long e = static_cast<long>(k - s) * s + static_cast<long>(k - s) * (k - s - 1) / 2;
    sum += (q_binom(n + 1 - 2 * s, k - s) * tri->at(n, s)).shifted(static_cast<std::size_t>(e));
  }
  return sum;
}

QPoly basis_change_B(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("basis_change_B: need 0 <= k <= n");
  const auto tri = triangle(Family::GammaB, n);
  QPoly sum;
  for (int s = 0; s <= std::min(k, n / 2); ++s) {
    const long e = static_cast<long>(k) * k - static_cast<long>(s) * s;
    sum += (q_binom(n - 2 * s, k - s).substitute_power(2) * tri->at(n, s))
               .shifted(static_cast<std::size_t>(e));
  }
  return sum;
}

bool bracket_identity_A(int n, int k, int s) {
  auto br = [](long m) { return q_int_signed(m, 1); };
  const QLaurent lift = QLaurent(1) + QLaurent::monomial(1, s);
  const QLaurent lhs = br(n + 1 - 2 * s) * br(s) + br(n - k - s + 1) * lift * br(k - s);
  const QLaurent rhs = br(k) * br(n - k - s + 1) + br(n + 1 - k) * br(k - s);
  return lhs == rhs;
}

bool bracket_identity_B(int n, int k, int s) {
  auto br = [](long m) { return q_int_signed(m, 1); };
  auto br2 = [](long m) { return q_int_signed(m, 2); };
  const QLaurent lift = QLaurent(QPoly{1, 1}) * (QLaurent(1) + QLaurent::monomial(1, 2L * s + 1));
  const QLaurent lhs = br2(n - 2 * s) * br(2 * s + 1) + br2(n - k - s) * lift * br2(k - s);
  const QLaurent rhs = br(2 * k + 1) * br2(n - k - s) + br(2 * n + 1 - 2 * k) * br2(k - s);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// q = 1 integer triangles

BigInt IntTriangle::at(int n, int k) const {
  const int lo = family_min_n(family);
  if (n < lo || n > max_n || k < family_kmin(family, n) || k > family_kmax(family, n)) return 0;
  return rows[static_cast<std::size_t>(n - lo)][static_cast<std::size_t>(k - family_kmin(family, n))];
}

namespace {

template <typename Entry>
IntTriangle build_int_triangle(Family family, int max_n, Entry entry) {
  IntTriangle tri;
  tri.family = family;
  tri.max_n = family_min_n(family);
  tri.rows.push_back(std::vector<BigInt>{BigInt(1)});
  for (int n = tri.max_n + 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    for (int k = family_kmin(family, n); k <= family_kmax(family, n); ++k) {
      row.push_back(entry(tri, n, k));
    }
    tri.rows.push_back(std::move(row));
    tri.max_n = n;
  }
  return tri;
}

}  // namespace

IntTriangle classical_gamma_a(int max_n) {
  if (max_n < 1) throw std::invalid_argument("classical_gamma_a: max_n must be >= 1");
  return build_int_triangle(Family::GammaA, max_n, [](const IntTriangle& t, int n, int k) -> BigInt {
    return BigInt(k) * t.at(n - 1, k) + BigInt(2 * (n + 2 - 2 * k)) * t.at(n - 1, k - 1);
  });
}

IntTriangle classical_gamma_b(int max_n) {
  if (max_n < 1) throw std::invalid_argument("classical_gamma_b: max_n must be >= 1");
  return build_int_triangle(Family::GammaB, max_n, [](const IntTriangle& t, int n, int k) -> BigInt {
    return BigInt(2 * k + 1) * t.at(n - 1, k) + BigInt(4 * (n + 1 - 2 * k)) * t.at(n - 1, k - 1);
  });
}

IntTriangle classical_typeB(int max_n) {
  if (max_n < 0) throw std::invalid_argument("classical_typeB: max_n must be >= 0");
  return build_int_triangle(Family::TypeB, max_n, [](const IntTriangle& t, int n, int k) -> BigInt {
    return BigInt(2 * k + 1) * t.at(n - 1, k) + BigInt(2 * n - 2 * k + 1) * t.at(n - 1, k - 1);
  });
}

}  // namespace qeuler
