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

#pragma once

// Doubloons of order 2n+1: 2 x (n+1) arrays holding a permutation of
// 0..2n+1, rooted at top[0] = 0. Used as a brute-force combinatorial model
// of the central gamma coefficient a_{2n+1,n+1}(q).

#include <optional>
#include <span>
#include <vector>

#include "core/ring.hpp"

namespace qeuler {

class Doubloon {
 public:
  /// Validates shape, the permutation property and the rooting top[0] = 0.
  static std::optional<Doubloon> make(std::vector<int> top, std::vector<int> bottom);

  /// n, where the order is 2n+1.
  int half_order() const { return static_cast<int>(top_.size()) - 1; }
  std::span<const int> top() const { return top_; }
  std::span<const int> bottom() const { return bottom_; }

  /// top[0..n] followed by bottom[n..0].
  std::vector<int> reading_word() const;

 private:
  Doubloon(std::vector<int> top, std::vector<int> bottom)
      : top_(std::move(top)), bottom_(std::move(bottom)) {}

  std::vector<int> top_;
  std::vector<int> bottom_;
};

/// Number of positions i (1-based) with w_i > w_{i+1}.
int word_des(std::span<const int> w);
/// Sum of those positions.
int word_maj(std::span<const int> w);

/// maj(w) - (n+1) des(w) + n^2 on the reading word.
int cmaj_prime(const Doubloon& d);

/// Every column quadruple (a_{k-1}, a_k, b_{k-1}, b_k) has a cyclic rotation
/// that is strictly increasing or strictly decreasing.
bool is_interlaced(const Doubloon& d);

struct DoubloonCensus {
  QPoly gf;             // sum of q^{cmaj'} over interlaced doubloons
  long interlaced = 0;  // gf at q = 1
  long candidates = 0;  // (2n+1)!
  int min_stat = 0;
  int max_stat = 0;
};

inline constexpr int kDefaultDoubloonGuard = 4;

/// Enumerates all rooted doubloons of order 2n+1. Throws std::invalid_argument
/// when n < 1 or n exceeds `guard`.
DoubloonCensus interlaced_census(int n, int guard = kDefaultDoubloonGuard);
inline QPoly interlaced_gf(int n, int guard = kDefaultDoubloonGuard) {
  return interlaced_census(n, guard).gf;
}

}  // namespace qeuler
