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

#include "core/doubloon.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace qeuler {

std::optional<Doubloon> Doubloon::make(std::vector<int> top, std::vector<int> bottom) {
  if (top.empty() || top.size() != bottom.size() || top.front() != 0) return std::nullopt;
  std::vector<int> all(top);
  all.insert(all.end(), bottom.begin(), bottom.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i)) return std::nullopt;
  }
  return Doubloon(std::move(top), std::move(bottom));
}

std::vector<int> Doubloon::reading_word() const {
  std::vector<int> w(top_);
  w.insert(w.end(), bottom_.rbegin(), bottom_.rend());
  return w;
}

int word_des(std::span<const int> w) {
  int des = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) des += w[i] > w[i + 1] ? 1 : 0;
  return des;
}

int word_maj(std::span<const int> w) {
  int maj = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) maj += static_cast<int>(i) + 1;
  }
  return maj;
}

namespace {

int cmaj_of_word(std::span<const int> w, int n) {
  return word_maj(w) - (n + 1) * word_des(w) + n * n;
}

bool strictly_monotone(const std::array<int, 4>& x) {
  const bool up = x[0] < x[1] && x[1] < x[2] && x[2] < x[3];
  const bool down = x[0] > x[1] && x[1] > x[2] && x[2] > x[3];
  return up || down;
}

bool quad_ok(int a0, int a1, int b0, int b1) {
  std::array<int, 4> quad{a0, a1, b0, b1};
  for (int r = 0; r < 4; ++r) {
    if (strictly_monotone(quad)) return true;
    std::rotate(quad.begin(), quad.begin() + 1, quad.end());
  }
  return false;
}

bool interlaced_arrays(std::span<const int> top, std::span<const int> bottom) {
  for (std::size_t k = 1; k < top.size(); ++k) {
    if (!quad_ok(top[k - 1], top[k], bottom[k - 1], bottom[k])) return false;
  }
  return true;
}

struct PartialCensus {
  std::vector<long> counts;  // by cmaj'
  long interlaced = 0;
  long candidates = 0;
};

// Cells a_1..a_n, b_0..b_n in row-major order receive a permutation of
// 1..2n+1; this partition fixes the value placed in the first cell.
PartialCensus enumerate_partition(int n, int first) {
  PartialCensus out;
  // maj <= (2n+1)(n+1), so cmaj' <= 3n^2 + 3n + 1.
  out.counts.assign(static_cast<std::size_t>(3 * n * n + 3 * n + 2), 0);
  std::vector<int> rest;
  for (int v = 1; v <= 2 * n + 1; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<int> top(static_cast<std::size_t>(n) + 1);
  std::vector<int> bottom(static_cast<std::size_t>(n) + 1);
  std::vector<int> word(2 * static_cast<std::size_t>(n) + 2);
  top[0] = 0;
  do {
    std::vector<int> cells{first};
    cells.insert(cells.end(), rest.begin(), rest.end());
    for (int i = 1; i <= n; ++i) top[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i <= n; ++i) {
      bottom[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(n + i)];
    }
    ++out.candidates;
    if (!interlaced_arrays(top, bottom)) continue;
    std::copy(top.begin(), top.end(), word.begin());
    std::copy(bottom.rbegin(), bottom.rend(), word.begin() + n + 1);
    const int stat = cmaj_of_word(word, n);
    if (stat < 0) throw VerificationError("interlaced doubloon with negative cmaj'");
    ++out.counts[static_cast<std::size_t>(stat)];
    ++out.interlaced;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

int cmaj_prime(const Doubloon& d) {
  const auto w = d.reading_word();
  return cmaj_of_word(w, d.half_order());
}

bool is_interlaced(const Doubloon& d) { return interlaced_arrays(d.top(), d.bottom()); }

DoubloonCensus interlaced_census(int n, int guard) {
  if (n < 1) throw std::invalid_argument("interlaced_census: n must be >= 1");
  if (n > guard) {
    throw std::invalid_argument("interlaced_census: n=" + std::to_string(n) +
                                " exceeds the enumeration guard " + std::to_string(guard));
  }
  std::vector<std::future<PartialCensus>> parts;
  for (int first = 1; first <= 2 * n + 1; ++first) {
    parts.push_back(std::async(std::launch::async, enumerate_partition, n, first));
  }
  std::vector<long> counts;
  DoubloonCensus census;
  for (auto& f : parts) {
    PartialCensus p = f.get();
    if (counts.size() < p.counts.size()) counts.resize(p.counts.size(), 0);
    for (std::size_t i = 0; i < p.counts.size(); ++i) counts[i] += p.counts[i];
    census.interlaced += p.interlaced;
    census.candidates += p.candidates;
  }
  std::vector<BigInt> coeffs;
  bool seen = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    coeffs.emplace_back(counts[i]);
    if (counts[i] == 0) continue;
    if (!seen) census.min_stat = static_cast<int>(i);
    census.max_stat = static_cast<int>(i);
    seen = true;
  }
  census.gf = QPoly(std::move(coeffs));
  return census;
}

}  // namespace qeuler
