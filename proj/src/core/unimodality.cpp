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

#include "core/unimodality.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qeuler {

bool reciprocity_A(int n) {
  if (n < 1) throw std::invalid_argument("reciprocity_A: n must be >= 1");
  const auto tri = triangle(Family::CarlitzA, n);
  const long shift = static_cast<long>(n) * (n - 1) / 2;
  for (int k = 1; k <= n; ++k) {
    if (QLaurent(tri->at(n, n - k + 1)) != subst_q_recip(tri->at(n, k)).times_q_power(shift)) {
      return false;
    }
  }
  return true;
}

bool reciprocity_B(int n) {
  if (n < 0) throw std::invalid_argument("reciprocity_B: n must be >= 0");
  const auto tri = triangle(Family::TypeB, n);
  const long shift = static_cast<long>(n) * n;
  for (int k = 0; k <= n; ++k) {
    if (QLaurent(tri->at(n, n - k)) != subst_q_recip(tri->at(n, k)).times_q_power(shift)) {
      return false;
    }
  }
  return true;
}

namespace {

void check_args(int n, const Rat& q0, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": n must be >= 2");
  if (q0.sign() <= 0 || q0 == Rat(1)) {
    throw std::invalid_argument(std::string(what) + ": q0 must be positive and != 1");
  }
}

}  // namespace

bool monotone_check_A(int n, const Rat& q0) {
  check_args(n, q0, "monotone_check_A");
  const auto tri = triangle(Family::CarlitzA, n);
  const int j = (n + 1) / 2;
  auto at = [&](int k) { return tri->at(n, k).evaluate(q0); };
  for (int k = 1; k <= j - 1; ++k) {
    const bool ok = q0 > Rat(1) ? at(k + 1) > at(k) : at(n - k + 1) < at(n - k);
    if (!ok) return false;
  }
  return true;
}

bool monotone_check_B(int n, const Rat& q0) {
  check_args(n, q0, "monotone_check_B");
  const auto tri = triangle(Family::TypeB, n);
  const int j = n / 2;
  auto at = [&](int k) { return tri->at(n, k).evaluate(q0); };
  for (int k = 1; k <= j - 1; ++k) {
    const bool ok = q0 > Rat(1) ? at(k + 1) > at(k) : at(n - k) < at(n - k - 1);
    if (!ok) return false;
  }
  return true;
}

bool q1_unimodality(Family family, int max_n) {
  if (family != Family::CarlitzA && family != Family::TypeB) {
    throw std::invalid_argument("q1_unimodality: family must be A or B");
  }
  if (max_n < 1) throw std::invalid_argument("q1_unimodality: max_n must be >= 1");
  const auto tri = triangle(family, max_n);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    for (const auto& p : tri->row(n)) row.push_back(p.at_one());
    if (!is_unimodal_ints(row) || !is_palindromic(std::span<const BigInt>(row))) return false;
  }
  return true;
}

}  // namespace qeuler
