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

// Row-reversal reciprocity, pointwise monotonicity of q-Eulerian rows at
// rational q != 1, and q = 1 symmetry/unimodality of integer rows.
// Real-q statements are only ever checked at the sample points passed in.

#include "core/eulerian.hpp"
#include "core/ring.hpp"

namespace qeuler {

/// A_{n,n-k+1}(q) == q^{n(n-1)/2} A_{n,k}(1/q) for k = 1..n.
bool reciprocity_A(int n);
/// B_{n,n-k}(q) == q^{n^2} B_{n,k}(1/q) for k = 0..n.
bool reciprocity_B(int n);

/// With j = floor((n+1)/2) and k = 1..j-1:
///   q0 > 1:     A_{n,k+1}(q0) > A_{n,k}(q0)
///   0 < q0 < 1: A_{n,n-k+1}(q0) < A_{n,n-k}(q0)
/// Throws std::invalid_argument for n < 2, q0 <= 0 or q0 == 1.
bool monotone_check_A(int n, const Rat& q0);
/// Same with j = floor(n/2):
///   q0 > 1:     B_{n,k+1}(q0) > B_{n,k}(q0)
///   0 < q0 < 1: B_{n,n-k}(q0) < B_{n,n-k-1}(q0)
bool monotone_check_B(int n, const Rat& q0);

/// Every q = 1 row n <= max_n of family A or B is unimodal and palindromic.
bool q1_unimodality(Family family, int max_n);

}  // namespace qeuler
