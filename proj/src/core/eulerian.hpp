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

// Carlitz q-Eulerian polynomials, their type-B analogue, and the two
// gamma-coefficient triangles that expand them in the q-deformed basis.
//
// Conventions:
//   A_n(t,q) = sum_{k=1}^{n} A_{n,k}(q) t^{k-1}
//   B_n(t,q) = sum_{k=0}^{n} B_{n,k}(q) t^k
//   A_n(t,q) = sum_k a_{n,k}(q) t^{k-1} (-t q^k; q)_{n+1-2k}
//   B_n(t,q) = sum_k b_{n,k}(q) t^k (-t q^{2k+1}; q^2)_{n-2k}

#include <memory>
#include <span>
#include <vector>

#include "core/ring.hpp"

namespace qeuler {

enum class Family {
  CarlitzA,  // A_{n,k}(q), k = 1..n
  TypeB,     // B_{n,k}(q), k = 0..n
  GammaA,    // a_{n,k}(q), k = 1..floor((n+1)/2)
  GammaB,    // b_{n,k}(q), k = 0..floor(n/2)
};

/// 'A', 'B', 'a', 'b'.
char family_char(Family f);
/// Inverse of family_char; throws std::invalid_argument.
Family family_from_char(char c);

int family_min_n(Family f);
int family_kmin(Family f, int n);
int family_kmax(Family f, int n);

/// Rows min_n()..max_n() of one family. Entries outside a row's range read
/// as zero.
class Triangle {
 public:
  Triangle(Family family, int max_n);

  Family family() const { return family_; }
  int min_n() const { return family_min_n(family_); }
  int max_n() const { return max_n_; }
  int kmin(int n) const { return family_kmin(family_, n); }
  int kmax(int n) const { return family_kmax(family_, n); }

  const QPoly& at(int n, int k) const;
  /// Entries kmin(n)..kmax(n).
  std::span<const QPoly> row(int n) const;

  /// Appends rows up to max_n using the family's recurrence.
  void grow_to(int max_n);

 private:
  QPoly next_entry(int n, int k) const;

  Family family_;
  int max_n_ = 0;
  std::vector<std::vector<QPoly>> rows_;  // rows_[n - min_n()]
};

/// Shared, lazily grown triangle; thread-safe. The returned triangle holds
/// at least rows up to max_n and is never mutated afterwards.
std::shared_ptr<const Triangle> triangle(Family family, int max_n);

Triangle carlitz_triangle(int max_n);
Triangle typeB_triangle(int max_n);
Triangle gamma_a_triangle(int max_n);
Triangle gamma_b_triangle(int max_n);

TQPoly carlitz_poly(int n);
TQPoly typeB_poly(int n);

/// Truncates (t;q)_{n+1} * sum_{k<=window} [k+1]_q^n t^k and checks that
/// t-degrees n..window vanish. Throws VerificationError otherwise.
TQPoly carlitz_series_oracle(int n, int window);
/// Same for (t;q^2)_{n+1} * sum_k [2k+1]_q^n t^k; t-degrees n+1..window vanish.
TQPoly typeB_series_oracle(int n, int window);

TQPoly gamma_expand_A(int n);
TQPoly gamma_expand_B(int n);

/// A_{n,k}(q) reassembled from row n of the a-triangle.
QPoly basis_change_A(int n, int k);
/// B_{n,k}(q) reassembled from row n of the b-triangle.
QPoly basis_change_B(int n, int k);

/// Coefficient identity behind the a-recurrence, with [m]_q extended to
/// negative m:
///   [n+1-2s][s] + [n-k-s+1](1+q^s)[k-s] = [k][n-k-s+1] + [n+1-k][k-s]
bool bracket_identity_A(int n, int k, int s);
/// Its type-B counterpart (brackets with subscript q^2 written [.]_2):
///   [n-2s]_2 [2s+1] + [n-k-s]_2 (1+q)(1+q^{2s+1}) [k-s]_2
///     = [2k+1][n-k-s]_2 + [2n+1-2k][k-s]_2
bool bracket_identity_B(int n, int k, int s);

/// Integer triangle evaluated by the q = 1 recurrences.
struct IntTriangle {
  Family family;
  int max_n = 0;
  std::vector<std::vector<BigInt>> rows;  // rows[n - min_n], entries kmin..kmax

  BigInt at(int n, int k) const;
};

IntTriangle classical_gamma_a(int max_n);
IntTriangle classical_gamma_b(int max_n);
/// B_{n,k}(1): (2k+1) B_{n-1,k} + (2n-2k+1) B_{n-1,k-1}.
IntTriangle classical_typeB(int max_n);

}  // namespace qeuler
