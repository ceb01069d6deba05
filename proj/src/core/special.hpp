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

// Families derived from the q-Eulerian polynomials by special values of t:
// q-tangent numbers, the rescaled central gamma coefficients, d_n(q), the
// quotient A_{2n}(t,q)/(1+tq^n), the type-B central values and the three
// q-secant families, together with the rational functions f_n, f*_n used to
// cross-check d_n and G*_{2n} by exact evaluation.
//
// Functions that compute an object whose existence is a theorem (a quotient
// that must be exact, a polynomial that must have nonnegative coefficients)
// throw VerificationError when the property fails.

#include <functional>
#include <vector>

#include "core/ring.hpp"

namespace qeuler {

/// T_{2n+1}(q) = (-1)^n q^{C(n,2)} A_{2n+1}(-q^{-n}, q).
QPoly q_tangent(int n);

/// q^{-k(k-1)/2} a_{n,k}(q), for 1 <= k <= floor((n+1)/2).
QPoly a_star(int n, int k);

/// T_{2n+1}(q) / ((1+q)(1+q^2)...(1+q^n)).
QPoly d_poly(int n);

/// f_n(q0) = sum_{k=0}^{2n+1} C(2n+1,k) (-1)^k / (1 + q0^{k-n}).
/// Throws std::domain_error at q0 in {0, 1, -1} or any other pole.
Rat f_eval(int n, const Rat& q0);
/// (-1)^{n+1} (-1;q)_{n+2} / (1-q)^{2n+1} * f_n(q), evaluated at q0.
Rat d_closed_form(int n, const Rat& q0);
/// Compares d_poly(n) with d_closed_form at deg(d_n) + 1 admissible points.
bool verify_d_identity(int n);

/// A_{2n}(t,q) / (1 + t q^n).
TQPoly even_quotient(int n);

/// B_{2n+1}(-q^{-2n-1}, q) == 0.
bool b_odd_vanish(int n);
/// (-1)^n q^{n(2n+1)} B_{2n}(-q^{-2n-1}, q); equals b_{2n,n}(q).
QPoly b_central(int n);

/// E*_{2n}(q) = (-1)^n q^{n(n+1)} B_{2n}(-q^{-2n-1}, q).
QPoly e_star(int n);
/// E*_{2n}(q) / ((1+q)(1+q^3)...(1+q^{2n-1}) (1+q)^n); checked against E_{2n} at q = 1.
QPoly g_star(int n);

/// f*_n(q0) = sum_{k=0}^{2n} C(2n,k) (-q0)^k / (1 + q0^{2k-2n-1}).
Rat f_star_eval(int n, const Rat& q0);
/// (-1)^n q^{-n-1} (-q;q^2)_{n+1} / ((1+q)^n (1-q)^{2n}) * f*_n(q), at q0.
Rat g_star_closed_form(int n, const Rat& q0);
bool verify_gstar_identity(int n);

/// E_{2n}(q) = (-1)^n q^{n^2} B_{2n}(-q^{-2n}, q).
QLaurent e_q_secant(int n);

/// Secant numbers E_0, E_2, ..., E_{2 max_n} from the q = 1 type-B triangle,
/// via B_{2n}(-1) = (-1)^n 4^n E_{2n}.
std::vector<BigInt> secant_numbers(int max_n);

/// Deterministic sample points 2, 5/2, 3, 7/3, 4, 9/4, ... keeping only those
/// accepted by `admissible`.
std::vector<Rat> sample_points(std::size_t count, const std::function<bool(const Rat&)>& admissible);

struct GStarScanRow {
  int n = 0;
  QPoly g;
  BigInt min_coeff;
  long degree = 0;
  bool palindromic = false;
  BigInt value_at_one;
  BigInt secant;                 // E_{2n}
  bool consistent = true;        // every coefficient of q^0..q^deg is positive
  long offending_exponent = -1;  // first nonpositive coefficient, if any
};

struct GStarScan {
  std::vector<GStarScanRow> rows;
  bool consistent() const;
};

/// Positivity scan of G*_{2n}(q) for n = 0..max_n. Counterexamples are
/// reported in the rows, never thrown.
GStarScan conjecture_scan_gstar(int max_n);

}  // namespace qeuler
