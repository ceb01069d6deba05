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

#include "core/special.hpp"

#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/eulerian.hpp"

namespace qeuler {

namespace {

Rat minus_one_pow(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

QLaurent signed_q_power(long sign_exp, long q_exp) {
  return QLaurent::monomial(sign_exp % 2 == 0 ? 1 : -1, q_exp);
}

QPoly require_poly(const QLaurent& v, const std::string& what) {
  auto p = v.to_poly();
  if (!p) throw VerificationError(what + " has a negative power of q");
  return *p;
}

void require_nonneg(const QPoly& p, const std::string& what) {
  if (!is_nonneg(p)) throw VerificationError(what + " has a negative coefficient");
}

void require_n(int n, int lo, const char* what) {
  if (n < lo) throw std::invalid_argument(std::string(what) + ": n out of range");
}

}  // namespace

QPoly q_tangent(int n) {
  require_n(n, 0, "q_tangent");
  const long nl = n;
  const QLaurent at_t = subst_t_signed_power(carlitz_poly(2 * n + 1), Sign::Minus, -nl);
  const QLaurent value = signed_q_power(nl, nl * (nl - 1) / 2) * at_t;
  const std::string what = "T_" + std::to_string(2 * n + 1);
  QPoly t = require_poly(value, what);
  require_nonneg(t, what);
  return t;
}

QPoly a_star(int n, int k) {
  if (n < 1 || k < 1 || k > (n + 1) / 2) throw std::invalid_argument("a_star: k out of range");
  const auto tri = triangle(Family::GammaA, n);
  const long kl = k;
  const std::string what = "a*_{" + std::to_string(n) + "," + std::to_string(k) + "}";
  QPoly p = require_poly(QLaurent(tri->at(n, k), -kl * (kl - 1) / 2), what);
  require_nonneg(p, what);
  return p;
}

QPoly d_poly(int n) {
  require_n(n, 1, "d_poly");
  QPoly denom(1);
  for (int i = 1; i <= n; ++i) denom *= QPoly(1) + QPoly::monomial(1, static_cast<std::size_t>(i));
  auto d = exact_div(q_tangent(n), denom);
  if (!d) throw VerificationError("T_" + std::to_string(2 * n + 1) + " is not divisible by (-q;q)_n");
  return *d;
}

Rat f_eval(int n, const Rat& q0) {
  require_n(n, 0, "f_eval");
  if (q0.is_zero() || q0 == Rat(1) || q0 == Rat(-1)) {
    throw std::domain_error("f_eval: q0 must avoid 0, 1 and -1");
  }
  Rat sum;
  for (long k = 0; k <= 2L * n + 1; ++k) {
    const Rat den = Rat(1) + q0.pow(k - n);
    if (den.is_zero()) throw std::domain_error("f_eval: pole at q0 = " + q0.str());
    sum += Rat(binomial(2L * n + 1, k)) * minus_one_pow(k) / den;
  }
  return sum;
}

Rat d_closed_form(int n, const Rat& q0) {
  const Rat f = f_eval(n, q0);
  const Rat poch = poch_num(QLaurent(-1), n + 2, 1).evaluate(q0);
  return minus_one_pow(n + 1) * poch / (Rat(1) - q0).pow(2L * n + 1) * f;
}

namespace {

bool admissible_for(const Rat& q0, const std::function<Rat(const Rat&)>& eval) {
  try {
    (void)eval(q0);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace

bool verify_d_identity(int n) {
  const QPoly d = d_poly(n);
  auto rhs = [n](const Rat& q0) { return d_closed_form(n, q0); };
  const auto points = sample_points(static_cast<std::size_t>(d.degree() + 1),
                                    [&](const Rat& q0) { return admissible_for(q0, rhs); });
  for (const auto& q0 : points) {
    if (d.evaluate(q0) != rhs(q0)) return false;
  }
  return true;
}

TQPoly even_quotient(int n) {
  require_n(n, 1, "even_quotient");
  const TQPoly divisor(std::vector<QLaurent>{QLaurent(1), QLaurent::monomial(1, n)});
  auto quot = exact_div(carlitz_poly(2 * n), divisor);
  const std::string what = "A_" + std::to_string(2 * n) + "/(1+tq^" + std::to_string(n) + ")";
  if (!quot) throw VerificationError(what + " is not exact");
  for (const auto& c : quot->terms()) {
    if (c.offset() < 0) throw VerificationError(what + " has a negative power of q");
    if (!is_nonneg(c)) throw VerificationError(what + " has a negative coefficient");
  }
  return *quot;
}

bool b_odd_vanish(int n) {
  require_n(n, 0, "b_odd_vanish");
  return subst_t_signed_power(typeB_poly(2 * n + 1), Sign::Minus, -(2L * n + 1)).is_zero();
}

QPoly b_central(int n) {
  require_n(n, 0, "b_central");
  const long nl = n;
  const QLaurent at_t = subst_t_signed_power(typeB_poly(2 * n), Sign::Minus, -(2 * nl + 1));
  return require_poly(signed_q_power(nl, nl * (2 * nl + 1)) * at_t,
                      "b_central(" + std::to_string(n) + ")");
}

QPoly e_star(int n) {
  require_n(n, 0, "e_star");
  const long nl = n;
  const QLaurent at_t = subst_t_signed_power(typeB_poly(2 * n), Sign::Minus, -(2 * nl + 1));
  return require_poly(signed_q_power(nl, nl * (nl + 1)) * at_t, "E*_" + std::to_string(2 * n));
}

std::vector<BigInt> secant_numbers(int max_n) {
  require_n(max_n, 0, "secant_numbers");
  const IntTriangle b = classical_typeB(2 * max_n);
  std::vector<BigInt> out;
  for (int n = 0; n <= max_n; ++n) {
    BigInt alt = 0;  // B_{2n}(t = -1) at q = 1
    for (int k = 0; k <= 2 * n; ++k) alt += (k % 2 == 0) ? b.at(2 * n, k) : BigInt(-b.at(2 * n, k));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 4, static_cast<unsigned long>(n));
    if (n % 2 == 1) alt = -alt;
    if (!mpz_divisible_p(alt.get_mpz_t(), scale.get_mpz_t())) {
      throw VerificationError("B_" + std::to_string(2 * n) + "(-1) is not divisible by 4^n");
    }
    out.push_back(alt / scale);
  }
  return out;
}

QPoly g_star(int n) {
  require_n(n, 0, "g_star");
  const QLaurent odd_part = poch_num(QLaurent::monomial(-1, 1), n, 2);  // (1+q)(1+q^3)...
  QLaurent denom = odd_part;
  for (int i = 0; i < n; ++i) denom *= QLaurent(QPoly{1, 1});
  const std::string what = "G*_" + std::to_string(2 * n);
  auto g = exact_div(QLaurent(e_star(n)), denom);
  if (!g) throw VerificationError("E*_" + std::to_string(2 * n) + " is not divisible as required");
  QPoly gp = require_poly(*g, what);
  if (gp.at_one() != secant_numbers(n).back()) {
    throw VerificationError(what + "(1) differs from the secant number E_" + std::to_string(2 * n));
  }
  return gp;
}

Rat f_star_eval(int n, const Rat& q0) {
  require_n(n, 0, "f_star_eval");
  if (q0.is_zero() || q0 == Rat(1) || q0 == Rat(-1)) {
    throw std::domain_error("f_star_eval: q0 must avoid 0, 1 and -1");
  }
  Rat sum;
  const Rat mq = -q0;
  for (long k = 0; k <= 2L * n; ++k) {
    const Rat den = Rat(1) + q0.pow(2 * k - 2L * n - 1);
    if (den.is_zero()) throw std::domain_error("f_star_eval: pole at q0 = " + q0.str());
    sum += Rat(binomial(2L * n, k)) * mq.pow(k) / den;
  }
  return sum;
}

Rat g_star_closed_form(int n, const Rat& q0) {
  const Rat f = f_star_eval(n, q0);
  const Rat poch = poch_num(QLaurent::monomial(-1, 1), n + 1, 2).evaluate(q0);
  const long nl = n;
  return minus_one_pow(nl) * q0.pow(-nl - 1) * poch /
         ((Rat(1) + q0).pow(nl) * (Rat(1) - q0).pow(2 * nl)) * f;
}

bool verify_gstar_identity(int n) {
  const QPoly g = g_star(n);
  auto rhs = [n](const Rat& q0) { return g_star_closed_form(n, q0); };
  const auto points = sample_points(static_cast<std::size_t>(g.degree() + 1),
                                    [&](const Rat& q0) { return admissible_for(q0, rhs); });
  for (const auto& q0 : points) {
    if (g.evaluate(q0) != rhs(q0)) return false;
  }
  return true;
}

QLaurent e_q_secant(int n) {
  require_n(n, 0, "e_q_secant");
  const long nl = n;
  const QLaurent at_t = subst_t_signed_power(typeB_poly(2 * n), Sign::Minus, -2 * nl);
  return signed_q_power(nl, nl * nl) * at_t;
}

std::vector<Rat> sample_points(std::size_t count,
                               const std::function<bool(const Rat&)>& admissible) {
  std::vector<Rat> out;
  for (long m = 2; out.size() < count; ++m) {
    for (const Rat& cand : {Rat(m), Rat(BigInt(2 * m + 1), BigInt(m))}) {
      if (out.size() < count && admissible(cand)) out.push_back(cand);
    }
  }
  return out;
}

bool GStarScan::consistent() const {
  for (const auto& r : rows) {
    if (!r.consistent) return false;
  }
  return true;
}

GStarScan conjecture_scan_gstar(int max_n) {
  require_n(max_n, 0, "conjecture_scan_gstar");
  GStarScan scan;
  const auto secants = secant_numbers(max_n);
  for (int n = 0; n <= max_n; ++n) {
    GStarScanRow row;
    row.n = n;
    row.g = g_star(n);
    row.degree = row.g.degree();
    row.palindromic = is_palindromic(row.g);
    row.value_at_one = row.g.at_one();
    row.secant = secants[static_cast<std::size_t>(n)];
    const auto c = row.g.coeffs();
    row.min_coeff = c.empty() ? BigInt(0) : c.front();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < row.min_coeff) row.min_coeff = c[i];
      if (sgn(c[i]) <= 0 && row.consistent) {
        row.consistent = false;
        row.offending_exponent = static_cast<long>(i);
      }
    }
    if (c.empty()) row.consistent = false;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

}  // namespace qeuler
