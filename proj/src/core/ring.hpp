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

// Exact arithmetic kernel: rationals, dense polynomials in q, Laurent
// polynomials in q and polynomials in t over Laurent coefficients.
//
// All values are canonicalized after every operation, so structural
// equality is mathematical equality.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

using BigInt = mpz_class;

/// Reduced fraction with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value);  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& value);
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "a", "-a" or "a/b"; throws std::invalid_argument on bad input.
  static Rat parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const;

  /// Integer power; negative exponents invert (zero base rejected).
  Rat pow(long e) const;

  Rat& operator+=(const Rat& r);
  Rat& operator-=(const Rat& r);
  Rat& operator*=(const Rat& r);
  Rat& operator/=(const Rat& r);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

/// Dense polynomial in q with integer coefficients; coeffs()[i] is the
/// coefficient of q^i. The zero polynomial has no stored coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly monomial(const BigInt& c, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const;
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& coeff(std::size_t i) const;

  /// p * q^e.
  QPoly shifted(std::size_t e) const;
  /// p(q^step).
  QPoly substitute_power(unsigned step) const;
  /// Drops the factor q^valuation().
  QPoly stripped() const;

  Rat evaluate(const Rat& q) const;
  BigInt at_one() const;

  QPoly& operator+=(const QPoly& r);
  QPoly& operator-=(const QPoly& r);
  QPoly& operator*=(const QPoly& r);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// q^offset * base, with base(0) != 0 unless the value is zero.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long constant);         // NOLINT(google-explicit-constructor)
  QLaurent(QPoly base, long offset = 0);  // NOLINT(google-explicit-constructor)

  static QLaurent monomial(const BigInt& c, long exponent);

  bool is_zero() const { return base_.is_zero(); }
  const QPoly& base() const { return base_; }
  long offset() const { return offset_; }
  /// Highest exponent present; meaningless for zero.
  long top_exponent() const { return offset_ + base_.degree(); }
  BigInt coeff(long exponent) const;

  /// Lossless conversion when no negative exponent is present.
  std::optional<QPoly> to_poly() const;

  QLaurent times_q_power(long e) const { return QLaurent(base_, offset_ + e); }
  Rat evaluate(const Rat& q) const;
  BigInt at_one() const { return base_.at_one(); }

  QLaurent& operator+=(const QLaurent& r);
  QLaurent& operator-=(const QLaurent& r);
  QLaurent& operator*=(const QLaurent& r);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  friend QLaurent operator-(const QLaurent& a) { return QLaurent(-a.base_, a.offset_); }
  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.offset_ == b.offset_ && a.base_ == b.base_;
  }

 private:
  void normalize();
  QPoly base_;
  long offset_ = 0;
};

/// Polynomial in t whose coefficients are Laurent polynomials in q.
class TQPoly {
 public:
  TQPoly() = default;
  TQPoly(long constant);             // NOLINT(google-explicit-constructor)
  TQPoly(const QLaurent& constant);  // NOLINT(google-explicit-constructor)
  TQPoly(const QPoly& constant);     // NOLINT(google-explicit-constructor)
  explicit TQPoly(std::vector<QLaurent> terms);

  static TQPoly monomial(const QLaurent& c, std::size_t tdeg);

  bool is_zero() const { return terms_.empty(); }
  long degree() const { return static_cast<long>(terms_.size()) - 1; }
  std::span<const QLaurent> terms() const { return terms_; }
  const QLaurent& coeff(std::size_t tdeg) const;

  /// Keeps t-degrees 0..max_tdeg.
  TQPoly truncated(std::size_t max_tdeg) const;
  Rat evaluate(const Rat& q, const Rat& t) const;

  TQPoly& operator+=(const TQPoly& r);
  TQPoly& operator-=(const TQPoly& r);
  TQPoly& operator*=(const TQPoly& r);

  friend TQPoly operator+(TQPoly a, const TQPoly& b) { return a += b; }
  friend TQPoly operator-(TQPoly a, const TQPoly& b) { return a -= b; }
  friend TQPoly operator*(const TQPoly& a, const TQPoly& b);
  friend TQPoly operator-(TQPoly a);
  friend bool operator==(const TQPoly& a, const TQPoly& b) { return a.terms_ == b.terms_; }

 private:
  void normalize();
  std::vector<QLaurent> terms_;
};

enum class Sign : int { Minus = -1, Plus = 1 };

// ---------------------------------------------------------------------------
// q-combinatorial primitives

/// [n]_q = 1 + q + ... + q^{n-1}; with step s this is [n]_{q^s}.
QPoly q_int(long n, unsigned step = 1);

/// (1 - q^{step*m}) / (1 - q^step) for any integer m; for m < 0 this is
/// -q^{step*m} [-m]_{q^step}.
QLaurent q_int_signed(long m, unsigned step = 1);

/// Gaussian binomial; zero when k < 0 or k > n. Memoized Pascal recurrence.
QPoly q_binom(long n, long k);

/// (sign * t * q^k_exp ; q^step)_m = prod_{j<m} (1 - sign * t * q^{k_exp + step*j}).
TQPoly poch_t(long k_exp, long m, Sign sign, unsigned step = 1);

/// (a ; q^step)_m = prod_{j<m} (1 - a * q^{step*j}).
QLaurent poch_num(const QLaurent& a, long m, unsigned step = 1);

/// p(1/q).
QLaurent subst_q_recip(const QPoly& p);

/// p(t := sign * q^e, q).
QLaurent subst_t_signed_power(const TQPoly& p, Sign sign, long e);

// Exact division. std::nullopt means "not divisible in this ring"; a zero
// divisor throws std::domain_error.
std::optional<QPoly> exact_div(const QPoly& p, const QPoly& d);
std::optional<QLaurent> exact_div(const QLaurent& p, const QLaurent& d);
std::optional<TQPoly> exact_div(const TQPoly& p, const TQPoly& d);

inline BigInt spec_q1(const QPoly& p) { return p.at_one(); }
inline BigInt spec_q1(const QLaurent& p) { return p.at_one(); }
std::vector<BigInt> spec_q1_t(const TQPoly& p);

// ---------------------------------------------------------------------------
// Structural predicates

bool is_nonneg(const QPoly& p);
bool is_nonneg(const QLaurent& p);
bool is_nonneg(const TQPoly& p);

/// Symmetric about the midpoint of its lowest and highest exponents.
bool is_palindromic(const QPoly& p);
/// Coefficient of q^i equals that of q^{twice_center - i} for all i.
bool is_palindromic(const QPoly& p, long twice_center);
bool is_palindromic(std::span<const BigInt> seq);

/// Weakly rises, then weakly falls.
bool is_unimodal_ints(std::span<const BigInt> seq);

/// Binomial coefficient as a big integer (0 outside 0 <= k <= n).
BigInt binomial(long n, long k);

}  // namespace qeuler
