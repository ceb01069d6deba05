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

#include "core/ring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qeuler {

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(long value) : v_(value) {}

Rat::Rat(const BigInt& value) : v_(value) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational literal");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed rational literal: " + std::string(s));
      }
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rat::str() const { return v_.get_str(10); }

Rat Rat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rat(1) / pow(-e);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(num, den);
}

Rat& Rat::operator+=(const Rat& r) {
  v_ += r.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& r) {
  v_ -= r.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& r) {
  v_ *= r.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& r) {
  if (r.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= r.v_;
  return *this;
}

Rat operator-(const Rat& a) {
  Rat r;
  r.v_ = -a.v_;
  return r;
}

// ---------------------------------------------------------------------------
// QPoly

namespace {
const BigInt kZero{0};
const QLaurent kZeroLaurent{};
}  // namespace

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly QPoly::monomial(const BigInt& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

const BigInt& QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

QPoly QPoly::shifted(std::size_t e) const {
  if (is_zero() || e == 0) return *this;
  std::vector<BigInt> v(e);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  QPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

QPoly QPoly::substitute_power(unsigned step) const {
  if (step == 0) throw std::invalid_argument("substitute_power: step must be positive");
  if (is_zero() || step == 1) return *this;
  std::vector<BigInt> v((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
  QPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

QPoly QPoly::stripped() const {
  const std::size_t v = valuation();
  if (v == 0) return *this;
  QPoly r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(v), coeffs_.end());
  return r;
}

Rat QPoly::evaluate(const Rat& q) const {
  // Horner over the rationals.
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rat(*it);
  return acc;
}

BigInt QPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& r) {
  if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
  if (r.coeffs_.size() > coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& r) { return *this = *this * r; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(v));
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

// ---------------------------------------------------------------------------
// QLaurent

QLaurent::QLaurent(long constant) : base_(constant) {}

QLaurent::QLaurent(QPoly base, long offset) : base_(std::move(base)), offset_(offset) {
  normalize();
}

QLaurent QLaurent::monomial(const BigInt& c, long exponent) {
  return QLaurent(QPoly::monomial(c, 0), exponent);
}

void QLaurent::normalize() {
  if (base_.is_zero()) {
    offset_ = 0;
    return;
  }
  const std::size_t v = base_.valuation();
  if (v != 0) {
    base_ = base_.stripped();
    offset_ += static_cast<long>(v);
  }
}

BigInt QLaurent::coeff(long exponent) const {
  if (exponent < offset_) return 0;
  return base_.coeff(static_cast<std::size_t>(exponent - offset_));
}

std::optional<QPoly> QLaurent::to_poly() const {
  if (is_zero()) return QPoly{};
  if (offset_ < 0) return std::nullopt;
  return base_.shifted(static_cast<std::size_t>(offset_));
}

Rat QLaurent::evaluate(const Rat& q) const {
  if (is_zero()) return Rat{};
  if (q.is_zero() && offset_ < 0) {
    throw std::domain_error("evaluating a negative power of q at q = 0");
  }
  return base_.evaluate(q) * q.pow(offset_);
}

QLaurent& QLaurent::operator+=(const QLaurent& r) {
  if (r.is_zero()) return *this;
  if (is_zero()) return *this = r;
  const long low = std::min(offset_, r.offset_);
  base_ = base_.shifted(static_cast<std::size_t>(offset_ - low)) +
          r.base_.shifted(static_cast<std::size_t>(r.offset_ - low));
  offset_ = low;
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& r) { return *this += -r; }

QLaurent& QLaurent::operator*=(const QLaurent& r) {
  base_ = base_ * r.base_;
  offset_ += r.offset_;
  normalize();
  return *this;
}

// ---------------------------------------------------------------------------
// TQPoly

TQPoly::TQPoly(long constant) {
  if (constant != 0) terms_.emplace_back(constant);
}

TQPoly::TQPoly(const QLaurent& constant) {
  if (!constant.is_zero()) terms_.push_back(constant);
}

TQPoly::TQPoly(const QPoly& constant) : TQPoly(QLaurent(constant)) {}

TQPoly::TQPoly(std::vector<QLaurent> terms) : terms_(std::move(terms)) { normalize(); }

TQPoly TQPoly::monomial(const QLaurent& c, std::size_t tdeg) {
  if (c.is_zero()) return {};
  std::vector<QLaurent> v(tdeg + 1);
  v[tdeg] = c;
  return TQPoly(std::move(v));
}

void TQPoly::normalize() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

const QLaurent& TQPoly::coeff(std::size_t tdeg) const {
  return tdeg < terms_.size() ? terms_[tdeg] : kZeroLaurent;
}

TQPoly TQPoly::truncated(std::size_t max_tdeg) const {
  if (terms_.size() <= max_tdeg + 1) return *this;
  return TQPoly(std::vector<QLaurent>(terms_.begin(),
                                      terms_.begin() + static_cast<std::ptrdiff_t>(max_tdeg + 1)));
}

Rat TQPoly::evaluate(const Rat& q, const Rat& t) const {
  Rat acc;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * t + it->evaluate(q);
  return acc;
}

TQPoly& TQPoly::operator+=(const TQPoly& r) {
  if (r.terms_.size() > terms_.size()) terms_.resize(r.terms_.size());
  for (std::size_t i = 0; i < r.terms_.size(); ++i) terms_[i] += r.terms_[i];
  normalize();
  return *this;
}

TQPoly& TQPoly::operator-=(const TQPoly& r) { return *this += -r; }

TQPoly& TQPoly::operator*=(const TQPoly& r) { return *this = *this * r; }

TQPoly operator*(const TQPoly& a, const TQPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QLaurent> v(a.terms_.size() + b.terms_.size() - 1);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      if (b.terms_[j].is_zero()) continue;
      v[i + j] += a.terms_[i] * b.terms_[j];
    }
  }
  return TQPoly(std::move(v));
}

TQPoly operator-(TQPoly a) {
  for (auto& c : a.terms_) c = -c;
  return a;
}

// ---------------------------------------------------------------------------
// q-combinatorial primitives

QPoly q_int(long n, unsigned step) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  if (step == 0) throw std::invalid_argument("q_int: step must be positive");
  if (n == 0) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(n - 1) * step + 1);
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * step] = 1;
  return QPoly(std::move(v));
}

QLaurent q_int_signed(long m, unsigned step) {
  if (m >= 0) return QLaurent(q_int(m, step));
  return -QLaurent(q_int(-m, step), m * static_cast<long>(step));
}

namespace {

// Rows of Gaussian binomials, grown on demand. Guarded because the
// memo is shared by every caller in the process.
struct QBinomTable {
  std::mutex mu;
  std::vector<std::vector<QPoly>> rows{{QPoly(1)}};
};

QBinomTable& qbinom_table() {
  static QBinomTable table;
  return table;
}

}  // namespace

QPoly q_binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  auto& table = qbinom_table();
  std::lock_guard lock(table.mu);
  auto& rows = table.rows;
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const std::size_t m = prev.size();  // previous row index is m - 1
    std::vector<QPoly> row(m + 1);
    row[0] = QPoly(1);
    row[m] = QPoly(1);
    // [m, j] = [m-1, j-1] + q^j [m-1, j]
    for (std::size_t j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j].shifted(j);
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

TQPoly poch_t(long k_exp, long m, Sign sign, unsigned step) {
  if (m < 0) throw std::invalid_argument("poch_t: negative length");
  if (step == 0) throw std::invalid_argument("poch_t: step must be positive");
  const long s = static_cast<long>(sign);
  TQPoly acc(1);
  for (long j = 0; j < m; ++j) {
    const QLaurent lin = QLaurent::monomial(BigInt(-s), k_exp + static_cast<long>(step) * j);
    acc *= TQPoly(std::vector<QLaurent>{QLaurent(1), lin});
  }
  return acc;
}

QLaurent poch_num(const QLaurent& a, long m, unsigned step) {
  if (m < 0) throw std::invalid_argument("poch_num: negative length");
  if (step == 0) throw std::invalid_argument("poch_num: step must be positive");
  QLaurent acc(1);
  for (long j = 0; j < m; ++j) acc *= QLaurent(1) - a.times_q_power(static_cast<long>(step) * j);
  return acc;
}

QLaurent subst_q_recip(const QPoly& p) {
  if (p.is_zero()) return {};
  auto c = p.coeffs();
  std::vector<BigInt> rev(c.rbegin(), c.rend());
  return QLaurent(QPoly(std::move(rev)), -p.degree());
}

QLaurent subst_t_signed_power(const TQPoly& p, Sign sign, long e) {
  QLaurent acc;
  const auto terms = p.terms();
  for (std::size_t d = 0; d < terms.size(); ++d) {
    if (terms[d].is_zero()) continue;
    const long dl = static_cast<long>(d);
    QLaurent term = terms[d].times_q_power(e * dl);
    if (sign == Sign::Minus && (d % 2 == 1)) term = -term;
    acc += term;
  }
  return acc;
}

std::optional<QPoly> exact_div(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (p.is_zero()) return QPoly{};
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  const auto dc = d.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  const BigInt& lead = dc[dd];
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= c * dc[j];
    quot[i] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return QPoly(std::move(quot));
}

std::optional<QLaurent> exact_div(const QLaurent& p, const QLaurent& d) {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero Laurent polynomial");
  if (p.is_zero()) return QLaurent{};
  // q is a unit, so only the q-free parts need to divide.
  auto quot = exact_div(p.base(), d.base());
  if (!quot) return std::nullopt;
  return QLaurent(std::move(*quot), p.offset() - d.offset());
}

std::optional<TQPoly> exact_div(const TQPoly& p, const TQPoly& d) {
  if (d.is_zero()) throw std::domain_error("exact_div: division by zero bivariate polynomial");
  if (p.is_zero()) return TQPoly{};
  const auto dt = d.terms();
  std::size_t low = 0;
  while (dt[low].is_zero()) ++low;
  const std::size_t dtop = static_cast<std::size_t>(d.degree());
  if (p.degree() < d.degree()) return std::nullopt;

  // Eliminate from the lowest t-degree upward.
  std::vector<QLaurent> rem(p.terms().begin(), p.terms().end());
  const std::size_t qlen = rem.size() - dtop;
  std::vector<QLaurent> quot(qlen);
  for (std::size_t i = 0; i < low && i < rem.size(); ++i) {
    if (!rem[i].is_zero()) return std::nullopt;
  }
  for (std::size_t i = 0; i < qlen; ++i) {
    const QLaurent& target = rem[i + low];
    if (target.is_zero()) continue;
    auto c = exact_div(target, dt[low]);
    if (!c) return std::nullopt;
    for (std::size_t j = low; j <= dtop; ++j) {
      if (!dt[j].is_zero()) rem[i + j] -= *c * dt[j];
    }
    quot[i] = std::move(*c);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return TQPoly(std::move(quot));
}

std::vector<BigInt> spec_q1_t(const TQPoly& p) {
  std::vector<BigInt> out;
  out.reserve(p.terms().size());
  for (const auto& c : p.terms()) out.push_back(c.at_one());
  return out;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_nonneg(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigInt& c) { return sgn(c) >= 0; });
}

bool is_nonneg(const QLaurent& p) { return is_nonneg(p.base()); }

bool is_nonneg(const TQPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const QLaurent& c) { return is_nonneg(c); });
}

bool is_palindromic(std::span<const BigInt> seq) {
  return std::equal(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(seq.size() / 2),
                    seq.rbegin());
}

bool is_palindromic(const QPoly& p) {
  if (p.is_zero()) return true;
  return is_palindromic(p.stripped().coeffs());
}

bool is_palindromic(const QPoly& p, long twice_center) {
  if (p.is_zero()) return true;
  for (long i = 0; i <= p.degree(); ++i) {
    const long mirror = twice_center - i;
    const BigInt& other = (mirror < 0) ? kZero : p.coeff(static_cast<std::size_t>(mirror));
    if (p.coeff(static_cast<std::size_t>(i)) != other) return false;
  }
  return true;
}

bool is_unimodal_ints(std::span<const BigInt> seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qeuler
