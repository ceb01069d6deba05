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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

namespace qeuler {
namespace {

QPoly one_minus_q_power(long i) { return QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(i)); }

QPoly q_factorial_poch(long n) {
  QPoly p(1);
  for (long i = 1; i <= n; ++i) p *= one_minus_q_power(i);
  return p;
}

// Gaussian binomial by exact division of q-factorials.
QPoly q_binom_by_division(long n, long k) {
  if (k < 0 || k > n) return QPoly();
  auto r = exact_div(q_factorial_poch(n), q_factorial_poch(k) * q_factorial_poch(n - k));
  EXPECT_TRUE(r.has_value());
  return r.value_or(QPoly());
}

class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : gen_(seed) {}

  BigInt coeff() {
    std::uniform_int_distribution<long> small(-1000000, 1000000);
    std::uniform_int_distribution<int> pick(0, 9);
    BigInt c = small(gen_);
    if (pick(gen_) == 0) c *= BigInt("123456789012345678901234567890");
    return c;
  }

  QPoly poly() {
    std::uniform_int_distribution<int> deg(-1, 30);
    std::vector<BigInt> cs(static_cast<std::size_t>(deg(gen_) + 1));
    for (auto& c : cs) c = coeff();
    return QPoly(cs);
  }

  QLaurent laurent() {
    std::uniform_int_distribution<long> off(-15, 15);
    return QLaurent(poly(), off(gen_));
  }

  TQPoly bivar() {
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<QLaurent> ts(static_cast<std::size_t>(deg(gen_) + 1));
    for (auto& t : ts) t = laurent();
    return TQPoly(ts);
  }

 private:
  std::mt19937 gen_;
};

TEST(Rat, ParseAndArithmetic) {
  EXPECT_EQ(Rat::parse("3/2") + Rat::parse("1/2"), Rat(2));
  EXPECT_EQ(Rat::parse("-4/6"), Rat(BigInt(-2), BigInt(3)));
  EXPECT_EQ(Rat::parse("7"), Rat(7));
  EXPECT_EQ(Rat(2).pow(-3), Rat(BigInt(1), BigInt(8)));
  EXPECT_EQ(Rat::parse("2/3").str(), "2/3");
  EXPECT_LT(Rat::parse("1/2"), Rat::parse("2/3"));
  EXPECT_THROW(Rat::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rat::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rat::parse(""), std::invalid_argument);
}

TEST(QPoly, Examples) {
  EXPECT_EQ(QPoly({1, 1}) + QPoly({1, -1}), QPoly(2));
  EXPECT_EQ(QPoly({1, 1}) * QPoly({1, 1}), QPoly({1, 2, 1}));
  EXPECT_TRUE((QPoly({1, 1}) - QPoly({1, 1})).is_zero());
  EXPECT_EQ(QPoly({1, 1}).evaluate(2), Rat(3));
  EXPECT_EQ(QPoly({0, 1, 1}).at_one(), 2);
  EXPECT_EQ(QPoly({0, 0, 2, 4, 2}).at_one(), 8);
  EXPECT_EQ(QPoly().at_one(), 0);
  EXPECT_EQ(QPoly({0, 0, 3}).valuation(), 2u);
  EXPECT_EQ(QPoly({1, 2}).substitute_power(2), QPoly({1, 0, 2}));
}

TEST(QLaurent, Examples) {
  const QLaurent shifted = QLaurent::monomial(1, -1) * QLaurent(QPoly({0, 1, 1}));
  EXPECT_EQ(shifted, QLaurent(QPoly({1, 1})));
  EXPECT_EQ(shifted.offset(), 0);
  EXPECT_EQ((QLaurent(QPoly({1, 1}), -1)).evaluate(Rat::parse("1/2")), Rat(3));
  EXPECT_EQ(QLaurent(QPoly({1, 2}), -3).coeff(-2), 2);
  EXPECT_FALSE(QLaurent(QPoly({1}), -1).to_poly().has_value());
  EXPECT_EQ(QLaurent(QPoly({0, 0, 5})).offset(), 2);
}

TEST(QInt, Examples) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), QPoly(1));
  EXPECT_EQ(q_int(3), QPoly({1, 1, 1}));
  EXPECT_THROW(q_int(-1), std::invalid_argument);
  for (long m = 0; m <= 9; ++m) EXPECT_EQ(q_int(m, 2), q_int(m).substitute_power(2));
}

TEST(QInt, SignedExtension) {
  // [-m]_q = -q^{-m}[m]_q
  for (long m = 1; m <= 8; ++m) {
    EXPECT_EQ(q_int_signed(-m), -(QLaurent(q_int(m), -m)));
    EXPECT_EQ(q_int_signed(m), QLaurent(q_int(m)));
  }
  EXPECT_TRUE(q_int_signed(0).is_zero());
}

TEST(QBinom, Examples) {
  EXPECT_EQ(q_binom(4, 2), QPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binom(5, 0), QPoly(1));
  EXPECT_TRUE(q_binom(3, 5).is_zero());
  EXPECT_TRUE(q_binom(3, -1).is_zero());
}

TEST(QBinom, MatchesDivisionOracle) {
  for (long n = 0; n <= 14; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(q_binom(n, k), q_binom_by_division(n, k)) << n << "," << k;
  }
}

TEST(QBinom, SymmetryAndClassicalValue) {
  for (long n = 0; n <= 20; ++n) {
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(q_binom(n, k), q_binom(n, n - k));
      EXPECT_EQ(q_binom(n, k).at_one(), binomial(n, k));
      EXPECT_TRUE(is_palindromic(q_binom(n, k)));
    }
  }
}

// prod_{i<N} (1 + t q^i) = sum_k q^{k(k-1)/2} [N choose k]_q t^k
TEST(QBinom, BinomialTheorem) {
  for (long N = 0; N <= 12; ++N) {
    TQPoly lhs(1);
    for (long i = 0; i < N; ++i) {
      lhs *= TQPoly(std::vector<QLaurent>{QLaurent(1), QLaurent::monomial(1, i)});
    }
    TQPoly rhs;
    for (long k = 0; k <= N; ++k) {
      rhs += TQPoly::monomial(QLaurent(q_binom(N, k), k * (k - 1) / 2), static_cast<std::size_t>(k));
    }
    EXPECT_EQ(lhs, rhs) << "N=" << N;
    EXPECT_EQ(poch_t(0, N, Sign::Minus), lhs) << "N=" << N;
  }
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(poch_t(1, 2, Sign::Minus),
            TQPoly(std::vector<QLaurent>{1, QLaurent(QPoly({0, 1, 1})), QLaurent::monomial(1, 3)}));
  EXPECT_EQ(poch_t(1, 0, Sign::Minus), TQPoly(1));
  EXPECT_EQ(poch_t(1, 2, Sign::Minus, 2),
            TQPoly(std::vector<QLaurent>{1, QLaurent(QPoly({0, 1, 0, 1})), QLaurent::monomial(1, 4)}));
  EXPECT_EQ(poch_t(0, 1, Sign::Plus), TQPoly(std::vector<QLaurent>{1, -1}));

  EXPECT_EQ(poch_num(QLaurent(-1), 3), QLaurent(QPoly({2, 2, 2, 2})));
  EXPECT_EQ(poch_num(QLaurent(-1), 0), QLaurent(1));
  EXPECT_EQ(poch_num(QLaurent(QPoly({0, -1})), 2, 2), QLaurent(QPoly({1, 1, 0, 1, 1})));
}

TEST(Evaluate, Bivariate) {
  const TQPoly p(std::vector<QLaurent>{1, QLaurent(QPoly({0, 1, 1})), QLaurent::monomial(1, 3)});
  EXPECT_EQ(p.evaluate(2, 1), Rat(15));
}

TEST(Substitution, Reciprocal) {
  EXPECT_EQ(subst_q_recip(QPoly({1, 2, 0, 1})), QLaurent(QPoly({1, 0, 2, 1}), -3));
  EXPECT_EQ(subst_q_recip(QPoly(5)), QLaurent(5));
  EXPECT_EQ(subst_q_recip(QPoly({0, 1, 1})), QLaurent(QPoly({1, 1}), -2));
}

TEST(Substitution, SignedTPower) {
  const TQPoly b2(std::vector<QLaurent>{1, QLaurent(QPoly({0, 1, 0, 1})), QLaurent::monomial(1, 4)});
  EXPECT_EQ(subst_t_signed_power(b2, Sign::Minus, -2), QLaurent(QPoly({-1, 2, -1}), -1));
  EXPECT_EQ(subst_t_signed_power(TQPoly::monomial(1, 1), Sign::Plus, 0), QLaurent(1));
  EXPECT_TRUE(subst_t_signed_power(TQPoly(std::vector<QLaurent>{1, QLaurent::monomial(1, 1)}),
                                   Sign::Minus, -1)
                  .is_zero());
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(QPoly({1, 2, 1}), QPoly({1, 1})), QPoly({1, 1}));
  EXPECT_FALSE(exact_div(QPoly({1, 0, 1}), QPoly({1, 1})).has_value());
  EXPECT_EQ(exact_div(QLaurent(QPoly({0, 1, 1})), QLaurent::monomial(1, 1)), QLaurent(QPoly({1, 1})));
  EXPECT_THROW((void)exact_div(QPoly(1), QPoly()), std::domain_error);
}

TEST(Predicates, Examples) {
  const QPoly c({0, 2, 5, 6, 5, 2});
  EXPECT_TRUE(is_palindromic(c));
  EXPECT_TRUE(is_nonneg(c));
  EXPECT_FALSE(is_nonneg(QPoly({1, -1})));
  const std::vector<BigInt> seq{1, 4, 1};
  EXPECT_TRUE(is_unimodal_ints(seq));
  const std::vector<BigInt> valley{2, 1, 2};
  EXPECT_FALSE(is_unimodal_ints(valley));
  EXPECT_FALSE(is_palindromic(QPoly({1, 2})));
}

TEST(RingAxioms, QPolyRandom) {
  RandomPolys gen(20260101u);
  for (int i = 0; i < 200; ++i) {
    const QPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + QPoly(), a);
    ASSERT_EQ(a * QPoly(1), a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a + (-a), QPoly());
    if (!b.is_zero()) {
      const auto q = exact_div(a * b, b);
      ASSERT_TRUE(q.has_value());
      ASSERT_EQ(*q, a);
    }
    ASSERT_EQ((a * b).evaluate(Rat::parse("-3/5")), a.evaluate(Rat::parse("-3/5")) * b.evaluate(Rat::parse("-3/5")));
  }
}

TEST(RingAxioms, QLaurentRandom) {
  RandomPolys gen(7u);
  for (int i = 0; i < 200; ++i) {
    const QLaurent a = gen.laurent(), b = gen.laurent(), c = gen.laurent();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    const QPoly p = a.base();
    ASSERT_EQ(subst_q_recip(p).base().degree(), p.degree());
    if (!p.is_zero()) {
      // p(1/q) = q^o B(q) implies p(q) = q^{-o} B(1/q)
      const QLaurent r = subst_q_recip(p);
      ASSERT_EQ(subst_q_recip(r.base()).times_q_power(-r.offset()), QLaurent(p));
      ASSERT_EQ(r.evaluate(Rat::parse("2/7")), p.evaluate(Rat::parse("7/2")));
    }
  }
}

TEST(RingAxioms, TQPolyRandom) {
  RandomPolys gen(99u);
  for (int i = 0; i < 200; ++i) {
    const TQPoly a = gen.bivar(), b = gen.bivar(), c = gen.bivar();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      const auto q = exact_div(a * b, b);
      ASSERT_TRUE(q.has_value());
      ASSERT_EQ(*q, a);
    }
  }
}

}  // namespace
}  // namespace qeuler
