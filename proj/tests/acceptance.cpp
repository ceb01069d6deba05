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


// Acceptance gate: one PASS/FAIL line per criterion, each with its time bound.
// Usage: qeuler_acceptance [path-to-qeuler-cli]

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/doubloon.hpp"
#include "core/eulerian.hpp"
#include "core/format.hpp"
#include "core/report.hpp"
#include "core/ring.hpp"
#include "core/special.hpp"
#include "core/suites.hpp"
#include "core/unimodality.hpp"

namespace {

using namespace qeuler;

struct Criterion {
  int id;
  const char* title;
  double bound_seconds;  // <= 0 means no bound
  std::function<std::string()> run;  // returns "" on success, else the reason
};

QPoly P(std::initializer_list<long> c) { return QPoly(c); }
QPoly qpow(long e) { return QPoly::monomial(1, static_cast<std::size_t>(e)); }
QPoly one_plus_q(long e = 1) { return QPoly(1) + qpow(e); }

std::string table_one() {
  const auto a = gamma_a_triangle(6);
  const auto b = gamma_b_triangle(6);
  const std::vector<std::vector<long>> left{{1}, {1}, {1, 2}, {1, 8}, {1, 22, 16}, {1, 52, 136}};
  const std::vector<std::vector<long>> right{
      {1}, {1, 4}, {1, 20}, {1, 72, 80}, {1, 232, 976}, {1, 716, 7664, 3904}};
  for (int n = 1; n <= 6; ++n) {
    if (a.kmax(n) != static_cast<int>(left[n - 1].size())) return "a row length n=" + std::to_string(n);
    for (int k = 1; k <= a.kmax(n); ++k) {
      if (spec_q1(a.at(n, k)) != left[n - 1][k - 1]) return "a mismatch";
    }
    if (b.kmax(n) + 1 != static_cast<int>(right[n - 1].size())) return "b row length";
    for (int k = 0; k <= b.kmax(n); ++k) {
      if (spec_q1(b.at(n, k)) != right[n - 1][k]) return "b mismatch n=" + std::to_string(n);
    }
  }
  BigInt sum = 0;
  for (int k = 0; k <= 3; ++k) sum += spec_q1(b.at(6, k)) * (BigInt(1) << (6 - 2 * k));
  if (sum != 46080) return "row sum " + sum.get_str();
  return {};
}

std::string displayed_polynomials() {
  const auto a = gamma_a_triangle(6);
  const std::vector<std::pair<std::pair<int, int>, QPoly>> table{
      {{1, 1}, QPoly(1)},
      {{2, 1}, QPoly(1)},
      {{3, 1}, QPoly(1)},
      {{3, 2}, P({0, 1, 1})},
      {{4, 1}, QPoly(1)},
      {{4, 2}, P({0, 2}) * one_plus_q() * one_plus_q()},
      {{5, 1}, QPoly(1)},
      {{5, 2}, qpow(1) * one_plus_q() * P({3, 5, 3})},
      {{5, 3}, P({0, 0, 0, 2}) * one_plus_q() * one_plus_q() * one_plus_q(2)},
      {{6, 1}, QPoly(1)},
      {{6, 2}, qpow(1) * one_plus_q() * one_plus_q() * P({4, 5, 4})},
      {{6, 3}, qpow(3) * one_plus_q() * one_plus_q() * one_plus_q(2) * P({5, 7, 5})},
  };
  for (const auto& [nk, p] : table) {
    if (a.at(nk.first, nk.second) != p) {
      return "a_{" + std::to_string(nk.first) + "," + std::to_string(nk.second) + "}";
    }
  }
  const TQPoly t = TQPoly::monomial(1, 1);
  const TQPoly b[] = {
      TQPoly(std::vector<QLaurent>{1, QLaurent(qpow(1))}),
      poch_t(1, 2, Sign::Minus, 2) + TQPoly(P({0, 1, 2, 1})) * t,
      poch_t(1, 3, Sign::Minus, 2) + TQPoly(P({0, 2, 5, 6, 5, 2})) * t * poch_t(3, 1, Sign::Minus, 2),
      poch_t(1, 4, Sign::Minus, 2) +
          TQPoly(P({0, 3, 9, 15, 18, 15, 9, 3})) * t * poch_t(3, 2, Sign::Minus, 2) +
          TQPoly(P({0, 0, 0, 0, 2, 7, 11, 13, 14, 13, 11, 7, 2})) * t * t,
  };
  for (int n = 1; n <= 4; ++n) {
    if (typeB_poly(n) != b[n - 1]) return "B_" + std::to_string(n);
  }
  return {};
}

std::string identity_A() {
  const auto A = carlitz_triangle(14);
  for (int n = 1; n <= 14; ++n) {
    if (gamma_expand_A(n) != carlitz_poly(n)) return "gamma_expand_A n=" + std::to_string(n);
    for (int k = 1; k <= n; ++k) {
      if (basis_change_A(n, k) != A.at(n, k)) return "basis_change_A n=" + std::to_string(n);
    }
  }
  return {};
}

std::string identity_B() {
  const auto B = typeB_triangle(14);
  for (int n = 1; n <= 14; ++n) {
    if (gamma_expand_B(n) != typeB_poly(n)) return "gamma_expand_B n=" + std::to_string(n);
    for (int k = 0; k <= n; ++k) {
      if (basis_change_B(n, k) != B.at(n, k)) return "basis_change_B n=" + std::to_string(n);
    }
  }
  return {};
}

std::string series_oracles() {
  for (int n = 1; n <= 10; ++n) {
    if (carlitz_series_oracle(n, 2 * n) != carlitz_poly(n)) return "Carlitz n=" + std::to_string(n);
    if (typeB_series_oracle(n, 2 * n) != typeB_poly(n)) return "type B n=" + std::to_string(n);
  }
  return {};
}

std::string tangent() {
  for (int n = 0; n <= 6; ++n) {
    const QPoly t = q_tangent(n);
    if (!is_nonneg(t)) return "negative coefficient n=" + std::to_string(n);
    if (t != a_star(2 * n + 1, n + 1)) return "a_star mismatch n=" + std::to_string(n);
  }
  if (q_tangent(1) != P({1, 1})) return "T_3";
  if (q_tangent(2) != P({2, 4, 4, 4, 2})) return "T_5";
  const auto a = gamma_a_triangle(5);
  if (q_tangent(1).at_one() != 2 || spec_q1(a.at(3, 2)) != 2) return "T_3(1)";
  if (q_tangent(2).at_one() != 16 || spec_q1(a.at(5, 3)) != 16) return "T_5(1)";
  return {};
}

std::string even_division() {
  for (int n = 1; n <= 6; ++n) {
    const TQPoly d(std::vector<QLaurent>{1, QLaurent::monomial(1, n)});
    const auto quot = exact_div(carlitz_poly(2 * n), d);
    if (!quot) return "not divisible n=" + std::to_string(n);
    if (!is_nonneg(*quot)) return "negative coefficient n=" + std::to_string(n);
    for (const auto& c : quot->terms()) {
      if (c.offset() < 0) return "negative power n=" + std::to_string(n);
    }
  }
  return {};
}

std::string d_family() {
  for (int n = 1; n <= 8; ++n) {
    if (!is_nonneg(d_poly(n))) return "d_" + std::to_string(n);
  }
  for (int n = 1; n <= 5; ++n) {
    if (!verify_d_identity(n)) return "identity n=" + std::to_string(n);
  }
  return {};
}

std::string secants() {
  const auto b = gamma_b_triangle(10);
  // the b triangle starts at n = 1; for n = 0 both sides are B_0 = 1
  if (!b_odd_vanish(0) || b_central(0) != QPoly(1) || e_star(0) != QPoly(1)) return "n=0";
  for (int n = 1; n <= 5; ++n) {
    if (!b_odd_vanish(n)) return "odd vanishing n=" + std::to_string(n);
    if (b_central(n) != b.at(2 * n, n)) return "central n=" + std::to_string(n);
    if (e_star(n).shifted(static_cast<std::size_t>(n * n)) != b.at(2 * n, n)) return "E* n=" + std::to_string(n);
  }
  const auto e = secant_numbers(4);
  const long expected[] = {1, 1, 5, 61, 1385};
  for (int n = 0; n <= 4; ++n) {
    if (e[n] != expected[n]) return "E_" + std::to_string(2 * n);
    if (g_star(n).at_one() != e[n]) return "G*(1) n=" + std::to_string(n);
  }
  for (int n = 1; n <= 4; ++n) {
    if (!verify_gstar_identity(n)) return "G* identity n=" + std::to_string(n);
  }
  return {};
}

std::string conjecture() {
  const Report r = conjecture_report(6);
  if (r.verdict() != "consistent") return "verdict " + r.verdict();
  return {};
}

std::string doubloons() {
  const auto a = gamma_a_triangle(7);
  const long counts[] = {2, 16, 272};
  for (int n = 1; n <= 3; ++n) {
    const auto c = interlaced_census(n);
    if (c.gf != a.at(2 * n + 1, n + 1)) return "gf n=" + std::to_string(n);
    if (c.interlaced != counts[n - 1]) return "count n=" + std::to_string(n);
  }
  if (interlaced_census(3).candidates != 5040) return "candidate count";
  return {};
}

std::string section_four() {
  for (int n = 1; n <= 12; ++n) {
    if (!reciprocity_A(n) || !reciprocity_B(n)) return "reciprocity n=" + std::to_string(n);
  }
  const Rat points[] = {Rat::parse("3/2"), Rat(2), Rat::parse("7/3"), Rat(5), Rat::parse("1/2"),
                        Rat::parse("2/3")};
  for (int n = 2; n <= 10; ++n) {
    for (const Rat& q0 : points) {
      if (!monotone_check_A(n, q0) || !monotone_check_B(n, q0)) {
        return "monotone n=" + std::to_string(n) + " q=" + q0.str();
      }
    }
  }
  return {};
}

std::string brackets() {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int s = 1; s <= k; ++s) {
        if (!bracket_identity_A(n, k, s)) return "A triple";
      }
    }
  }
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int s = 0; s <= k; ++s) {
        if (!bracket_identity_B(n, k, s)) return "B triple";
      }
    }
  }
  return {};
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

std::string kernel(const std::string& cli) {
  // q-binomial theorem
  for (long N = 0; N <= 12; ++N) {
    TQPoly lhs(1);
    for (long i = 0; i < N; ++i) lhs *= TQPoly(std::vector<QLaurent>{1, QLaurent::monomial(1, i)});
    TQPoly rhs;
    for (long k = 0; k <= N; ++k) {
      rhs += TQPoly::monomial(QLaurent(q_binom(N, k), k * (k - 1) / 2), static_cast<std::size_t>(k));
    }
    if (lhs != rhs) return "q-binomial theorem N=" + std::to_string(N);
  }
  // ring axioms and JSON round trip on the same random values
  std::mt19937 gen(20260101u);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000), deg(-1, 30), off(-8, 8);
  auto poly = [&] {
    std::vector<BigInt> cs(static_cast<std::size_t>(deg(gen) + 1));
    for (auto& c : cs) c = BigInt(coeff(gen)) * BigInt("98765432109876543210");
    return QPoly(cs);
  };
  for (int i = 0; i < 200; ++i) {
    const QPoly a = poly(), b = poly(), c = poly();
    if (a + b != b + a || a * b != b * a || (a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) ||
        a * (b + c) != a * b + a * c || !(a - a).is_zero() || a * QPoly(1) != a) {
      return "ring axiom case " + std::to_string(i);
    }
    const QLaurent l(b, off(gen));
    const TQPoly t(std::vector<QLaurent>{QLaurent(a), l, QLaurent(c, off(gen))});
    for (const Value& v : {Value(a), Value(l), Value(t)}) {
      if (value_from_json(nlohmann::json::parse(to_json(v).dump())) != v) {
        return "JSON round trip case " + std::to_string(i);
      }
    }
  }
  // deterministic output, in process and through the CLI when available
  if (render_table(Family::GammaB, 8, false, OutputFormat::Json) !=
      render_table(Family::GammaB, 8, false, OutputFormat::Json)) {
    return "table rendering differs between runs";
  }
  if (render_report(run_suite("all"), OutputFormat::Json, false) !=
      render_report(run_suite("all"), OutputFormat::Json, false)) {
    return "report rendering differs between runs";
  }
  if (!cli.empty()) {
    for (const char* args : {" verify all --format json", " table b --max-n 8 --format csv",
                             " conjecture --max-n 5", " poly Gstar --n 5 --format json"}) {
      int s1 = 0, s2 = 0;
      const std::string first = run_command("'" + cli + "'" + args, s1);
      const std::string second = run_command("'" + cli + "'" + args, s2);
      if (s1 != 0 || s1 != s2) return std::string("CLI exit status for") + args;
      if (first.empty() || first != second) return std::string("CLI output differs for") + args;
    }
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "gamma triangles at q = 1 (b_{6,2} = 7664)", 0.1, table_one},
      {2, "displayed a_{n,k}(q) and B_1..B_4", 0.1, displayed_polynomials},
      {3, "type A gamma expansion, n <= 14", 10, identity_A},
      {4, "type B gamma expansion, n <= 14", 20, identity_B},
      {5, "series oracles, n <= 10", 10, series_oracles},
      {6, "q-tangent numbers, n <= 6", 5, tangent},
      {7, "A_{2n} divisible by 1 + t q^n, n <= 6", 5, even_division},
      {8, "d_n nonnegative (n <= 8) and closed form (n <= 5)", 10, d_family},
      {9, "type B central values and q-secants", 10, secants},
      {10, "G*_{2n} positivity scan, n <= 6 (consistent)", 10, conjecture},
      {11, "interlaced doubloons, n <= 3", 1, doubloons},
      {12, "reciprocity and monotonicity", 5, section_four},
      {13, "bracket identities, n <= 12", 5, brackets},
      {14, "kernel properties, round trip, determinism", 0, [&] { return kernel(cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && c.bound_seconds > 0 && secs >= c.bound_seconds) {
      reason = "over the time bound";
    }
    const bool ok = reason.empty();
    failures += ok ? 0 : 1;
    char timing[64];
    if (c.bound_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs < %gs", secs, c.bound_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::printf("%s %2d  %-52s %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, timing,
                ok ? "" : "  ", reason.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
