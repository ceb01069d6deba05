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

#include "core/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "core/doubloon.hpp"
#include "core/errors.hpp"
#include "core/eulerian.hpp"
#include "core/format.hpp"
#include "core/special.hpp"
#include "core/unimodality.hpp"

namespace qeuler {

namespace {

std::string at_n(int n) { return "n=" + std::to_string(n); }

void require_min(const std::string& suite, int max_n, int lo) {
  if (max_n < lo) {
    throw std::invalid_argument("verify " + suite + ": --max-n must be >= " + std::to_string(lo));
  }
}

void suite_expansion_a(Report& r, int max_n) {
  require_min("expansionA", max_n, 1);
  const auto a = triangle(Family::GammaA, max_n);
  const auto big_a = triangle(Family::CarlitzA, max_n);
  for (int n = 1; n <= max_n; ++n) {
    r.check("gamma_expand_A " + at_n(n), [n] { return gamma_expand_A(n) == carlitz_poly(n); });
    r.check("basis_change_A " + at_n(n), [&, n] {
      for (int k = 1; k <= n; ++k) {
        if (basis_change_A(n, k) != big_a->at(n, k)) return false;
      }
      return true;
    });
    r.check("a nonnegative " + at_n(n), [&, n] {
      for (const auto& p : a->row(n)) {
        if (!is_nonneg(p)) return false;
      }
      return true;
    });
  }
}

void suite_expansion_b(Report& r, int max_n) {
  require_min("expansionB", max_n, 1);
  const auto b = triangle(Family::GammaB, max_n);
  const auto big_b = triangle(Family::TypeB, max_n);
  for (int n = 1; n <= max_n; ++n) {
    r.check("gamma_expand_B " + at_n(n), [n] { return gamma_expand_B(n) == typeB_poly(n); });
    r.check("basis_change_B " + at_n(n), [&, n] {
      for (int k = 0; k <= n; ++k) {
        if (basis_change_B(n, k) != big_b->at(n, k)) return false;
      }
      return true;
    });
    r.check("b nonnegative " + at_n(n), [&, n] {
      for (const auto& p : b->row(n)) {
        if (!is_nonneg(p)) return false;
      }
      return true;
    });
  }
}

void suite_series(Report& r, int max_n) {
  require_min("series", max_n, 1);
  for (int n = 1; n <= max_n; ++n) {
    r.check("carlitz_series_oracle " + at_n(n),
            [n] { return carlitz_series_oracle(n, 2 * n) == carlitz_poly(n); },
            "window t^" + std::to_string(2 * n));
  }
  for (int n = 0; n <= max_n; ++n) {
    const int window = std::max(2 * n, n + 1);
    r.check("typeB_series_oracle " + at_n(n),
            [n, window] { return typeB_series_oracle(n, window) == typeB_poly(n); },
            "window t^" + std::to_string(window));
  }
}

void suite_tangent(Report& r, int max_n) {
  require_min("tangent", max_n, 1);
  const IntTriangle classical = classical_gamma_a(2 * max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    r.check("T_" + std::to_string(2 * n + 1) + " = a*_{2n+1,n+1}", [&, n] {
      const QPoly t = q_tangent(n);
      r.set_counter("T_" + std::to_string(2 * n + 1) + "(1)", t.at_one().get_str());
      return t == a_star(2 * n + 1, n + 1) && t.at_one() == classical.at(2 * n + 1, n + 1);
    });
  }
  for (int n = 1; n <= max_n; ++n) {
    r.check("even_quotient " + at_n(n), [n] {
      const TQPoly quot = even_quotient(n);
      const TQPoly divisor(std::vector<QLaurent>{QLaurent(1), QLaurent::monomial(1, n)});
      return quot * divisor == carlitz_poly(2 * n) && quot.degree() == 2 * n - 2;
    });
    r.check("d_poly " + at_n(n), [n] { return is_nonneg(d_poly(n)); });
    r.check("d identity " + at_n(n), [n] { return verify_d_identity(n); });
  }
}

void suite_secant(Report& r, int max_n) {
  require_min("secant", max_n, 1);
  const auto secants = secant_numbers(max_n);
  const auto b = triangle(Family::GammaB, 2 * max_n);
  for (int n = 0; n <= max_n; ++n) {
    const std::string tag = at_n(n);
    BigInt four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    const BigInt& secant = secants[static_cast<std::size_t>(n)];
    r.set_counter("E_" + std::to_string(2 * n), secant.get_str());
    r.check("B_{2n+1} vanishes " + tag, [n] { return b_odd_vanish(n); });
    if (n >= 1) {
      r.check("b_central " + tag, [&, n] { return b_central(n) == b->at(2 * n, n); });
      r.check("E* q^{n^2} = b_{2n,n} " + tag, [&, n] {
        return QLaurent(e_star(n)).times_q_power(static_cast<long>(n) * n) ==
               QLaurent(b->at(2 * n, n));
      });
    }
    r.check("E*(1) = 4^n E_2n " + tag, [&, n] { return e_star(n).at_one() == four_n * secant; });
    r.check("G* exists, G*(1) = E_2n " + tag, [&, n] { return g_star(n).at_one() == secant; });
    r.check("G* identity " + tag, [n] { return verify_gstar_identity(n); });
    r.check("E_2n(q) at q=1 " + tag, [&, n] {
      const QLaurent e = e_q_secant(n);
      return e.offset() >= 0 && e.at_one() == four_n * secant;
    });
  }
}

void suite_doubloon(Report& r, int max_n) {
  require_min("doubloon", max_n, 1);
  if (max_n > kDefaultDoubloonGuard) {
    throw std::invalid_argument("verify doubloon: --max-n above the enumeration guard " +
                                std::to_string(kDefaultDoubloonGuard));
  }
  const auto a = triangle(Family::GammaA, 2 * max_n + 1);
  for (int n = 1; n <= max_n; ++n) {
    r.check("interlaced_gf " + at_n(n), [&, n] {
      const DoubloonCensus c = interlaced_census(n);
      const QPoly& target = a->at(2 * n + 1, n + 1);
      r.set_counter("interlaced doubloons " + at_n(n), std::to_string(c.interlaced));
      r.set_counter("candidates " + at_n(n), std::to_string(c.candidates));
      const bool in_range = c.min_stat >= static_cast<long>(target.valuation()) &&
                            c.max_stat <= target.degree();
      return c.gf == target && in_range;
    });
  }
}

void suite_reciprocity(Report& r, int max_n) {
  require_min("reciprocity", max_n, 1);
  for (int n = 1; n <= max_n; ++n) r.check("reciprocity_A " + at_n(n), [n] { return reciprocity_A(n); });
  for (int n = 0; n <= max_n; ++n) r.check("reciprocity_B " + at_n(n), [n] { return reciprocity_B(n); });
}

void suite_monotone(Report& r, int max_n, const std::vector<Rat>& points) {
  require_min("monotone", max_n, 2);
  for (const auto& q0 : points) {
    if (q0.sign() <= 0 || q0 == Rat(1)) {
      throw std::invalid_argument("verify monotone: points must be positive and != 1");
    }
  }
  for (int n = 2; n <= max_n; ++n) {
    for (const auto& q0 : points) {
      const std::string tag = at_n(n) + " q=" + q0.str();
      r.check("monotone_A " + tag, [n, q0] { return monotone_check_A(n, q0); });
      r.check("monotone_B " + tag, [n, q0] { return monotone_check_B(n, q0); });
    }
  }
  r.check("q=1 rows of A unimodal and symmetric",
          [max_n] { return q1_unimodality(Family::CarlitzA, max_n); });
  r.check("q=1 rows of B unimodal and symmetric",
          [max_n] { return q1_unimodality(Family::TypeB, max_n); });
}

void suite_brackets(Report& r, int max_n) {
  require_min("brackets", max_n, 1);
  long count_a = 0;
  long count_b = 0;
  r.check("bracket identity A", [&] {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int s = 1; s <= k; ++s, ++count_a) {
          if (!bracket_identity_A(n, k, s)) return false;
        }
      }
    }
    return true;
  });
  r.check("bracket identity B", [&] {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int s = 0; s <= k; ++s, ++count_b) {
          if (!bracket_identity_B(n, k, s)) return false;
        }
      }
    }
    return true;
  });
  r.set_counter("triples A", std::to_string(count_a));
  r.set_counter("triples B", std::to_string(count_b));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"expansionA", "expansionB", "series",
                                              "tangent",    "secant",     "doubloon",
                                              "reciprocity", "monotone",  "brackets"};
  return names;
}

int default_max_n(const std::string& suite) {
  if (suite == "expansionA" || suite == "expansionB") return 14;
  if (suite == "series" || suite == "monotone") return 10;
  if (suite == "tangent") return 8;
  if (suite == "secant") return 6;
  if (suite == "doubloon") return 3;
  if (suite == "reciprocity" || suite == "brackets") return 12;
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

std::vector<Rat> default_monotone_points() {
  return {Rat(BigInt(3), BigInt(2)), Rat(2), Rat(BigInt(7), BigInt(3)), Rat(5),
          Rat(BigInt(1), BigInt(2)), Rat(BigInt(2), BigInt(3))};
}

Report run_suite(const std::string& suite, std::optional<int> max_n,
                 const std::vector<Rat>& points) {
  const auto start = std::chrono::steady_clock::now();
  Report r(suite);
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      std::optional<int> n = max_n;
      if (n && name == "doubloon") n = std::min(*n, default_max_n("doubloon"));
      if (n && name == "monotone") n = std::max(*n, 2);
      r.absorb(run_suite(name, n, points));
    }
  } else {
    const int n = max_n.value_or(default_max_n(suite));
    if (suite == "expansionA") {
      suite_expansion_a(r, n);
    } else if (suite == "expansionB") {
      suite_expansion_b(r, n);
    } else if (suite == "series") {
      suite_series(r, n);
    } else if (suite == "tangent") {
      suite_tangent(r, n);
    } else if (suite == "secant") {
      suite_secant(r, n);
    } else if (suite == "doubloon") {
      suite_doubloon(r, n);
    } else if (suite == "reciprocity") {
      suite_reciprocity(r, n);
    } else if (suite == "monotone") {
      suite_monotone(r, n, points.empty() ? default_monotone_points() : points);
    } else if (suite == "brackets") {
      suite_brackets(r, n);
    }
  }
  r.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

Report conjecture_report(int max_n) {
  if (max_n < 0) throw std::invalid_argument("conjecture: --max-n must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  Report r("conjecture");
  const GStarScan scan = conjecture_scan_gstar(max_n);
  for (const auto& row : scan.rows) {
    std::ostringstream detail;
    detail << "deg=" << row.degree << " min_coeff=" << row.min_coeff.get_str()
           << " palindromic=" << (row.palindromic ? "yes" : "no")
           << " G(1)=" << row.value_at_one.get_str() << " E=" << row.secant.get_str()
           << " G=" << to_text(row.g);
    const std::string name = "G*_" + std::to_string(2 * row.n);
    if (row.consistent) {
      r.note(name, detail.str());
    } else {
      detail << " counterexample: coefficient of q^" << row.offending_exponent << " is "
             << row.g.coeff(static_cast<std::size_t>(row.offending_exponent)).get_str();
      r.fail(name, detail.str());
    }
  }
  r.set_verdict(scan.consistent() ? "consistent" : "counterexample");
  r.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read fixture " + path);
  BFile out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long index = 0;
    std::string value;
    std::string extra;
    if (!(ls >> index >> value) || (ls >> extra)) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": malformed b-file line");
    }
    BigInt v;
    if (v.set_str(value, 10) != 0) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": malformed value");
    }
    out.terms.emplace_back(index, std::move(v));
  }
  return out;
}

std::vector<std::vector<BigInt>> oeis_rows(const std::string& sequence, int max_n) {
  if (max_n < 1) throw std::invalid_argument("oeis-check: --max-n must be >= 1");
  std::vector<std::vector<BigInt>> rows;
  if (sequence == "A101280") {
    const auto a = triangle(Family::GammaA, max_n);
    for (int n = 1; n <= max_n; ++n) {
      std::vector<BigInt> row;
      for (const auto& p : a->row(n)) row.push_back(p.at_one());
      rows.push_back(std::move(row));
    }
    return rows;
  }
  if (sequence == "A008971") {
    const auto b = triangle(Family::GammaB, max_n);
    rows.push_back({BigInt(1)});
    for (int n = 1; n <= max_n; ++n) {
      std::vector<BigInt> row;
      BigInt scale = 1;
      for (const auto& p : b->row(n)) {
        const BigInt v = p.at_one();
        if (!mpz_divisible_p(v.get_mpz_t(), scale.get_mpz_t())) {
          throw VerificationError("b_{" + std::to_string(n) + ",k}(1) not divisible by 4^k");
        }
        row.push_back(v / scale);
        scale *= 4;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }
  throw std::invalid_argument("unknown sequence \"" + sequence + "\" (expected A101280 or A008971)");
}

Report oeis_check(const std::string& sequence, int max_n, const std::string& fixture_path) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = oeis_rows(sequence, max_n);
  const BFile fixture = read_bfile(fixture_path);
  Report r("oeis " + sequence);
  std::size_t pos = 0;
  long mismatches = 0;
  const int first_row = sequence == "A101280" ? 1 : 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string name = "row " + at_n(first_row + static_cast<int>(i));
    std::string detail;
    bool ok = true;
    for (std::size_t k = 0; k < rows[i].size(); ++k, ++pos) {
      if (pos >= fixture.terms.size()) {
        ok = false;
        detail = "fixture ends before this row";
        break;
      }
      if (pos > 0 && fixture.terms[pos].first != fixture.terms[pos - 1].first + 1) {
        ok = false;
        detail = "fixture indices are not consecutive";
        break;
      }
      if (fixture.terms[pos].second != rows[i][k]) {
        ok = false;
        ++mismatches;
        detail += "term " + std::to_string(fixture.terms[pos].first) + ": fixture " +
                  fixture.terms[pos].second.get_str() + " vs computed " + rows[i][k].get_str() +
                  "; ";
      }
    }
    r.add(name, ok, detail);
    if (!ok && pos >= fixture.terms.size()) break;
  }
  r.set_counter("terms compared", std::to_string(pos));
  r.set_counter("mismatches", std::to_string(mismatches));
  r.set_wall_seconds(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

}  // namespace qeuler
