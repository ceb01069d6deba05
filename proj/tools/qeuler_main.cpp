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

// qeuler command-line frontend. Talks to the library only through the C API.
//
// Exit codes: 0 all checks pass, 1 verification failure or counterexample,
// 2 usage error.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "qeuler/qeuler.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int exit_code_for(qeu_status s) {
  switch (s) {
    case QEU_OK: return kExitOk;
    case QEU_ERR_INVALID_ARGUMENT:
    case QEU_ERR_IO: return kExitUsage;
    default: return kExitFailure;
  }
}

int report_error(qeu_status s) {
  std::fprintf(stderr, "qeuler: %s: %s\n", qeu_status_string(s), qeu_last_error());
  return exit_code_for(s);
}

qeu_format format_from(const std::string& name) {
  if (name == "csv") return QEU_FORMAT_CSV;
  if (name == "json") return QEU_FORMAT_JSON;
  return QEU_FORMAT_TEXT;
}

int print_and_free(char* s) {
  std::fputs(s, stdout);
  qeu_string_free(s);
  return kExitOk;
}

// Prints a report and derives the exit code from its verdict.
int finish_report(qeu_status s, qeu_report* r, qeu_format format, bool timing) {
  if (s != QEU_OK) return report_error(s);
  char* text = nullptr;
  const qeu_status rs = qeu_report_render(r, format, timing ? 1 : 0, &text);
  const int passed = qeu_report_passed(r);
  qeu_report_free(r);
  if (rs != QEU_OK) return report_error(rs);
  print_and_free(text);
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Eulerian polynomials, gamma expansions and q-tangent/secant families"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qeu_version()));

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };

  // table
  auto* table = app.add_subcommand("table", "Print a triangle A, B, a or b");
  std::string family;
  int table_max_n = 6;
  bool at_q1 = false;
  table->add_option("family", family, "Triangle family")
      ->required()
      ->check(CLI::IsMember({"A", "B", "a", "b"}));
  table->add_option("--max-n", table_max_n, "Last row")->check(CLI::PositiveNumber);
  table->add_flag("--q1", at_q1, "Evaluate entries at q = 1");
  add_format(table);

  // poly
  auto* poly = app.add_subcommand("poly", "Print one named polynomial");
  std::string poly_name;
  int poly_n = 0;
  poly->add_option("name", poly_name, "A, B, T, dn, Estar, Gstar, Eq or central")
      ->required()
      ->check(CLI::IsMember({"A", "B", "T", "dn", "Estar", "Gstar", "Eq", "central"}));
  poly->add_option("--n", poly_n, "Index")->required();
  add_format(poly);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int verify_max_n = -1;
  std::string points;
  bool timing = false;
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"all", "expansionA", "expansionB", "series", "tangent", "secant",
                             "doubloon", "reciprocity", "monotone", "brackets"}));
  verify->add_option("--max-n", verify_max_n, "Largest n (suite default when omitted)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--points", points, "Comma-separated rational q values, e.g. 2,3/2,1/2");
  verify->add_flag("--timing", timing, "Include wall time in the report");
  add_format(verify);

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "Scan G*_{2n}(q) for nonpositive coefficients");
  int conj_max_n = 6;
  conjecture->add_option("--max-n", conj_max_n, "Largest n")->check(CLI::NonNegativeNumber);
  conjecture->add_flag("--timing", timing, "Include wall time in the report");
  add_format(conjecture);

  // oeis-check
  auto* oeis = app.add_subcommand("oeis-check", "Compare a q = 1 triangle with a b-file fixture");
  std::string sequence;
  int oeis_max_n = 8;
  std::string fixture;
  oeis->add_option("sequence", sequence, "A101280 or A008971")
      ->required()
      ->check(CLI::IsMember({"A101280", "A008971"}));
  oeis->add_option("--max-n", oeis_max_n, "Last triangle row")->check(CLI::PositiveNumber);
  oeis->add_option("--fixture", fixture, "b-file path")->required();
  oeis->add_flag("--timing", timing, "Include wall time in the report");
  add_format(oeis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const qeu_format fmt = format_from(format);

  if (*table) {
    char* out = nullptr;
    const qeu_status s = qeu_table_render(family[0], table_max_n, at_q1 ? 1 : 0, fmt, &out);
    return s == QEU_OK ? print_and_free(out) : report_error(s);
  }
  if (*poly) {
    qeu_value* v = nullptr;
    qeu_status s = qeu_named_poly(poly_name.c_str(), poly_n, &v);
    if (s != QEU_OK) return report_error(s);
    char* out = nullptr;
    s = qeu_value_render(v, fmt, &out);
    qeu_value_free(v);
    return s == QEU_OK ? print_and_free(out) : report_error(s);
  }
  if (*verify) {
    qeu_report* r = nullptr;
    const qeu_status s = qeu_verify(suite.c_str(), verify_max_n, points.c_str(), &r);
    return finish_report(s, r, fmt, timing);
  }
  if (*conjecture) {
    qeu_report* r = nullptr;
    const qeu_status s = qeu_conjecture_scan(conj_max_n, &r);
    return finish_report(s, r, fmt, timing);
  }
  if (*oeis) {
    qeu_report* r = nullptr;
    const qeu_status s = qeu_oeis_check(sequence.c_str(), oeis_max_n, fixture.c_str(), &r);
    return finish_report(s, r, fmt, timing);
  }
  return kExitUsage;
}
