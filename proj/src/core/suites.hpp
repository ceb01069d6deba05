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

// Verification suites, the G*_{2n} positivity scan and the OEIS fixture
// comparison, each producing a Report.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/report.hpp"
#include "core/ring.hpp"

namespace qeuler {

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Default max_n for a suite.
int default_max_n(const std::string& suite);

/// q0 values used by the monotone suite when none are given.
std::vector<Rat> default_monotone_points();

/// Runs one suite (or "all"). Throws std::invalid_argument for an unknown
/// suite, a max_n below the suite's minimum, or a doubloon max_n above the
/// enumeration guard.
Report run_suite(const std::string& suite, std::optional<int> max_n = std::nullopt,
                 const std::vector<Rat>& points = {});

/// Scan of G*_{2n}(q), n = 0..max_n. Verdict "consistent" or "counterexample".
Report conjecture_report(int max_n);

/// Standard two-column b-file: "index value" per line, '#' comments.
struct BFile {
  std::vector<std::pair<long, BigInt>> terms;
};

/// Throws std::runtime_error when the file cannot be read and
/// std::invalid_argument on a malformed line.
BFile read_bfile(const std::string& path);

/// Reading order of the q = 1 triangles: A101280 against a_{n,k} (rows
/// n >= 1), A008971 against 4^{-k} b_{n,k} (rows n >= 0, row 0 being "1").
std::vector<std::vector<BigInt>> oeis_rows(const std::string& sequence, int max_n);

Report oeis_check(const std::string& sequence, int max_n, const std::string& fixture_path);

}  // namespace qeuler
