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

// Named polynomials and triangle tables as served to the command line.

#include <string>
#include <string_view>

#include "core/eulerian.hpp"
#include "core/format.hpp"
#include "core/report.hpp"

namespace qeuler {

/// One of A, B, T, dn, Estar, Gstar, Eq, central at index n.
/// Throws std::invalid_argument for an unknown name or an out-of-range n.
Value named_poly(std::string_view name, int n);

/// Text is the ascending-power rendering; CSV lists one nonzero
/// coefficient per line; JSON follows the value schema in format.hpp.
std::string render_value(const Value& v, OutputFormat format);

/// Rows 1..max_n (0..max_n for B) of a family, as polynomials or, with
/// at_q1, as integers.
std::string render_table(Family family, int max_n, bool at_q1, OutputFormat format);

}  // namespace qeuler
