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

// Text and JSON renderings of ring values.
//
// Text: ascending powers, "q^k" exponents, explicit " + " / " - " joins,
// e.g. "1 + q", "q^-1 + 1", "1 + (2q + 2q^2)*t + q^3*t^2".
//
// JSON (coefficients are decimal strings, lowest exponent first):
//   QPoly    {"kind":"poly","var":"q","coeffs":[...]}
//   QLaurent {"kind":"laurent","var":"q","offset":e,"coeffs":[...]}
//   TQPoly   {"kind":"bivar","terms":[{"tdeg":d,"coeff":<laurent>}, ...]}

#include "json.hpp"

#include <string>
#include <variant>

#include "core/ring.hpp"

namespace qeuler {

using Value = std::variant<QPoly, QLaurent, TQPoly>;

std::string to_text(const QPoly& p);
std::string to_text(const QLaurent& p);
std::string to_text(const TQPoly& p);
std::string to_text(const Value& v);

nlohmann::ordered_json to_json(const QPoly& p);
nlohmann::ordered_json to_json(const QLaurent& p);
nlohmann::ordered_json to_json(const TQPoly& p);
nlohmann::ordered_json to_json(const Value& v);

/// Inverse of to_json; throws std::invalid_argument on schema violations.
Value value_from_json(const nlohmann::json& j);

}  // namespace qeuler
