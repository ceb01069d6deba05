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

#include <stdexcept>
#include <string>

namespace qeuler {

/// A computed object violated a property that must hold by construction
/// (a series tail that should vanish, a quotient that should be exact, a
/// coefficient that should be nonnegative). Always indicates a defect.
class VerificationError : public std::logic_error {
 public:
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qeuler
