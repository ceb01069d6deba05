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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qeuler {

enum class OutputFormat { Text, Csv, Json };

/// Parses "text", "csv" or "json"; throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);

enum class ItemStatus { Pass, Fail, Reported };

struct ReportItem {
  std::string name;
  ItemStatus status = ItemStatus::Pass;
  std::string detail;
};

/// Outcome of one verification suite or scan. Any Fail item fails the report.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  void add(std::string name, bool ok, std::string detail = {});
  void fail(std::string name, std::string detail) { add(std::move(name), false, std::move(detail)); }
  void note(std::string name, std::string detail);
  /// Runs `check`; an exception becomes a Fail item carrying its message.
  void check(std::string name, const std::function<bool()>& check, std::string detail = {});
  void set_counter(const std::string& name, std::string value);
  /// Appends another report's items and counters under "<suite>/" prefixes.
  void absorb(const Report& other);

  const std::string& suite() const { return suite_; }
  const std::vector<ReportItem>& items() const { return items_; }
  const std::vector<std::pair<std::string, std::string>>& counters() const { return counters_; }
  bool passed() const;
  std::size_t count(ItemStatus s) const;

  /// Overrides the overall label ("pass"/"fail" by default).
  void set_verdict(std::string v) { verdict_ = std::move(v); }
  std::string verdict() const;

  void set_wall_seconds(double s) { wall_seconds_ = s; }
  double wall_seconds() const { return wall_seconds_; }

 private:
  std::string suite_;
  std::vector<ReportItem> items_;
  std::vector<std::pair<std::string, std::string>> counters_;
  std::string verdict_;
  double wall_seconds_ = 0.0;
};

const char* status_name(ItemStatus s);

/// Wall time appears only when `timing` is set, so default output is
/// byte-identical across runs.
std::string render_report(const Report& r, OutputFormat format, bool timing);
nlohmann::ordered_json report_json(const Report& r, bool timing);

}  // namespace qeuler
