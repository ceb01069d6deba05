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

#include "core/report.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>

namespace qeuler {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format \"" + name + "\"");
}

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Reported: return "reported";
  }
  return "?";
}

void Report::add(std::string name, bool ok, std::string detail) {
  items_.push_back({std::move(name), ok ? ItemStatus::Pass : ItemStatus::Fail, std::move(detail)});
}

void Report::note(std::string name, std::string detail) {
  items_.push_back({std::move(name), ItemStatus::Reported, std::move(detail)});
}

void Report::check(std::string name, const std::function<bool()>& check, std::string detail) {
  try {
    add(std::move(name), check(), std::move(detail));
  } catch (const std::exception& e) {
    add(std::move(name), false, e.what());
  }
}

void Report::set_counter(const std::string& name, std::string value) {
  auto it = std::find_if(counters_.begin(), counters_.end(),
                         [&](const auto& kv) { return kv.first == name; });
  if (it != counters_.end()) {
    it->second = std::move(value);
  } else {
    counters_.emplace_back(name, std::move(value));
  }
}

void Report::absorb(const Report& other) {
  for (const auto& item : other.items_) {
    items_.push_back({other.suite_ + "/" + item.name, item.status, item.detail});
  }
  for (const auto& [k, v] : other.counters_) set_counter(other.suite_ + "/" + k, v);
  wall_seconds_ += other.wall_seconds_;
}

bool Report::passed() const { return count(ItemStatus::Fail) == 0; }

std::size_t Report::count(ItemStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [s](const auto& i) { return i.status == s; }));
}

std::string Report::verdict() const {
  if (!verdict_.empty()) return verdict_;
  return passed() ? "pass" : "fail";
}

nlohmann::ordered_json report_json(const Report& r, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite();
  j["status"] = r.verdict();
  j["summary"] = {{"pass", r.count(ItemStatus::Pass)},
                  {"fail", r.count(ItemStatus::Fail)},
                  {"reported", r.count(ItemStatus::Reported)}};
  auto counters = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counters()) counters[k] = v;
  j["counters"] = std::move(counters);
  auto items = nlohmann::ordered_json::array();
  for (const auto& i : r.items()) {
    items.push_back({{"name", i.name}, {"status", status_name(i.status)}, {"detail", i.detail}});
  }
  j["items"] = std::move(items);
  if (timing) j["timing"] = {{"wall_seconds", r.wall_seconds()}};
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_report(const Report& r, OutputFormat format, bool timing) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      os << report_json(r, timing).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "suite,item,status,detail\n";
      for (const auto& i : r.items()) {
        os << csv_field(r.suite()) << ',' << csv_field(i.name) << ',' << status_name(i.status)
           << ',' << csv_field(i.detail) << '\n';
      }
      break;
    case OutputFormat::Text:
      os << "suite: " << r.suite() << '\n';
      for (const auto& i : r.items()) {
        os << '[' << status_name(i.status) << "] " << i.name;
        if (!i.detail.empty()) os << ": " << i.detail;
        os << '\n';
      }
      for (const auto& [k, v] : r.counters()) os << "  " << k << " = " << v << '\n';
      os << "result: " << r.verdict() << " (" << r.count(ItemStatus::Pass) << " pass, "
         << r.count(ItemStatus::Fail) << " fail, " << r.count(ItemStatus::Reported)
         << " reported)\n";
      if (timing) os << "wall time: " << r.wall_seconds() << " s\n";
      break;
  }
  return os.str();
}

}  // namespace qeuler
