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

#include "qeuler/qeuler.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "core/eulerian.hpp"
#include "core/format.hpp"
#include "core/report.hpp"
#include "core/suites.hpp"

struct qeu_value {
  qeuler::Value value;
};

struct qeu_report {
  qeuler::Report report;
  std::string verdict;
};

namespace {

thread_local std::string g_last_error;

class NotDivisible : public std::runtime_error {
 public:
  NotDivisible() : std::runtime_error("divisor does not divide the dividend exactly") {}
};

// Runs `body`, mapping exceptions onto status codes.
template <typename Body>
qeu_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return QEU_OK;
  } catch (const NotDivisible& e) {
    g_last_error = e.what();
    return QEU_ERR_NOT_DIVISIBLE;
  } catch (const qeuler::VerificationError& e) {
    g_last_error = e.what();
    return QEU_ERR_VERIFICATION;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return QEU_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return QEU_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return QEU_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return QEU_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QEU_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QEU_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qeuler::OutputFormat to_format(qeu_format f) {
  switch (f) {
    case QEU_FORMAT_TEXT: return qeuler::OutputFormat::Text;
    case QEU_FORMAT_CSV: return qeuler::OutputFormat::Csv;
    case QEU_FORMAT_JSON: return qeuler::OutputFormat::Json;
  }
  throw std::invalid_argument("unknown output format");
}

std::vector<qeuler::Rat> parse_points(const char* points) {
  std::vector<qeuler::Rat> out;
  if (points == nullptr) return out;
  std::string s(points);
  std::size_t start = 0;
  while (start <= s.size() && !s.empty()) {
    const auto comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(qeuler::Rat::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

qeu_report* wrap(qeuler::Report r) {
  auto* out = new qeu_report{std::move(r), {}};
  out->verdict = out->report.verdict();
  return out;
}

}  // namespace

extern "C" {

const char* qeu_version(void) { return "1.0.0"; }

const char* qeu_status_string(qeu_status status) {
  switch (status) {
    case QEU_OK: return "ok";
    case QEU_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QEU_ERR_NOT_DIVISIBLE: return "not divisible";
    case QEU_ERR_VERIFICATION: return "verification failure";
    case QEU_ERR_IO: return "i/o error";
    case QEU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qeu_last_error(void) { return g_last_error.c_str(); }

void qeu_string_free(char* s) { std::free(s); }

qeu_status qeu_triangle_entry(char family, int n, int k, qeu_value** out) {
  return guarded([&] {
    require(out, "out");
    const auto f = qeuler::family_from_char(family);
    if (n < qeuler::family_min_n(f)) throw std::invalid_argument("triangle row out of range");
    *out = new qeu_value{qeuler::triangle(f, n)->at(n, k)};
  });
}

qeu_status qeu_named_poly(const char* name, int n, qeu_value** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new qeu_value{qeuler::named_poly(name, n)};
  });
}

qeu_status qeu_value_parse_json(const char* json, qeu_value** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    *out = new qeu_value{qeuler::value_from_json(j)};
  });
}

qeu_kind qeu_value_kind(const qeu_value* v) {
  if (v == nullptr) return QEU_KIND_POLY;
  return static_cast<qeu_kind>(v->value.index());
}

int qeu_value_equal(const qeu_value* a, const qeu_value* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

qeu_status qeu_value_render(const qeu_value* v, qeu_format format, char** out) {
  return guarded([&] {
    require(v, "value");
    require(out, "out");
    *out = copy_string(qeuler::render_value(v->value, to_format(format)));
  });
}

qeu_status qeu_value_at_q1(const qeu_value* v, char** out) {
  return guarded([&] {
    require(v, "value");
    require(out, "out");
    std::string s;
    if (const auto* t = std::get_if<qeuler::TQPoly>(&v->value)) {
      const auto seq = qeuler::spec_q1_t(*t);
      for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + seq[i].get_str();
      if (seq.empty()) s = "0";
    } else if (const auto* p = std::get_if<qeuler::QPoly>(&v->value)) {
      s = qeuler::spec_q1(*p).get_str();
    } else {
      s = qeuler::spec_q1(std::get<qeuler::QLaurent>(v->value)).get_str();
    }
    *out = copy_string(s);
  });
}

qeu_status qeu_value_exact_div(const qeu_value* num, const qeu_value* den, qeu_value** out) {
  return guarded([&] {
    require(num, "num");
    require(den, "den");
    require(out, "out");
    if (num->value.index() != den->value.index()) {
      throw std::invalid_argument("exact_div: operands must have the same kind");
    }
    qeuler::Value quot = std::visit(
        [&](const auto& a) -> qeuler::Value {
          using T = std::decay_t<decltype(a)>;
          auto q = qeuler::exact_div(a, std::get<T>(den->value));
          if (!q) throw NotDivisible();
          return *q;
        },
        num->value);
    *out = new qeu_value{std::move(quot)};
  });
}

void qeu_value_free(qeu_value* v) { delete v; }

qeu_status qeu_table_render(char family, int max_n, int at_q1, qeu_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(qeuler::render_table(qeuler::family_from_char(family), max_n, at_q1 != 0,
                                            to_format(format)));
  });
}

qeu_status qeu_verify(const char* suite, int max_n, const char* points, qeu_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    const std::string name(suite);
    if (name != "all") (void)qeuler::default_max_n(name);  // rejects unknown suites
    std::optional<int> n;
    if (max_n >= 0) n = max_n;
    *out = wrap(qeuler::run_suite(name, n, parse_points(points)));
  });
}

qeu_status qeu_conjecture_scan(int max_n, qeu_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(qeuler::conjecture_report(max_n));
  });
}

qeu_status qeu_oeis_check(const char* sequence, int max_n, const char* fixture_path,
                          qeu_report** out) {
  return guarded([&] {
    require(sequence, "sequence");
    require(fixture_path, "fixture_path");
    require(out, "out");
    *out = wrap(qeuler::oeis_check(sequence, max_n, fixture_path));
  });
}

int qeu_report_passed(const qeu_report* r) { return r != nullptr && r->report.passed() ? 1 : 0; }

const char* qeu_report_verdict(const qeu_report* r) {
  return r == nullptr ? "" : r->verdict.c_str();
}

qeu_status qeu_report_render(const qeu_report* r, qeu_format format, int include_timing,
                             char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(qeuler::render_report(r->report, to_format(format), include_timing != 0));
  });
}

void qeu_report_free(qeu_report* r) { delete r; }

}  // extern "C"
