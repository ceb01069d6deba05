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

#include "core/catalog.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "core/special.hpp"

namespace qeuler {

Value named_poly(std::string_view name, int n) {
  auto need = [&](int lo) {
    if (n < lo) {
      throw std::invalid_argument("poly " + std::string(name) + ": n must be >= " +
                                  std::to_string(lo));
    }
  };
  if (name == "A") {
    need(1);
    return carlitz_poly(n);
  }
  if (name == "B") {
    need(0);
    return typeB_poly(n);
  }
  if (name == "T") {
    need(0);
    return q_tangent(n);
  }
  if (name == "dn") {
    need(1);
    return d_poly(n);
  }
  if (name == "Estar") {
    need(0);
    return e_star(n);
  }
  if (name == "Gstar") {
    need(0);
    return g_star(n);
  }
  if (name == "Eq") {
    need(0);
    const QLaurent e = e_q_secant(n);
    if (auto p = e.to_poly()) return *p;
    return e;
  }
  if (name == "central") {
    need(0);
    return b_central(n);
  }
  throw std::invalid_argument("unknown polynomial name \"" + std::string(name) + "\"");
}

namespace {

void csv_laurent_rows(std::ostringstream& os, const std::string& prefix, const QLaurent& c) {
  const auto cs = c.base().coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    os << prefix << c.offset() + static_cast<long>(i) << ',' << cs[i].get_str() << '\n';
  }
}

}  // namespace

std::string render_value(const Value& v, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Text:
      os << to_text(v) << '\n';
      break;
    case OutputFormat::Json:
      os << to_json(v).dump() << '\n';
      break;
    case OutputFormat::Csv:
      if (const auto* t = std::get_if<TQPoly>(&v)) {
        os << "tdeg,exponent,coeff\n";
        const auto terms = t->terms();
        for (std::size_t d = 0; d < terms.size(); ++d) {
          csv_laurent_rows(os, std::to_string(d) + ",", terms[d]);
        }
      } else {
        os << "exponent,coeff\n";
        const QLaurent l = std::holds_alternative<QPoly>(v) ? QLaurent(std::get<QPoly>(v))
                                                             : std::get<QLaurent>(v);
        csv_laurent_rows(os, "", l);
      }
      break;
  }
  return os.str();
}

std::string render_table(Family family, int max_n, bool at_q1, OutputFormat format) {
  if (max_n < 1) throw std::invalid_argument("table: max_n must be >= 1");
  const auto tri = triangle(family, max_n);
  const char fam = family_char(family);
  const int first = tri->min_n();
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Text:
      if (at_q1) {
        os << "n\\k";
        for (int k = tri->kmin(max_n); k <= tri->kmax(max_n); ++k) os << '\t' << k;
        os << '\n';
        for (int n = first; n <= max_n; ++n) {
          os << n;
          for (const auto& p : tri->row(n)) os << '\t' << p.at_one().get_str();
          os << '\n';
        }
      } else {
        for (int n = first; n <= max_n; ++n) {
          for (int k = tri->kmin(n); k <= tri->kmax(n); ++k) {
            os << fam << '[' << n << ',' << k << "] = " << to_text(tri->at(n, k)) << '\n';
          }
        }
      }
      break;
    case OutputFormat::Csv:
      os << "family,n,k,value\n";
      for (int n = first; n <= max_n; ++n) {
        for (int k = tri->kmin(n); k <= tri->kmax(n); ++k) {
          const QPoly& p = tri->at(n, k);
          os << fam << ',' << n << ',' << k << ','
             << (at_q1 ? p.at_one().get_str() : to_text(p)) << '\n';
        }
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["family"] = std::string(1, fam);
      j["at_q1"] = at_q1;
      auto rows = nlohmann::ordered_json::array();
      for (int n = first; n <= max_n; ++n) {
        auto entries = nlohmann::ordered_json::array();
        for (int k = tri->kmin(n); k <= tri->kmax(n); ++k) {
          const QPoly& p = tri->at(n, k);
          nlohmann::ordered_json e;
          e["k"] = k;
          if (at_q1) {
            e["value"] = p.at_one().get_str();
          } else {
            e["value"] = to_json(p);
          }
          entries.push_back(std::move(e));
        }
        rows.push_back({{"n", n}, {"entries", std::move(entries)}});
      }
      j["rows"] = std::move(rows);
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace qeuler
