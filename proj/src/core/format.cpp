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

#include "core/format.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qeuler {

namespace {

struct Term {
  BigInt coeff;  // nonzero
  long exponent;
};

std::vector<Term> terms_of(const QLaurent& p) {
  std::vector<Term> out;
  const auto c = p.base().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.push_back({c[i], p.offset() + static_cast<long>(i)});
  }
  return out;
}

// Unsigned rendering of |coeff| * q^exponent.
std::string monomial_text(const BigInt& abs_coeff, long exponent) {
  std::string q;
  if (exponent == 1) {
    q = "q";
  } else if (exponent != 0) {
    q = "q^" + std::to_string(exponent);
  }
  if (q.empty()) return abs_coeff.get_str();
  return abs_coeff == 1 ? q : abs_coeff.get_str() + q;
}

std::string laurent_text(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_of(p)) {
    const bool neg = sgn(t.coeff) < 0;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += monomial_text(abs(t.coeff), t.exponent);
    first = false;
  }
  return out;
}

std::vector<std::string> coeff_strings(const QPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

QPoly coeffs_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("\"coeffs\" must be an array");
  std::vector<BigInt> v;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    const auto s = c.get<std::string>();
    BigInt b;
    if (s.empty() || b.set_str(s, 10) != 0) {
      throw std::invalid_argument("malformed coefficient \"" + s + "\"");
    }
    v.push_back(std::move(b));
  }
  return QPoly(std::move(v));
}

void expect_kind(const nlohmann::json& j, const char* kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) {
    throw std::invalid_argument(std::string("expected a JSON object of kind \"") + kind + "\"");
  }
}

QLaurent laurent_from_json(const nlohmann::json& j) {
  expect_kind(j, "laurent");
  if (!j.contains("offset") || !j.at("offset").is_number_integer()) {
    throw std::invalid_argument("laurent value needs an integer \"offset\"");
  }
  return QLaurent(coeffs_from_json(j.at("coeffs")), j.at("offset").get<long>());
}

}  // namespace

std::string to_text(const QPoly& p) { return laurent_text(QLaurent(p)); }

std::string to_text(const QLaurent& p) { return laurent_text(p); }

std::string to_text(const TQPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto terms = p.terms();
  for (std::size_t d = 0; d < terms.size(); ++d) {
    const QLaurent& c = terms[d];
    if (c.is_zero()) continue;
    const std::string t = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    const auto parts = terms_of(c);
    std::string body;
    bool neg = false;
    if (parts.size() == 1) {
      neg = sgn(parts[0].coeff) < 0;
      const std::string m = monomial_text(abs(parts[0].coeff), parts[0].exponent);
      if (t.empty()) {
        body = m;
      } else {
        body = m == "1" ? t : m + "*" + t;
      }
    } else {
      body = "(" + laurent_text(c) + ")" + (t.empty() ? "" : "*" + t);
    }
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

std::string to_text(const Value& v) {
  return std::visit([](const auto& x) { return to_text(x); }, v);
}

nlohmann::ordered_json to_json(const QPoly& p) {
  nlohmann::ordered_json j;
  j["kind"] = "poly";
  j["var"] = "q";
  j["coeffs"] = coeff_strings(p);
  return j;
}

nlohmann::ordered_json to_json(const QLaurent& p) {
  nlohmann::ordered_json j;
  j["kind"] = "laurent";
  j["var"] = "q";
  j["offset"] = p.offset();
  j["coeffs"] = coeff_strings(p.base());
  return j;
}

nlohmann::ordered_json to_json(const TQPoly& p) {
  nlohmann::ordered_json j;
  j["kind"] = "bivar";
  auto terms = nlohmann::ordered_json::array();
  const auto ts = p.terms();
  for (std::size_t d = 0; d < ts.size(); ++d) {
    if (ts[d].is_zero()) continue;
    nlohmann::ordered_json t;
    t["tdeg"] = d;
    t["coeff"] = to_json(ts[d]);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Value value_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("value JSON must be an object with a \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "poly") {
    if (!j.contains("coeffs")) throw std::invalid_argument("poly value needs \"coeffs\"");
    return coeffs_from_json(j.at("coeffs"));
  }
  if (kind == "laurent") return laurent_from_json(j);
  if (kind == "bivar") {
    if (!j.contains("terms") || !j.at("terms").is_array()) {
      throw std::invalid_argument("bivar value needs a \"terms\" array");
    }
    std::vector<QLaurent> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_object() || !t.contains("tdeg") || !t.at("tdeg").is_number_unsigned() ||
          !t.contains("coeff")) {
        throw std::invalid_argument("bivar term needs \"tdeg\" and \"coeff\"");
      }
      const auto d = t.at("tdeg").get<std::size_t>();
      if (terms.size() <= d) terms.resize(d + 1);
      terms[d] += laurent_from_json(t.at("coeff"));
    }
    return TQPoly(std::move(terms));
  }
  throw std::invalid_argument("unknown value kind \"" + kind + "\"");
}

}  // namespace qeuler
