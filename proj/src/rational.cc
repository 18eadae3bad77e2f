// Copyright 2026 The evflow Authors.
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

#include "evflow/rational.h"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

absl::Status Malformed(std::string_view text) {
  return absl::InvalidArgumentError(
      absl::StrCat("malformed number \"", std::string(text), "\""));
}

}  // namespace

absl::StatusOr<Rational> ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) return Malformed(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return Malformed(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return Malformed(text);
    Rational value(n, d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }

  long exponent = 0;
  if (size_t e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    int parsed = 0;
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [end, ec] = std::from_chars(exp_text.data(),
                                     exp_text.data() + exp_text.size(), parsed);
    if (ec != std::errc() || end != exp_text.data() + exp_text.size() ||
        exp_text.empty() || parsed > 4096 || parsed < -4096) {
      return Malformed(text);
    }
    exponent = parsed;
    s = s.substr(0, e);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (size_t dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return Malformed(text);
  if (!int_part.empty() && !AllDigits(int_part)) return Malformed(text);
  if (!frac_part.empty() && !AllDigits(frac_part)) return Malformed(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, exponent < 0 ? -exponent : exponent);
  Rational value = exponent < 0 ? Rational(numerator, scale)
                                : Rational(numerator * scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str();
}

std::string FormatDecimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value.get_d());
  // Trim to the shortest representation that round-trips.
  for (int precision = 1; precision <= 17; ++precision) {
    char candidate[64];
    std::snprintf(candidate, sizeof(candidate), "%.*g", precision,
                  value.get_d());
    if (std::strtod(candidate, nullptr) == value.get_d()) return candidate;
  }
  return buffer;
}

double ToDouble(const Rational& value) { return value.get_d(); }

std::optional<Rational> RationalGcd(std::span<const Rational> values) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const Rational& v : values) {
    if (sgn(v) == 0) continue;
    mpz_class n = abs(v.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            v.get_den().get_mpz_t());
  }
  if (num_gcd == 0) return std::nullopt;
  Rational g(num_gcd, den_lcm);
  g.canonicalize();
  return g;
}

}  // namespace evflow
