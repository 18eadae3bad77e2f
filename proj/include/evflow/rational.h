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

#ifndef EVFLOW_RATIONAL_H_
#define EVFLOW_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace evflow {

// Exact rational number. All battery, time, price and flow quantities are
// carried as Rationals; floating point only appears inside the LP solver's
// float mode.
using Rational = mpq_class;

// A cost that may be +infinity (std::nullopt). Used for per-unit charging
// costs at zero-speed intervals.
using ExtendedCost = std::optional<Rational>;

// Parses "12", "-0.75", "1.5e3" or "7/4" exactly.
absl::StatusOr<Rational> ParseRational(std::string_view text);

// Canonical text: "4", "-3", "21/2".
std::string FormatRational(const Rational& value);

// Shortest decimal rendering of the nearest double, for float-mode output.
std::string FormatDecimal(const Rational& value);

double ToDouble(const Rational& value);

// Largest positive g such that every nonzero value is an integer multiple of
// g. Returns std::nullopt when all values are zero.
std::optional<Rational> RationalGcd(std::span<const Rational> values);

inline bool IsZero(const Rational& value) { return sgn(value) == 0; }

}  // namespace evflow

#endif  // EVFLOW_RATIONAL_H_
