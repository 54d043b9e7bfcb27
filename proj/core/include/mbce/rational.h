// Copyright 2026 The MBCE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MBCE_RATIONAL_H_
#define MBCE_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mbce {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). Every probability and utility in the library uses it.
using Rational = mpq_class;

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Parses "p", "-p" or "p/q" (decimal integers). Throws Error(kParseError) on
// malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

// Parses a comma-separated list such as "1/2,1/2".
Vector ParseRationalList(std::string_view text);

Rational Sum(const Vector& values);
Rational Dot(const Vector& lhs, const Vector& rhs);

Matrix ZeroMatrix(std::size_t rows, std::size_t cols);

// True iff every entry is >= 0 and the entries sum to exactly one.
bool IsProbabilityVector(const Vector& values);

// Double approximation for display only; never used in a verdict.
double ToDouble(const Rational& value);

}  // namespace mbce

#endif  // MBCE_RATIONAL_H_
