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

#include "mbce/rational.h"

#include <cctype>

#include "mbce/errors.h"

namespace mbce {

namespace {

bool IsDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroPriorState: return "ZeroPriorState";
    case ErrorCode::kNotADistribution: return "NotADistribution";
    case ErrorCode::kEmptySpace: return "EmptySpace";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kStateMarginalMismatch: return "StateMarginalMismatch";
    case ErrorCode::kEmptyPolytope: return "EmptyPolytope";
    case ErrorCode::kUnsupportableAction: return "UnsupportableAction";
    case ErrorCode::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorCode::kCoreViolation: return "CoreViolation";
    case ErrorCode::kNotBayesPlausible: return "NotBayesPlausible";
    case ErrorCode::kImplementationInfeasible: return "ImplementationInfeasible";
    case ErrorCode::kTooManyActionsForSubsetCheck:
      return "TooManyActionsForSubsetCheck";
    case ErrorCode::kProductTooLarge: return "ProductTooLarge";
    case ErrorCode::kStageMarginalMismatch: return "StageMarginalMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kInternalDisagreement: return "InternalDisagreement";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

ImplementationInfeasibleError::ImplementationInfeasibleError(
    std::vector<std::size_t> subset, const std::string& message)
    : Error(ErrorCode::kImplementationInfeasible, message),
      subset_(std::move(subset)) {}

Rational ParseRational(std::string_view text) {
  const std::string_view trimmed = Trim(text);
  std::string_view body = trimmed;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    throw Error(ErrorCode::kParseError,
                "not a rational: \"" + std::string(trimmed) + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in \"" + std::string(trimmed) + "\"");
  }
  if (negative) num = -num;
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

Vector ParseRationalList(std::string_view text) {
  Vector values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    values.push_back(ParseRational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

Rational Sum(const Vector& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

Rational Dot(const Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product of unequal sizes");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) total += lhs[i] * rhs[i];
  return total;
}

Matrix ZeroMatrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, Vector(cols, Rational(0)));
}

bool IsProbabilityVector(const Vector& values) {
  if (values.empty()) return false;
  for (const auto& v : values) {
    if (sgn(v) < 0) return false;
  }
  return Sum(values) == 1;
}

double ToDouble(const Rational& value) { return value.get_d(); }

}  // namespace mbce
