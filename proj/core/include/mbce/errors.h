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

#ifndef MBCE_ERRORS_H_
#define MBCE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbce {

enum class ErrorCode {
  kZeroPriorState,
  kNotADistribution,
  kEmptySpace,
  kDimensionMismatch,
  kStateMarginalMismatch,
  kEmptyPolytope,
  kUnsupportableAction,
  kInfeasibleFlow,
  kCoreViolation,
  kNotBayesPlausible,
  kImplementationInfeasible,
  kTooManyActionsForSubsetCheck,
  kProductTooLarge,
  kStageMarginalMismatch,
  kParseError,
  kValidationError,
  kInternalDisagreement,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by implement_marginal when the demand/core condition fails; carries
// the first violating action subset (sorted action indices).
class ImplementationInfeasibleError : public Error {
 public:
  ImplementationInfeasibleError(std::vector<std::size_t> subset,
                                const std::string& message);

  const std::vector<std::size_t>& subset() const { return subset_; }

 private:
  std::vector<std::size_t> subset_;
};

}  // namespace mbce

#endif  // MBCE_ERRORS_H_
