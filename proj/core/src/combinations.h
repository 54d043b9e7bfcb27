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

#ifndef MBCE_SRC_COMBINATIONS_H_
#define MBCE_SRC_COMBINATIONS_H_

#include <cstddef>
#include <vector>

namespace mbce::internal {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void ForEachCombination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> indices(k);
  for (std::size_t i = 0; i < k; ++i) indices[i] = i;
  for (;;) {
    visit(indices);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && indices[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++indices[i - 1];
    for (std::size_t j = i; j < k; ++j) indices[j] = indices[j - 1] + 1;
  }
}

}  // namespace mbce::internal

#endif  // MBCE_SRC_COMBINATIONS_H_
