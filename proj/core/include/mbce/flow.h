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

#ifndef MBCE_FLOW_H_
#define MBCE_FLOW_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbce/rational.h"

namespace mbce {

// Supply/demand network. A node's balance is negative for supply and
// positive for demand; edges carry an optional capacity (nullopt means
// unbounded).
class FlowNetwork {
 public:
  struct Node {
    std::string label;
    Rational balance;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::optional<Rational> capacity;
  };

  std::size_t AddNode(std::string label, Rational balance);
  std::size_t AddEdge(std::size_t from, std::size_t to,
                      std::optional<Rational> capacity = std::nullopt);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Rational TotalSupply() const;
  Rational TotalDemand() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

struct FlowResult {
  bool feasible = false;
  // Total flow delivered to demand nodes by the maximum flow.
  Rational delivered;
  // Flow per network edge; present only when every demand is met.
  std::optional<Vector> flow;
};

// Shortest-augmenting-path maximum flow from all supplies to all demands in
// exact arithmetic. Unbounded edges are capped at the total supply, which no
// flow can exceed. Feasible iff every demand is met.
FlowResult MaxFlowFeasible(const FlowNetwork& network);

}  // namespace mbce

#endif  // MBCE_FLOW_H_
