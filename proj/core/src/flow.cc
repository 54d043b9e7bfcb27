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

#include "mbce/flow.h"

#include <deque>
#include <limits>

#include "mbce/errors.h"

namespace mbce {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Arc {
  std::size_t to;
  std::size_t reverse;
  Rational residual;
};

class ResidualGraph {
 public:
  explicit ResidualGraph(std::size_t nodes) : adjacency_(nodes) {}

  // Returns (node, arc index) of the forward arc.
  std::pair<std::size_t, std::size_t> AddArc(std::size_t from, std::size_t to,
                                             Rational capacity) {
    adjacency_[from].push_back({to, adjacency_[to].size(), std::move(capacity)});
    adjacency_[to].push_back({from, adjacency_[from].size() - 1, Rational(0)});
    return {from, adjacency_[from].size() - 1};
  }

  Rational MaxFlow(std::size_t source, std::size_t sink) {
    Rational total = 0;
    const std::size_t n = adjacency_.size();
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> parent(n, {kNone, kNone});
      std::deque<std::size_t> queue{source};
      parent[source] = {source, kNone};
      while (!queue.empty() && parent[sink].first == kNone) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < adjacency_[u].size(); ++i) {
          const Arc& arc = adjacency_[u][i];
          if (sgn(arc.residual) <= 0 || parent[arc.to].first != kNone) continue;
          parent[arc.to] = {u, i};
          queue.push_back(arc.to);
        }
      }
      if (parent[sink].first == kNone) return total;

      Rational bottleneck;
      bool first = true;
      for (std::size_t v = sink; v != source; v = parent[v].first) {
        const Arc& arc = adjacency_[parent[v].first][parent[v].second];
        if (first || arc.residual < bottleneck) bottleneck = arc.residual;
        first = false;
      }
      for (std::size_t v = sink; v != source; v = parent[v].first) {
        Arc& arc = adjacency_[parent[v].first][parent[v].second];
        arc.residual -= bottleneck;
        adjacency_[arc.to][arc.reverse].residual += bottleneck;
      }
      total += bottleneck;
    }
  }

  const Arc& arc(std::size_t node, std::size_t index) const {
    return adjacency_[node][index];
  }

 private:
  std::vector<std::vector<Arc>> adjacency_;
};

}  // namespace

std::size_t FlowNetwork::AddNode(std::string label, Rational balance) {
  nodes_.push_back({std::move(label), std::move(balance)});
  return nodes_.size() - 1;
}

std::size_t FlowNetwork::AddEdge(std::size_t from, std::size_t to,
                                 std::optional<Rational> capacity) {
  if (from >= nodes_.size() || to >= nodes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "edge endpoint out of range");
  }
  if (capacity && sgn(*capacity) < 0) {
    throw Error(ErrorCode::kValidationError, "negative edge capacity");
  }
  edges_.push_back({from, to, std::move(capacity)});
  return edges_.size() - 1;
}

Rational FlowNetwork::TotalSupply() const {
  Rational total = 0;
  for (const auto& node : nodes_) {
    if (sgn(node.balance) < 0) total -= node.balance;
  }
  return total;
}

Rational FlowNetwork::TotalDemand() const {
  Rational total = 0;
  for (const auto& node : nodes_) {
    if (sgn(node.balance) > 0) total += node.balance;
  }
  return total;
}

FlowResult MaxFlowFeasible(const FlowNetwork& network) {
  const std::size_t n = network.nodes().size();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  const Rational cap_for_unbounded = network.TotalSupply();

  ResidualGraph graph(n + 2);
  std::vector<std::pair<std::size_t, std::size_t>> edge_arcs;
  edge_arcs.reserve(network.edges().size());
  for (const auto& edge : network.edges()) {
    edge_arcs.push_back(graph.AddArc(
        edge.from, edge.to, edge.capacity ? *edge.capacity : cap_for_unbounded));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Rational& balance = network.nodes()[v].balance;
    if (sgn(balance) < 0) graph.AddArc(source, v, -balance);
    if (sgn(balance) > 0) graph.AddArc(v, sink, balance);
  }

  FlowResult result;
  result.delivered = graph.MaxFlow(source, sink);
  result.feasible = result.delivered == network.TotalDemand();
  if (result.feasible) {
    Vector flow;
    flow.reserve(edge_arcs.size());
    for (std::size_t e = 0; e < edge_arcs.size(); ++e) {
      const Arc& arc = graph.arc(edge_arcs[e].first, edge_arcs[e].second);
      // Flow on the forward arc equals the residual of its reverse arc.
      flow.push_back(graph.arc(arc.to, arc.reverse).residual);
    }
    result.flow = std::move(flow);
  }
  return result;
}

}  // namespace mbce
