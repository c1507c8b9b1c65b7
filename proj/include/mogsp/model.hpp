// Copyright 2026 The mogsp Authors
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

/**
 * @file model.hpp
 * @brief Graph and uncertain-cost instance model.
 *
 * An Instance is a directed graph whose edges carry, per objective, a
 * nominal cost and a non-negative interval length. Each objective has a
 * budget gamma: in any scenario at most gamma edges of that objective
 * deviate from their nominal cost, up to the full interval length.
 *
 * Both types validate on construction and are immutable afterwards.
 */

#ifndef MOGSP_MODEL_HPP
#define MOGSP_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mogsp/error.hpp"

namespace mogsp {

using Cost = std::int64_t;
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// k-dimensional objective vector.
using CostVector = std::vector<Cost>;

/// Ordered list of edge ids forming an s-t walk.
using Path = std::vector<EdgeId>;

struct Arc {
  NodeId tail;
  NodeId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Throws Error on an empty node set, out-of-range endpoints, self-loops
  /// or parallel edges. Edge ids are positions in `arcs`.
  Graph(std::size_t node_count, std::vector<Arc> arcs) : node_count_(node_count), arcs_(std::move(arcs)) {
    if (node_count_ == 0) throw Error(ErrorKind::kEmptyGraph, "graph needs at least one node");
    std::vector<std::pair<NodeId, NodeId>> seen;
    seen.reserve(arcs_.size());
    for (std::size_t e = 0; e < arcs_.size(); ++e) {
      const Arc& a = arcs_[e];
      if (a.tail >= node_count_ || a.head >= node_count_) {
        throw Error(ErrorKind::kNodeOutOfRange, "edge " + std::to_string(e) + " references node outside [0, " +
                                                    std::to_string(node_count_) + ")");
      }
      if (a.tail == a.head) {
        throw Error(ErrorKind::kSelfLoop, "edge " + std::to_string(e) + " is a self-loop at node " +
                                              std::to_string(a.tail));
      }
      seen.emplace_back(a.tail, a.head);
    }
    std::sort(seen.begin(), seen.end());
    if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end()) {
      throw Error(ErrorKind::kDuplicateEdge, "parallel edge " + std::to_string(it->first) + " -> " +
                                                 std::to_string(it->second));
    }

    offsets_.assign(node_count_ + 1, 0);
    for (const Arc& a : arcs_) ++offsets_[a.tail + 1];
    for (std::size_t v = 0; v < node_count_; ++v) offsets_[v + 1] += offsets_[v];
    out_.resize(arcs_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t e = 0; e < arcs_.size(); ++e) out_[fill[arcs_[e].tail]++] = static_cast<EdgeId>(e);
  }

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return arcs_.size(); }
  const Arc& arc(EdgeId e) const { return arcs_.at(e); }
  NodeId tail(EdgeId e) const { return arcs_.at(e).tail; }
  NodeId head(EdgeId e) const { return arcs_.at(e).head; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Outgoing edges of v in increasing edge-id order.
  std::span<const EdgeId> out_edges(NodeId v) const {
    return std::span<const EdgeId>(out_).subspan(offsets_.at(v), offsets_.at(v + 1) - offsets_[v]);
  }

  std::optional<EdgeId> find_edge(NodeId tail, NodeId head) const {
    for (EdgeId e : out_edges(tail)) {
      if (arcs_[e].head == head) return e;
    }
    return std::nullopt;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> out_;
};

/// Uncertain multi-objective shortest-path instance. Costs are stored
/// edge-major: value for edge e and objective i lives at e * k + i.
class Instance {
 public:
  Instance() = default;

  Instance(Graph graph, std::size_t objectives, std::vector<Cost> nominal, std::vector<Cost> delta,
           std::vector<std::size_t> gamma, NodeId source, NodeId target)
      : graph_(std::move(graph)),
        k_(objectives),
        nominal_(std::move(nominal)),
        delta_(std::move(delta)),
        gamma_(std::move(gamma)),
        source_(source),
        target_(target) {
    validate();
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t objectives() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  std::size_t node_count() const noexcept { return graph_.node_count(); }
  NodeId source() const noexcept { return source_; }
  NodeId target() const noexcept { return target_; }

  Cost nominal(EdgeId e, std::size_t i) const { return nominal_[e * k_ + i]; }
  Cost delta(EdgeId e, std::size_t i) const { return delta_[e * k_ + i]; }
  std::size_t gamma(std::size_t i) const { return gamma_.at(i); }
  std::span<const std::size_t> gammas() const noexcept { return gamma_; }
  std::span<const Cost> nominal_row(EdgeId e) const { return std::span<const Cost>(nominal_).subspan(e * k_, k_); }
  std::span<const Cost> delta_row(EdgeId e) const { return std::span<const Cost>(delta_).subspan(e * k_, k_); }
  std::span<const Cost> nominal_matrix() const noexcept { return nominal_; }
  std::span<const Cost> delta_matrix() const noexcept { return delta_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.k_ == b.k_ && a.nominal_ == b.nominal_ && a.delta_ == b.delta_ &&
           a.gamma_ == b.gamma_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  void validate() const {
    if (k_ == 0) throw Error(ErrorKind::kDimensionMismatch, "instance needs at least one objective");
    const std::size_t m = graph_.edge_count();
    if (nominal_.size() != m * k_ || delta_.size() != m * k_) {
      throw Error(ErrorKind::kDimensionMismatch, "cost matrices must hold |E| * k entries");
    }
    if (gamma_.size() != k_) throw Error(ErrorKind::kDimensionMismatch, "gamma must have k entries");
    const std::size_t n = graph_.node_count();
    if (source_ >= n || target_ >= n) throw Error(ErrorKind::kNodeOutOfRange, "query node outside the graph");
    if (source_ == target_) throw Error(ErrorKind::kDegenerateQuery, "source and target must differ");
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t i = 0; i < k_; ++i) {
        if (nominal_[e * k_ + i] < 0) {
          throw Error(ErrorKind::kNegativeNominal,
                      "edge " + std::to_string(e) + " objective " + std::to_string(i + 1) +
                          " has negative nominal cost; edge costs must be conservative (no cycle may have "
                          "negative cost in any scenario) and are required to be non-negative");
        }
        if (delta_[e * k_ + i] < 0) {
          throw Error(ErrorKind::kNegativeDelta, "edge " + std::to_string(e) + " objective " +
                                                     std::to_string(i + 1) +
                                                     " has negative interval length; lengths must be >= 0");
        }
      }
    }
    for (std::size_t i = 0; i < k_; ++i) {
      if (gamma_[i] > m) {
        throw Error(ErrorKind::kGammaOutOfRange, "gamma_" + std::to_string(i + 1) + " = " +
                                                     std::to_string(gamma_[i]) + " exceeds |E| = " +
                                                     std::to_string(m));
      }
    }
  }

  Graph graph_;
  std::size_t k_ = 0;
  std::vector<Cost> nominal_;
  std::vector<Cost> delta_;
  std::vector<std::size_t> gamma_;
  NodeId source_ = 0;
  NodeId target_ = 0;
};

/// Copy of `instance` with different budgets.
inline Instance with_gamma(const Instance& instance, std::vector<std::size_t> gamma) {
  const auto nominal = instance.nominal_matrix();
  const auto delta = instance.delta_matrix();
  return Instance(instance.graph(), instance.objectives(), {nominal.begin(), nominal.end()}, {delta.begin(), delta.end()},
                  std::move(gamma), instance.source(), instance.target());
}

/// Throws Error(kInvalidPath) unless `path` is a simple source-target path.
inline void validate_path(const Instance& instance, const Path& path) {
  const Graph& g = instance.graph();
  if (path.empty()) throw Error(ErrorKind::kInvalidPath, "empty path cannot join distinct source and target");
  std::vector<char> visited(g.node_count(), 0);
  NodeId at = instance.source();
  visited[at] = 1;
  for (EdgeId e : path) {
    if (e >= g.edge_count()) throw Error(ErrorKind::kInvalidPath, "edge id " + std::to_string(e) + " out of range");
    if (g.tail(e) != at) throw Error(ErrorKind::kInvalidPath, "edge " + std::to_string(e) + " does not continue the path");
    at = g.head(e);
    if (visited[at]) throw Error(ErrorKind::kInvalidPath, "path revisits node " + std::to_string(at));
    visited[at] = 1;
  }
  if (at != instance.target()) throw Error(ErrorKind::kInvalidPath, "path does not end at the target");
}

/// Node sequence source, ..., target of an already validated path.
inline std::vector<NodeId> path_nodes(const Graph& graph, NodeId source, const Path& path) {
  std::vector<NodeId> nodes{source};
  for (EdgeId e : path) nodes.push_back(graph.head(e));
  return nodes;
}

}  // namespace mogsp

#endif  // MOGSP_MODEL_HPP
