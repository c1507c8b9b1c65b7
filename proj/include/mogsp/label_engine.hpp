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
 * @file label_engine.hpp
 * @brief Multi-objective label setting with aggregate-cost selection.
 *
 * Martins-style label setting over an arbitrary monotone cost algebra. At
 * every step the temporary label with the smallest aggregate cost becomes
 * permanent and is extended along the outgoing edges of its node. A new
 * label is dropped when a live label at the same node has equal or
 * dominating cost; otherwise it removes the temporary labels it dominates.
 *
 * Dropping equal-cost labels keeps exactly one representative per value,
 * which also makes the engine safe on zero-cost cycles.
 */

#ifndef MOGSP_LABEL_ENGINE_HPP
#define MOGSP_LABEL_ENGINE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"

namespace mogsp {

/// Label-extension rule plus the scalar used to order temporary labels.
/// `extend` must never decrease a component.
template <typename A>
concept CostAlgebra = requires(const A& algebra, const CostVector& cost, EdgeId edge) {
  { algebra.dimension() } -> std::convertible_to<std::size_t>;
  { algebra.extend(cost, edge) } -> std::same_as<CostVector>;
  { algebra.aggregate(cost) } -> std::same_as<Cost>;
};

using LabelId = std::size_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

enum class LabelState { kTemporary, kPermanent, kDeleted };

struct Label {
  CostVector cost;
  NodeId node = 0;
  LabelId predecessor = kNoLabel;
  /// Edge (predecessor node, node); unused for the source label.
  EdgeId via = 0;
  LabelState state = LabelState::kTemporary;

  bool has_predecessor() const noexcept { return predecessor != kNoLabel; }
};

struct LabelSettingOptions {
  /// Drop new labels weakly dominated by a permanent label at the target.
  bool prune_by_target = true;
  /// Extend permanent labels at the target. Never changes the target set
  /// since any continuation must close a cycle to return.
  bool expand_target = false;
};

struct LabelSettingResult {
  /// Append-only store; ids stay valid for backtracking.
  std::vector<Label> labels;
  /// Permanent labels at the target in the order they became permanent.
  std::vector<LabelId> target_labels;
  /// Every label in the order it became permanent.
  std::vector<LabelId> permanent_order;
  std::size_t labels_created = 0;
  std::size_t labels_permanent = 0;
};

/// Component sum over per-edge cost rows (edge-major, `dimension` columns).
class SumAlgebra {
 public:
  SumAlgebra(std::span<const Cost> edge_costs, std::size_t dimension) : costs_(edge_costs), dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

  CostVector extend(const CostVector& cost, EdgeId e) const {
    CostVector next = cost;
    for (std::size_t i = 0; i < dimension_; ++i) next[i] += costs_[e * dimension_ + i];
    return next;
  }

  Cost aggregate(const CostVector& cost) const { return std::accumulate(cost.begin(), cost.end(), Cost{0}); }

 private:
  std::span<const Cost> costs_;
  std::size_t dimension_;
};

template <CostAlgebra Algebra>
LabelSettingResult run_label_setting(const Graph& graph, NodeId source, NodeId target, const Algebra& algebra,
                                     const LabelSettingOptions& options = {}) {
  if (source >= graph.node_count() || target >= graph.node_count()) {
    throw Error(ErrorKind::kNodeOutOfRange, "label setting query outside the graph");
  }

  LabelSettingResult result;
  auto& labels = result.labels;
  std::vector<std::vector<LabelId>> at_node(graph.node_count());

  // (aggregate, node, id): smallest aggregate first, ties by node then age.
  using Key = std::tuple<Cost, NodeId, LabelId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> open;

  labels.push_back(Label{CostVector(algebra.dimension(), 0), source, kNoLabel, 0, LabelState::kTemporary});
  at_node[source].push_back(0);
  open.emplace(algebra.aggregate(labels[0].cost), source, 0);
  result.labels_created = 1;

  while (!open.empty()) {
    const auto [aggregate, node, id] = open.top();
    open.pop();
    if (labels[id].state != LabelState::kTemporary) continue;

    labels[id].state = LabelState::kPermanent;
    result.permanent_order.push_back(id);
    ++result.labels_permanent;
    if (node == target) {
      result.target_labels.push_back(id);
      if (!options.expand_target) continue;
    }

    for (EdgeId e : graph.out_edges(node)) {
      const NodeId head = graph.head(e);
      CostVector cost = algebra.extend(labels[id].cost, e);

      auto& bucket = at_node[head];
      const bool covered = std::any_of(bucket.begin(), bucket.end(), [&](LabelId other) {
        return weakly_dominates(labels[other].cost, cost);
      });
      if (covered) continue;
      if (options.prune_by_target && head != target) {
        const bool beaten = std::any_of(result.target_labels.begin(), result.target_labels.end(),
                                        [&](LabelId t) { return weakly_dominates(labels[t].cost, cost); });
        if (beaten) continue;
      }

      std::erase_if(bucket, [&](LabelId other) {
        if (labels[other].state == LabelState::kTemporary && dominates(cost, labels[other].cost)) {
          labels[other].state = LabelState::kDeleted;
          return true;
        }
        return false;
      });

      const LabelId fresh = labels.size();
      const Cost key = algebra.aggregate(cost);
      labels.push_back(Label{std::move(cost), head, id, e, LabelState::kTemporary});
      bucket.push_back(fresh);
      open.emplace(key, head, fresh);
      ++result.labels_created;
    }
  }
  return result;
}

/// Edge sequence represented by a label, recovered through predecessors.
inline Path backtrack(const LabelSettingResult& result, LabelId label) {
  const auto& labels = result.labels;
  if (label >= labels.size()) throw Error(ErrorKind::kInternal, "backtrack from unknown label");
  Path path;
  LabelId at = label;
  while (labels[at].has_predecessor()) {
    const LabelId previous = labels[at].predecessor;
    if (previous >= labels.size() || labels[previous].state != LabelState::kPermanent ||
        path.size() > labels.size()) {
      throw Error(ErrorKind::kInternal, "dangling predecessor reference in label store");
    }
    path.push_back(labels[at].via);
    at = previous;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace mogsp

#endif  // MOGSP_LABEL_ENGINE_HPP
