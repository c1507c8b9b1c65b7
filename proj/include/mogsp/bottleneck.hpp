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
 * @file bottleneck.hpp
 * @brief Bottleneck reformulation and the label setting solver built on it.
 *
 * Objective i of the uncertain problem is replaced by gamma_i + 1
 * deterministic objectives: the nominal sum and the j-th largest interval
 * length on the path for j = 1..gamma_i (zero when the path is shorter).
 * The blocks are laid out objective by objective in one cost vector.
 * Every robust efficient path is efficient for the reformulation, so the
 * target labels of a label setting run, mapped back to worst-case values
 * and filtered, give a complete robust efficient set.
 */

#ifndef MOGSP_BOTTLENECK_HPP
#define MOGSP_BOTTLENECK_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "mogsp/label_engine.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"
#include "mogsp/worst_case.hpp"

namespace mogsp {

/// Block offsets of the bottleneck cost vector. Block i spans
/// [offset(i), offset(i) + width(i)) with width(i) = depth(i) + 1.
class BottleneckLayout {
 public:
  explicit BottleneckLayout(std::vector<std::size_t> depths) : depths_(std::move(depths)) {
    offsets_.reserve(depths_.size() + 1);
    offsets_.push_back(0);
    for (std::size_t d : depths_) offsets_.push_back(offsets_.back() + d + 1);
  }

  /// Depths are the budgets, capped at the longest possible simple path.
  /// Positions past the path length are zero-padded, so the cap does not
  /// change any value.
  static BottleneckLayout for_instance(const Instance& instance) {
    const std::size_t cap = std::min(instance.edge_count(), instance.node_count() - 1);
    std::vector<std::size_t> depths;
    for (std::size_t g : instance.gammas()) depths.push_back(std::min(g, cap));
    return BottleneckLayout(std::move(depths));
  }

  std::size_t objectives() const noexcept { return depths_.size(); }
  std::size_t depth(std::size_t i) const { return depths_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t dimension() const noexcept { return offsets_.back(); }

 private:
  std::vector<std::size_t> depths_;
  std::vector<std::size_t> offsets_;
};

/// The extension operator: adds the nominal cost to each block's running
/// sum and inserts the interval length into the block's sorted top list,
/// shifting smaller entries right and dropping the last one.
inline CostVector bottleneck_extend(const BottleneckLayout& layout, const CostVector& previous,
                                    std::span<const Cost> nominal, std::span<const Cost> delta) {
  CostVector next = previous;
  for (std::size_t i = 0; i < layout.objectives(); ++i) {
    const std::size_t base = layout.offset(i);
    const std::size_t depth = layout.depth(i);
    next[base] = previous[base] + nominal[i];
    for (std::size_t j = 1; j <= depth; ++j) {
      if (delta[i] > previous[base + j]) {
        next[base + j] = delta[i];
        for (std::size_t r = j + 1; r <= depth; ++r) next[base + r] = previous[base + r - 1];
        break;
      }
    }
  }
  return next;
}

class BottleneckAlgebra {
 public:
  explicit BottleneckAlgebra(const Instance& instance)
      : instance_(instance), layout_(BottleneckLayout::for_instance(instance)) {}

  std::size_t dimension() const noexcept { return layout_.dimension(); }
  const BottleneckLayout& layout() const noexcept { return layout_; }

  CostVector extend(const CostVector& cost, EdgeId e) const {
    return bottleneck_extend(layout_, cost, instance_.nominal_row(e), instance_.delta_row(e));
  }

  Cost aggregate(const CostVector& cost) const { return std::accumulate(cost.begin(), cost.end(), Cost{0}); }

 private:
  const Instance& instance_;
  BottleneckLayout layout_;
};

/// Bottleneck objective vector of a path, by folding the extension.
inline CostVector z_la(const Instance& instance, const Path& path) {
  if (!path.empty()) validate_path(instance, path);
  const BottleneckAlgebra algebra(instance);
  CostVector cost(algebra.dimension(), 0);
  for (EdgeId e : path) cost = algebra.extend(cost, e);
  return cost;
}

/// Worst-case vector from a bottleneck vector: per block, the running sum
/// plus the stored top interval lengths.
inline CostVector bottleneck_to_worst_case(const BottleneckLayout& layout, const CostVector& z) {
  if (z.size() != layout.dimension()) throw Error(ErrorKind::kDimensionMismatch, "bottleneck vector size mismatch");
  CostVector out(layout.objectives(), 0);
  for (std::size_t i = 0; i < layout.objectives(); ++i) {
    const std::size_t base = layout.offset(i);
    out[i] = std::accumulate(z.begin() + static_cast<std::ptrdiff_t>(base),
                             z.begin() + static_cast<std::ptrdiff_t>(base + layout.depth(i) + 1), Cost{0});
  }
  return out;
}

struct LsaReport {
  Front front;
  /// Bottleneck costs of the permanent target labels before filtering.
  std::vector<CostVector> target_costs;
  std::size_t labels_created = 0;
  std::size_t labels_permanent = 0;
};

inline LsaReport solve_lsa(const Instance& instance, const LabelSettingOptions& options = {}) {
  const BottleneckAlgebra algebra(instance);
  const auto run = run_label_setting(instance.graph(), instance.source(), instance.target(), algebra, options);

  LsaReport report;
  report.labels_created = run.labels_created;
  report.labels_permanent = run.labels_permanent;
  std::vector<FrontEntry> candidates;
  for (LabelId id : run.target_labels) {
    const CostVector& z = run.labels[id].cost;
    report.target_costs.push_back(z);
    candidates.push_back(FrontEntry{backtrack(run, id), bottleneck_to_worst_case(algebra.layout(), z)});
  }
  report.front = pareto_filter(std::move(candidates));
  return report;
}

}  // namespace mogsp

#endif  // MOGSP_BOTTLENECK_HPP
