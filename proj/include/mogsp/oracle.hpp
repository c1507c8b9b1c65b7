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
 * @file oracle.hpp
 * @brief Brute-force reference solutions for small instances.
 *
 * Enumerates every simple source-target path, evaluates its exact worst
 * case and filters. Budgets are hard limits: exceeding one throws instead
 * of returning a partial answer.
 */

#ifndef MOGSP_ORACLE_HPP
#define MOGSP_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"
#include "mogsp/worst_case.hpp"

namespace mogsp {

struct EnumerationBudget {
  std::size_t max_paths = 1'000'000;
  std::size_t max_nodes = 16;

  /// Defaults overridden by MOGSP_ORACLE_MAX_PATHS / MOGSP_ORACLE_MAX_NODES.
  static EnumerationBudget from_env() {
    EnumerationBudget budget;
    auto read = [](const char* name, std::size_t& target) {
      if (const char* raw = std::getenv(name)) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0) {
          throw Error(ErrorKind::kUsage, std::string(name) + " must be a positive integer");
        }
        target = static_cast<std::size_t>(value);
      }
    };
    read("MOGSP_ORACLE_MAX_PATHS", budget.max_paths);
    read("MOGSP_ORACLE_MAX_NODES", budget.max_nodes);
    return budget;
  }
};

/// All simple s-t paths in depth-first order, outgoing edges by id.
inline std::vector<Path> enumerate_simple_paths(const Graph& graph, NodeId source, NodeId target,
                                                const EnumerationBudget& budget) {
  if (budget.max_paths == 0 || budget.max_nodes == 0) throw Error(ErrorKind::kUsage, "enumeration budget must be positive");
  if (graph.node_count() > budget.max_nodes) {
    throw Error(ErrorKind::kBudgetExceeded, "graph has " + std::to_string(graph.node_count()) +
                                                " nodes, oracle limit is " + std::to_string(budget.max_nodes));
  }
  if (source >= graph.node_count() || target >= graph.node_count()) {
    throw Error(ErrorKind::kNodeOutOfRange, "query outside the graph");
  }

  std::vector<Path> paths;
  std::vector<char> on_path(graph.node_count(), 0);
  Path current;
  auto dfs = [&](auto&& self, NodeId v) -> void {
    if (v == target) {
      if (paths.size() == budget.max_paths) {
        throw Error(ErrorKind::kBudgetExceeded, "more than " + std::to_string(budget.max_paths) + " simple paths");
      }
      paths.push_back(current);
      return;
    }
    on_path[v] = 1;
    for (EdgeId e : graph.out_edges(v)) {
      const NodeId w = graph.head(e);
      if (on_path[w]) continue;
      current.push_back(e);
      self(self, w);
      current.pop_back();
    }
    on_path[v] = 0;
  };
  dfs(dfs, source);
  return paths;
}

inline Front oracle_front(const Instance& instance, const EnumerationBudget& budget = {}) {
  std::vector<FrontEntry> candidates;
  for (auto& path : enumerate_simple_paths(instance.graph(), instance.source(), instance.target(), budget)) {
    CostVector cost = worst_case_cost(instance, path);
    candidates.push_back(FrontEntry{std::move(path), std::move(cost)});
  }
  return pareto_filter(std::move(candidates));
}

/// Largest per-objective cost over explicit scenarios. For each objective
/// every deviation subset of size <= gamma is tried when the path has at
/// most `full_enumeration_limit` edges; otherwise `samples` random subsets
/// of size min(gamma, |path|) are drawn. The result never exceeds
/// worst_case_cost and matches it under full enumeration.
inline CostVector scenario_check(const Instance& instance, const Path& path, std::size_t samples,
                                 std::uint64_t seed = 0, std::size_t full_enumeration_limit = 16) {
  validate_path(instance, path);
  const CostVector nominal = nominal_cost(instance, path);
  CostVector best = nominal;
  const std::size_t n = path.size();
  std::mt19937_64 rng(seed);

  for (std::size_t i = 0; i < instance.objectives(); ++i) {
    const std::size_t gamma = instance.gamma(i);
    if (n <= full_enumeration_limit) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > gamma) continue;
        Cost value = nominal[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (mask >> j & 1U) value += instance.delta(path[j], i);
        }
        best[i] = std::max(best[i], value);
      }
    } else {
      std::vector<std::size_t> positions(n);
      for (std::size_t s = 0; s < samples; ++s) {
        std::iota(positions.begin(), positions.end(), std::size_t{0});
        std::shuffle(positions.begin(), positions.end(), rng);
        Cost value = nominal[i];
        for (std::size_t j = 0; j < std::min(gamma, n); ++j) value += instance.delta(path[positions[j]], i);
        best[i] = std::max(best[i], value);
      }
    }
  }
  return best;
}

}  // namespace mogsp

#endif  // MOGSP_ORACLE_HPP
