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

#ifndef MOGSP_PARETO_HPP
#define MOGSP_PARETO_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/model.hpp"

namespace mogsp {

namespace detail {

inline void require_same_dimension(std::span<const Cost> a, std::span<const Cost> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "cost vectors of dimension " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " are not comparable");
  }
}

}  // namespace detail

/// a <= b componentwise, equality allowed.
inline bool weakly_dominates(std::span<const Cost> a, std::span<const Cost> b) {
  detail::require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// a <= b componentwise and a != b.
inline bool dominates(std::span<const Cost> a, std::span<const Cost> b) {
  detail::require_same_dimension(a, b);
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    strict = strict || a[i] < b[i];
  }
  return strict;
}

struct FrontEntry {
  Path path;
  CostVector cost;

  friend bool operator==(const FrontEntry&, const FrontEntry&) = default;
};

/// Complete set: pairwise non-dominated, one representative per value.
using Front = std::vector<FrontEntry>;

/// Keeps one representative per non-dominated cost vector. Among equal
/// vectors the earliest candidate in input order survives. Output is sorted
/// lexicographically by cost.
inline Front pareto_filter(std::vector<FrontEntry> candidates) {
  Front kept;
  for (auto& candidate : candidates) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](const FrontEntry& k) {
      return weakly_dominates(k.cost, candidate.cost);
    });
    if (covered) continue;
    std::erase_if(kept, [&](const FrontEntry& k) { return dominates(candidate.cost, k.cost); });
    kept.push_back(std::move(candidate));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const FrontEntry& a, const FrontEntry& b) { return a.cost < b.cost; });
  return kept;
}

/// Sorted cost vectors of a front; the comparison key for cross-solver checks.
inline std::vector<CostVector> value_set(const Front& front) {
  std::vector<CostVector> values;
  values.reserve(front.size());
  for (const auto& entry : front) values.push_back(entry.cost);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace mogsp

#endif  // MOGSP_PARETO_HPP
