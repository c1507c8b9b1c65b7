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

#ifndef MOGSP_WORST_CASE_HPP
#define MOGSP_WORST_CASE_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "mogsp/model.hpp"

namespace mogsp {

/// Componentwise nominal cost of a path.
inline CostVector nominal_cost(const Instance& instance, const Path& path) {
  CostVector sum(instance.objectives(), 0);
  for (EdgeId e : path) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += instance.nominal(e, i);
  }
  return sum;
}

/// Exact per-objective worst case under the cardinality budget: nominal sum
/// plus the min(|path|, gamma_i) largest interval lengths on the path.
inline CostVector worst_case_cost(const Instance& instance, const Path& path) {
  validate_path(instance, path);
  CostVector result = nominal_cost(instance, path);
  std::vector<Cost> lengths(path.size());
  for (std::size_t i = 0; i < result.size(); ++i) {
    std::transform(path.begin(), path.end(), lengths.begin(), [&](EdgeId e) { return instance.delta(e, i); });
    const std::size_t take = std::min(lengths.size(), instance.gamma(i));
    std::partial_sort(lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(take), lengths.end(),
                      std::greater<>());
    for (std::size_t j = 0; j < take; ++j) result[i] += lengths[j];
  }
  return result;
}

/// True iff every nominal cost and interval length is non-negative, which
/// makes every cycle non-negative in every scenario. A validated Instance
/// always satisfies this; the raw-matrix overload lets callers test data
/// before construction.
inline bool is_conservative(std::span<const Cost> nominal, std::span<const Cost> delta) {
  auto non_negative = [](Cost c) { return c >= 0; };
  return std::all_of(nominal.begin(), nominal.end(), non_negative) &&
         std::all_of(delta.begin(), delta.end(), non_negative);
}

inline bool is_conservative(const Instance& instance) {
  return is_conservative(instance.nominal_matrix(), instance.delta_matrix());
}

}  // namespace mogsp

#endif  // MOGSP_WORST_CASE_HPP
