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
 * @file dsa.hpp
 * @brief Deterministic subproblems algorithm for budgeted interval costs.
 *
 * For objective i sort the edges by interval length descending, giving
 * thresholds t_1 >= t_2 >= ... >= t_|E| >= t_{|E|+1} = 0. For an index l
 * the deterministic subproblem charges every edge among the first l - 1 its
 * nominal cost plus (delta - t_l) and every other edge its nominal cost; its
 * objective value is that sum plus gamma_i * t_l. This bound never
 * underestimates the worst case of a path and is exact for at least one l,
 * so solving the subproblems over a grid of indices and filtering the
 * union of their solutions by worst-case value yields a complete robust
 * efficient set.
 *
 * Objectives that admit one common sort order and share a budget form a
 * class and move through the grid together; with a single class (always
 * the case for k = 1) the grid is one-dimensional. Index sets are reduced
 * by starting at gamma + 1, collapsing runs of equal interval lengths and
 * taking every second index plus the sentinel |E| + 1. Solution checking
 * reuses the previous complete set whenever none of its paths touches an
 * edge whose cost changed between the two grid points.
 */

#ifndef MOGSP_DSA_HPP
#define MOGSP_DSA_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/label_engine.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"
#include "mogsp/worst_case.hpp"

namespace mogsp {

// ---------------------------------------------------------------------------
// Element orders
// ---------------------------------------------------------------------------

/// Edges sorted so that every listed objective's interval length is
/// non-increasing, ties broken by edge id; nullopt if no such order exists.
/// Sorting rows lexicographically finds the order whenever one exists,
/// because any common order must agree with the componentwise comparison
/// of rows.
inline std::optional<std::vector<EdgeId>> common_order(const Instance& instance,
                                                       std::span<const std::size_t> objectives) {
  std::vector<EdgeId> order(instance.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    for (std::size_t i : objectives) {
      if (instance.delta(a, i) != instance.delta(b, i)) return instance.delta(a, i) > instance.delta(b, i);
    }
    return false;
  });
  for (std::size_t i : objectives) {
    for (std::size_t p = 1; p < order.size(); ++p) {
      if (instance.delta(order[p - 1], i) < instance.delta(order[p], i)) return std::nullopt;
    }
  }
  return order;
}

enum class OrderKind { kObjectiveIndependent, kPartial, kGeneral };

inline std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::kObjectiveIndependent: return "oi";
    case OrderKind::kPartial: return "partial-oi";
    case OrderKind::kGeneral: return "general";
  }
  return "unknown";
}

struct OrderStructure {
  OrderKind kind = OrderKind::kGeneral;
  /// Partition of the objectives; each class has equal budgets and a
  /// common element order. Classes are sorted by their first objective.
  std::vector<std::vector<std::size_t>> classes;
};

namespace detail {

inline std::size_t reduced_index_bound(std::size_t edges, std::size_t gamma) {
  return (edges - gamma + 1) / 2 + 1;
}

inline bool forms_class(const Instance& instance, std::span<const std::size_t> objectives) {
  for (std::size_t i : objectives) {
    if (instance.gamma(i) != instance.gamma(objectives.front())) return false;
  }
  return common_order(instance, objectives).has_value();
}

// Enumerates set partitions by restricted growth strings.
inline void for_each_partition(std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> block(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
    if (pos == k) {
      visit(block);
      return;
    }
    for (std::size_t b = 0; b <= used && b < k; ++b) {
      block[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

}  // namespace detail

/// Picks the partition into classes that minimises the subproblem bound
/// prod over classes of (ceil((|E| - gamma) / 2) + 1); the first such
/// partition in enumeration order wins ties. Falls back to a greedy
/// first-fit assignment for k > 8.
inline OrderStructure detect_order_structure(const Instance& instance) {
  const std::size_t k = instance.objectives();
  const std::size_t m = instance.edge_count();
  OrderStructure result;

  if (k > 8) {
    for (std::size_t i = 0; i < k; ++i) {
      bool placed = false;
      for (auto& cls : result.classes) {
        cls.push_back(i);
        if (detail::forms_class(instance, cls)) {
          placed = true;
          break;
        }
        cls.pop_back();
      }
      if (!placed) result.classes.push_back({i});
    }
  } else {
    long double best = std::numeric_limits<long double>::infinity();
    detail::for_each_partition(k, [&](const std::vector<std::size_t>& block) {
      const std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
      std::vector<std::vector<std::size_t>> classes(blocks);
      for (std::size_t i = 0; i < k; ++i) classes[block[i]].push_back(i);
      long double bound = 1;
      for (const auto& cls : classes) {
        if (!detail::forms_class(instance, cls)) return;
        bound *= static_cast<long double>(detail::reduced_index_bound(m, instance.gamma(cls.front())));
      }
      if (bound < best) {
        best = bound;
        result.classes = std::move(classes);
      }
    });
  }

  if (result.classes.size() == 1) {
    result.kind = OrderKind::kObjectiveIndependent;
  } else if (result.classes.size() < k) {
    result.kind = OrderKind::kPartial;
  } else {
    result.kind = OrderKind::kGeneral;
  }
  return result;
}

/// One element order per objective class. Positions and indices are
/// 1-based where they mirror the subproblem index l in {1, ..., |E| + 1}.
class SortedDeltas {
 public:
  /// Each objective in its own class, sorted by its own interval lengths.
  static SortedDeltas per_objective(const Instance& instance) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < instance.objectives(); ++i) classes.push_back({i});
    return SortedDeltas(instance, classes);
  }

  /// Throws Error(kUnsupported) if a class has no common order or unequal
  /// budgets.
  SortedDeltas(const Instance& instance, const std::vector<std::vector<std::size_t>>& classes)
      : instance_(&instance), classes_(classes), class_of_(instance.objectives(), kUnassigned) {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c].empty()) throw Error(ErrorKind::kUsage, "empty objective class");
      for (std::size_t i : classes_[c]) {
        if (i >= class_of_.size() || class_of_[i] != kUnassigned) {
          throw Error(ErrorKind::kUsage, "objective classes must partition the objectives");
        }
        class_of_[i] = c;
      }
      if (!detail::forms_class(instance, classes_[c])) {
        throw Error(ErrorKind::kUnsupported, "objective class has no common element order or unequal budgets");
      }
      auto order = *common_order(instance, classes_[c]);
      std::vector<std::size_t> rank(order.size());
      for (std::size_t p = 0; p < order.size(); ++p) rank[order[p]] = p;
      orders_.push_back(std::move(order));
      ranks_.push_back(std::move(rank));
    }
    if (std::find(class_of_.begin(), class_of_.end(), kUnassigned) != class_of_.end()) {
      throw Error(ErrorKind::kUsage, "objective classes must cover every objective");
    }
  }

  const Instance& instance() const noexcept { return *instance_; }
  std::size_t edge_count() const noexcept { return instance_->edge_count(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::span<const std::size_t> class_members(std::size_t c) const { return classes_.at(c); }
  std::size_t class_of(std::size_t objective) const { return class_of_.at(objective); }
  std::span<const EdgeId> order_of_class(std::size_t c) const { return orders_.at(c); }
  std::span<const EdgeId> order(std::size_t objective) const { return orders_[class_of(objective)]; }

  /// 0-based position of edge e in the class order; e is in the first j
  /// sorted edges iff rank < j.
  std::size_t rank_in_class(std::size_t c, EdgeId e) const { return ranks_[c][e]; }
  std::size_t rank(std::size_t objective, EdgeId e) const { return ranks_[class_of(objective)][e]; }

  /// Threshold t^i_l: interval length of the l-th sorted edge, 0 at |E| + 1.
  Cost threshold(std::size_t objective, std::size_t l) const {
    check_index(l);
    if (l == edge_count() + 1) return 0;
    return instance_->delta(order(objective)[l - 1], objective);
  }

  /// True if sorted positions l and l + 1 carry equal interval lengths in
  /// every objective of the class (position |E| + 1 counts as all zero).
  bool equal_at(std::size_t c, std::size_t l) const {
    for (std::size_t i : classes_[c]) {
      if (threshold(i, l) != threshold(i, l + 1)) return false;
    }
    return true;
  }

  void check_index(std::size_t l) const {
    if (l < 1 || l > edge_count() + 1) {
      throw Error(ErrorKind::kUsage, "subproblem index " + std::to_string(l) + " outside [1, " +
                                         std::to_string(edge_count() + 1) + "]");
    }
  }

 private:
  static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

  const Instance* instance_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<EdgeId>> orders_;
  std::vector<std::vector<std::size_t>> ranks_;
};

/// Per-objective subproblem index l = (l_1, ..., l_k), l_i in [1, |E| + 1].
struct SubproblemIndex {
  std::vector<std::size_t> l;

  friend bool operator==(const SubproblemIndex&, const SubproblemIndex&) = default;
};

// ---------------------------------------------------------------------------
// Subproblem costs and bound function
// ---------------------------------------------------------------------------

/// Per-edge costs of objective i in subproblem l_i.
inline std::vector<Cost> subproblem_costs(const SortedDeltas& sorted, std::size_t objective, std::size_t l) {
  sorted.check_index(l);
  const Instance& instance = sorted.instance();
  const Cost threshold = sorted.threshold(objective, l);
  std::vector<Cost> costs(instance.edge_count());
  for (EdgeId e = 0; e < costs.size(); ++e) {
    costs[e] = instance.nominal(e, objective);
    if (sorted.rank(objective, e) + 1 < l) costs[e] += instance.delta(e, objective) - threshold;
  }
  return costs;
}

/// Subproblem objective vector of a path: subproblem cost sum plus
/// gamma_i * t^i_{l_i}.
inline CostVector g_value(const SortedDeltas& sorted, const Path& path, const SubproblemIndex& index) {
  const Instance& instance = sorted.instance();
  if (index.l.size() != instance.objectives()) {
    throw Error(ErrorKind::kDimensionMismatch, "subproblem index needs one entry per objective");
  }
  validate_path(instance, path);
  CostVector value(instance.objectives(), 0);
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::size_t l = index.l[i];
    const Cost threshold = sorted.threshold(i, l);
    value[i] = static_cast<Cost>(instance.gamma(i)) * threshold;
    for (EdgeId e : path) {
      value[i] += instance.nominal(e, i);
      if (sorted.rank(i, e) + 1 < l) value[i] += instance.delta(e, i) - threshold;
    }
  }
  return value;
}

/// Reduced index set for one objective class with budget gamma: start at
/// gamma + 1, skip to the end of every run of equal interval lengths, then
/// advance by two, always finishing with |E| + 1.
inline std::vector<std::size_t> index_set_for_class(const SortedDeltas& sorted, std::size_t c) {
  const std::size_t end = sorted.edge_count() + 1;
  const std::size_t gamma = sorted.instance().gamma(sorted.class_members(c).front());
  std::size_t l = gamma + 1;
  std::vector<std::size_t> set{l};
  while (l < end) {
    while (l < end && sorted.equal_at(c, l)) ++l;
    if (l < end) {
      ++l;
      if (l < end) ++l;
      set.push_back(l);
    }
  }
  return set;
}

inline std::vector<std::size_t> index_set_single(const SortedDeltas& sorted, std::size_t objective) {
  return index_set_for_class(sorted, sorted.class_of(objective));
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

enum class DsaVariant { kSingle, kObjectiveIndependent, kPartialObjectiveIndependent, kGeneral };

inline std::string_view to_string(DsaVariant v) {
  switch (v) {
    case DsaVariant::kSingle: return "single";
    case DsaVariant::kObjectiveIndependent: return "oi";
    case DsaVariant::kPartialObjectiveIndependent: return "partial-oi";
    case DsaVariant::kGeneral: return "general";
  }
  return "unknown";
}

enum class SkipRule {
  /// Compare against the last grid point at the advancing loop level only.
  kNestedLoop,
  /// Compare against every solved grid point that is componentwise smaller,
  /// testing all loop levels that differ.
  kAnySmallerPoint,
};

struct DsaOptions {
  bool solution_checking = true;
  SkipRule skip_rule = SkipRule::kNestedLoop;
  /// Use the reduced index sets; false solves the full grid {1..|E|+1}.
  bool reduce_index = true;
  /// Merge objectives with a common order into one loop.
  bool collapse_classes = true;
  /// Solve grid points concurrently. Forces solution checking off.
  bool parallel = false;
  unsigned threads = 0;
  LabelSettingOptions labels{};
};

struct DsaReport {
  Front front;
  std::size_t subproblems_considered = 0;
  std::size_t subproblems_solved = 0;
  std::size_t labels_created = 0;
  DsaVariant variant = DsaVariant::kGeneral;
  std::vector<std::size_t> loop_sizes;
  /// prod over loop dimensions of (ceil((|E| - gamma) / 2) + 1).
  std::size_t subproblem_bound = 0;
};

namespace detail {

struct SubproblemSolution {
  std::vector<Path> paths;
  /// min_rank[p][c]: smallest class-c rank among the edges of path p.
  std::vector<std::vector<std::size_t>> min_rank;
  std::size_t labels_created = 0;

  /// True if some path uses an edge among the first `prefix` of class c.
  bool touches(std::size_t c, std::size_t prefix) const {
    return std::any_of(min_rank.begin(), min_rank.end(), [&](const auto& r) { return r[c] < prefix; });
  }
};

inline SubproblemSolution solve_subproblem(const SortedDeltas& sorted, std::span<const std::size_t> point,
                                           const LabelSettingOptions& label_options) {
  const Instance& instance = sorted.instance();
  const std::size_t k = instance.objectives();
  const std::size_t m = instance.edge_count();
  std::vector<Cost> matrix(m * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto column = subproblem_costs(sorted, i, point[sorted.class_of(i)]);
    for (std::size_t e = 0; e < m; ++e) matrix[e * k + i] = column[e];
  }
  const SumAlgebra algebra(matrix, k);
  const auto run = run_label_setting(instance.graph(), instance.source(), instance.target(), algebra, label_options);

  SubproblemSolution solution;
  solution.labels_created = run.labels_created;
  for (LabelId id : run.target_labels) {
    Path path = backtrack(run, id);
    std::vector<std::size_t> ranks(sorted.class_count(), std::numeric_limits<std::size_t>::max());
    for (EdgeId e : path) {
      for (std::size_t c = 0; c < ranks.size(); ++c) ranks[c] = std::min(ranks[c], sorted.rank_in_class(c, e));
    }
    solution.paths.push_back(std::move(path));
    solution.min_rank.push_back(std::move(ranks));
  }
  return solution;
}

inline DsaReport run_grid(const SortedDeltas& sorted, DsaVariant variant, const DsaOptions& options) {
  const Instance& instance = sorted.instance();
  const std::size_t dims = sorted.class_count();
  const std::size_t m = instance.edge_count();

  std::vector<std::vector<std::size_t>> sets(dims);
  DsaReport report;
  report.variant = variant;
  report.subproblem_bound = 1;
  for (std::size_t c = 0; c < dims; ++c) {
    if (options.reduce_index) {
      sets[c] = index_set_for_class(sorted, c);
    } else {
      sets[c].resize(m + 1);
      std::iota(sets[c].begin(), sets[c].end(), std::size_t{1});
    }
    report.loop_sizes.push_back(sets[c].size());
    report.subproblem_bound *= reduced_index_bound(m, instance.gamma(sorted.class_members(c).front()));
  }

  // Grid points in nested-loop order, last dimension fastest.
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::size_t> pos(dims, 0);
  for (;;) {
    std::vector<std::size_t> point(dims);
    for (std::size_t c = 0; c < dims; ++c) point[c] = sets[c][pos[c]];
    points.push_back(std::move(point));
    std::size_t d = dims;
    while (d > 0 && ++pos[d - 1] == sets[d - 1].size()) {
      pos[d - 1] = 0;
      --d;
    }
    if (d == 0) break;
  }
  report.subproblems_considered = points.size();

  std::vector<SubproblemSolution> solved;
  const bool checking = options.solution_checking && !options.parallel;

  if (options.parallel) {
    solved.resize(points.size());
    const unsigned workers = std::max(1u, options.threads ? options.threads : std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](unsigned w) {
      try {
        for (std::size_t p = next++; p < points.size(); p = next++) {
          solved[p] = solve_subproblem(sorted, points[p], options.labels);
        }
      } catch (...) {
        failures[w] = std::current_exception();
        next = points.size();
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
      work(0);
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  } else if (!checking) {
    for (const auto& point : points) solved.push_back(solve_subproblem(sorted, point, options.labels));
  } else {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    // reference[h]: solution id standing for the last point visited while
    // loop level h or a shallower one was advancing.
    std::vector<std::size_t> reference(dims, kUnset);
    std::vector<std::size_t> solved_points;  // point index of each solved id
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& point = points[p];
      std::size_t h = 0;
      if (p > 0) {
        while (h < dims && points[p - 1][h] == point[h]) ++h;
      }
      std::size_t reuse = kUnset;
      if (options.skip_rule == SkipRule::kNestedLoop) {
        const std::size_t ref = reference[h];
        if (ref != kUnset && !solved[ref].touches(h, point[h] - 1)) reuse = ref;
      } else {
        for (std::size_t id = 0; id < solved.size() && reuse == kUnset; ++id) {
          const auto& earlier = points[solved_points[id]];
          bool smaller = true;
          bool clean = true;
          for (std::size_t c = 0; c < dims && smaller && clean; ++c) {
            if (earlier[c] > point[c]) smaller = false;
            else if (earlier[c] < point[c] && solved[id].touches(c, point[c] - 1)) clean = false;
          }
          if (smaller && clean) reuse = id;
        }
      }
      std::size_t current = reuse;
      if (reuse == kUnset) {
        current = solved.size();
        solved.push_back(solve_subproblem(sorted, point, options.labels));
        solved_points.push_back(p);
      }
      for (std::size_t i = h; i < dims; ++i) reference[i] = current;
    }
  }

  report.subproblems_solved = solved.size();
  std::vector<FrontEntry> candidates;
  for (const auto& solution : solved) {
    report.labels_created += solution.labels_created;
    for (const auto& path : solution.paths) candidates.push_back(FrontEntry{path, worst_case_cost(instance, path)});
  }
  report.front = pareto_filter(std::move(candidates));
  return report;
}

}  // namespace detail

/// Single objective. The front holds one robust optimal path, or nothing
/// when the target is unreachable.
inline DsaReport solve_single(const Instance& instance, const DsaOptions& options = {}) {
  if (instance.objectives() != 1) throw Error(ErrorKind::kUsage, "solve_single needs exactly one objective");
  const auto sorted = SortedDeltas::per_objective(instance);
  return detail::run_grid(sorted, DsaVariant::kSingle, options);
}

/// Multi-objective instances whose objectives share one element order and
/// one budget; the grid is a single loop.
inline DsaReport solve_oi(const Instance& instance, const DsaOptions& options = {}) {
  std::vector<std::size_t> all(instance.objectives());
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (!detail::forms_class(instance, all)) {
    throw Error(ErrorKind::kUnsupported, "instance has no objective independent element order");
  }
  const SortedDeltas sorted(instance, {all});
  return detail::run_grid(sorted, instance.objectives() == 1 ? DsaVariant::kSingle : DsaVariant::kObjectiveIndependent,
                          options);
}

/// General case: one loop per objective class (per objective when
/// `collapse_classes` is off), nested in objective order.
inline DsaReport solve_general(const Instance& instance, const DsaOptions& options = {}) {
  if (!options.collapse_classes) {
    const auto sorted = SortedDeltas::per_objective(instance);
    return detail::run_grid(sorted, instance.objectives() == 1 ? DsaVariant::kSingle : DsaVariant::kGeneral, options);
  }
  const auto structure = detect_order_structure(instance);
  const SortedDeltas sorted(instance, structure.classes);
  DsaVariant variant = DsaVariant::kGeneral;
  if (instance.objectives() == 1) {
    variant = DsaVariant::kSingle;
  } else if (structure.kind == OrderKind::kObjectiveIndependent) {
    variant = DsaVariant::kObjectiveIndependent;
  } else if (structure.kind == OrderKind::kPartial) {
    variant = DsaVariant::kPartialObjectiveIndependent;
  }
  return detail::run_grid(sorted, variant, options);
}

}  // namespace mogsp

#endif  // MOGSP_DSA_HPP
