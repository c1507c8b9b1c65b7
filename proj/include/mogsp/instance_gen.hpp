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
 * @file instance_gen.hpp
 * @brief Seeded instance generators.
 *
 * All randomness comes from std::mt19937_64 (whose output sequence is fixed
 * by the standard) through `uniform_int`, a rejection sampler that does not
 * depend on the standard library's distribution implementations. A seed
 * therefore yields the same instance on every platform.
 *
 * Cost families (objective 1 is a "time" objective in all but kRandom):
 *  - kRandom: every objective draws nominal in [0, max_nominal] and interval
 *    length in [0, max_delta].
 *  - kPopulation: time nominal in [1, max_nominal], time length in
 *    [0, max_delta]; population nominal p in [0, max_nominal] and length in
 *    [0, floor(x * p / 100)] where x is the population uncertainty.
 *  - kObjectiveIndependent: kPopulation with the population lengths replaced
 *    by the time lengths. Requires equal budgets.
 *  - kCorrelated: a second time objective; nominal and length of each edge
 *    are scaled by independent factors u / 1000, u in [900, 1100], rounded
 *    half up.
 *  - kThreeObjective: kPopulation plus a second population objective with
 *    the same nominal values and freshly drawn lengths in the same range.
 */

#ifndef MOGSP_INSTANCE_GEN_HPP
#define MOGSP_INSTANCE_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/model.hpp"

namespace mogsp {

enum class Family { kRandom, kPopulation, kObjectiveIndependent, kCorrelated, kThreeObjective };
enum class Topology { kRandomDigraph, kLayered, kGrid };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::kRandom: return "random";
    case Family::kPopulation: return "population";
    case Family::kObjectiveIndependent: return "oi";
    case Family::kCorrelated: return "correlated";
    case Family::kThreeObjective: return "three-objective";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::kRandom, Family::kPopulation, Family::kObjectiveIndependent, Family::kCorrelated,
                   Family::kThreeObjective}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::kUsage, "unknown instance family '" + std::string(name) + "'");
}

inline std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::kRandomDigraph: return "digraph";
    case Topology::kLayered: return "layered";
    case Topology::kGrid: return "grid";
  }
  return "unknown";
}

inline Topology parse_topology(std::string_view name) {
  for (Topology t : {Topology::kRandomDigraph, Topology::kLayered, Topology::kGrid}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorKind::kUsage, "unknown topology '" + std::string(name) + "'");
}

struct GenSpec {
  std::uint64_t seed = 1;
  Family family = Family::kPopulation;
  Topology topology = Topology::kRandomDigraph;
  /// kRandomDigraph: node and edge counts.
  std::size_t nodes = 8;
  std::size_t edges = 16;
  /// kLayered: `layers` x `width` inner nodes; kGrid: `layers` rows x `width` columns.
  std::size_t layers = 3;
  std::size_t width = 3;
  /// Objective count for kRandom; the other families fix it.
  std::size_t objectives = 2;
  /// One entry per objective, or a single entry applied to all.
  std::vector<std::size_t> gamma{1};
  /// Population uncertainty x in percent.
  Cost population_uncertainty = 10;
  Cost max_nominal = 20;
  Cost max_delta = 10;
};

/// Uniform integer in [lo, hi] by rejection sampling on 64-bit words.
inline Cost uniform_int(std::mt19937_64& rng, Cost lo, Cost hi) {
  if (hi < lo) throw Error(ErrorKind::kUsage, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<Cost>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<Cost>(draw % span);
}

namespace detail {

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

struct Topo {
  std::size_t nodes = 0;
  std::vector<Arc> arcs;
  NodeId source = 0;
  NodeId target = 0;
};

inline Topo random_digraph(const GenSpec& spec, std::mt19937_64& rng) {
  const std::size_t n = spec.nodes;
  if (n < 2) throw Error(ErrorKind::kUsage, "random digraph needs at least two nodes");
  if (spec.edges > n * (n - 1)) throw Error(ErrorKind::kUsage, "more edges requested than ordered node pairs");

  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  Topo topo{n, {}, 0, static_cast<NodeId>(n - 1)};
  // Backbone s -> (random subset of inner nodes) -> t keeps t reachable.
  std::vector<NodeId> inner;
  for (NodeId v = 1; v + 1 < n; ++v) inner.push_back(v);
  seeded_shuffle(inner, rng);
  const auto hops = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(inner.size())));
  NodeId at = topo.source;
  for (std::size_t h = 0; h < hops && topo.arcs.size() + 1 < spec.edges; ++h) {
    topo.arcs.push_back({at, inner[h]});
    used[at][inner[h]] = 1;
    at = inner[h];
  }
  topo.arcs.push_back({at, topo.target});
  used[at][topo.target] = 1;

  while (topo.arcs.size() < spec.edges) {
    const auto u = static_cast<NodeId>(uniform_int(rng, 0, static_cast<Cost>(n - 1)));
    const auto v = static_cast<NodeId>(uniform_int(rng, 0, static_cast<Cost>(n - 1)));
    if (u == v || used[u][v]) continue;
    used[u][v] = 1;
    topo.arcs.push_back({u, v});
  }
  seeded_shuffle(topo.arcs, rng);
  return topo;
}

inline Topo layered(const GenSpec& spec, std::mt19937_64& rng) {
  if (spec.layers == 0 || spec.width == 0) throw Error(ErrorKind::kUsage, "layered graph needs layers and width");
  const std::size_t n = spec.layers * spec.width + 2;
  Topo topo{n, {}, 0, static_cast<NodeId>(n - 1)};
  auto node = [&](std::size_t layer, std::size_t slot) { return static_cast<NodeId>(1 + layer * spec.width + slot); };
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  auto add = [&](NodeId u, NodeId v) {
    if (u != v && !used[u][v]) {
      used[u][v] = 1;
      topo.arcs.push_back({u, v});
    }
  };
  for (std::size_t s = 0; s < spec.width; ++s) add(topo.source, node(0, s));
  for (std::size_t s = 0; s < spec.width; ++s) add(node(spec.layers - 1, s), topo.target);
  for (std::size_t layer = 0; layer + 1 < spec.layers; ++layer) {
    for (std::size_t s = 0; s < spec.width; ++s) {
      // Every node keeps one forward edge; extra edges at probability 1/2.
      add(node(layer, s), node(layer + 1, static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(spec.width - 1)))));
      for (std::size_t r = 0; r < spec.width; ++r) {
        if (uniform_int(rng, 0, 1) == 1) add(node(layer, s), node(layer + 1, r));
      }
    }
  }
  // Shortcuts skip one or more layers.
  const std::size_t shortcuts = spec.layers * spec.width / 2;
  for (std::size_t c = 0; c < shortcuts && spec.layers > 2; ++c) {
    const auto from = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(spec.layers - 3)));
    const auto to = static_cast<std::size_t>(uniform_int(rng, static_cast<Cost>(from + 2), static_cast<Cost>(spec.layers - 1)));
    add(node(from, static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(spec.width - 1)))),
        node(to, static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Cost>(spec.width - 1)))));
  }
  return topo;
}

inline Topo grid(const GenSpec& spec) {
  const std::size_t rows = spec.layers;
  const std::size_t cols = spec.width;
  if (rows * cols < 2) throw Error(ErrorKind::kUsage, "grid needs at least two cells");
  Topo topo{rows * cols, {}, 0, static_cast<NodeId>(rows * cols - 1)};
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        topo.arcs.push_back({id(r, c), id(r, c + 1)});
        topo.arcs.push_back({id(r, c + 1), id(r, c)});
      }
      if (r + 1 < rows) {
        topo.arcs.push_back({id(r, c), id(r + 1, c)});
        topo.arcs.push_back({id(r + 1, c), id(r, c)});
      }
    }
  }
  return topo;
}

inline Cost scale_half_up(Cost value, Cost per_mille) { return (value * per_mille + 500) / 1000; }

}  // namespace detail

inline std::size_t family_objectives(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kRandom: return spec.objectives;
    case Family::kThreeObjective: return 3;
    default: return 2;
  }
}

inline Instance generate(const GenSpec& spec) {
  if (spec.population_uncertainty < 0) throw Error(ErrorKind::kUsage, "population uncertainty must be >= 0");
  if (spec.max_nominal < 1 || spec.max_delta < 0) throw Error(ErrorKind::kUsage, "cost ranges must be non-empty");
  const std::size_t k = family_objectives(spec);
  if (k == 0) throw Error(ErrorKind::kUsage, "at least one objective required");

  std::vector<std::size_t> gamma = spec.gamma;
  if (gamma.size() == 1) gamma.assign(k, gamma.front());
  if (gamma.size() != k) throw Error(ErrorKind::kUsage, "gamma needs one entry or one per objective");
  if (spec.family == Family::kObjectiveIndependent &&
      std::adjacent_find(gamma.begin(), gamma.end(), std::not_equal_to<>()) != gamma.end()) {
    throw Error(ErrorKind::kUsage, "oi family needs equal budgets");
  }

  std::mt19937_64 rng(spec.seed);
  detail::Topo topo;
  switch (spec.topology) {
    case Topology::kRandomDigraph: topo = detail::random_digraph(spec, rng); break;
    case Topology::kLayered: topo = detail::layered(spec, rng); break;
    case Topology::kGrid: topo = detail::grid(spec); break;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (gamma[i] > topo.arcs.size()) {
      throw Error(ErrorKind::kUsage, "gamma exceeds the generated edge count " + std::to_string(topo.arcs.size()));
    }
  }

  const std::size_t m = topo.arcs.size();
  std::vector<Cost> nominal(m * k, 0);
  std::vector<Cost> delta(m * k, 0);
  const Cost x = spec.population_uncertainty;
  auto population_length = [&](Cost p) { return uniform_int(rng, 0, x * p / 100); };

  for (std::size_t e = 0; e < m; ++e) {
    Cost* c = &nominal[e * k];
    Cost* d = &delta[e * k];
    if (spec.family == Family::kRandom) {
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = uniform_int(rng, 0, spec.max_nominal);
        d[i] = uniform_int(rng, 0, spec.max_delta);
      }
      continue;
    }
    c[0] = uniform_int(rng, 1, spec.max_nominal);
    d[0] = uniform_int(rng, 0, spec.max_delta);
    switch (spec.family) {
      case Family::kPopulation:
      case Family::kThreeObjective:
        c[1] = uniform_int(rng, 0, spec.max_nominal);
        d[1] = population_length(c[1]);
        if (spec.family == Family::kThreeObjective) {
          c[2] = c[1];
          d[2] = population_length(c[1]);
        }
        break;
      case Family::kObjectiveIndependent:
        c[1] = uniform_int(rng, 0, spec.max_nominal);
        d[1] = d[0];
        break;
      case Family::kCorrelated:
        c[1] = std::max<Cost>(0, detail::scale_half_up(c[0], uniform_int(rng, 900, 1100)));
        d[1] = std::max<Cost>(0, detail::scale_half_up(d[0], uniform_int(rng, 900, 1100)));
        break;
      case Family::kRandom: break;
    }
  }

  return Instance(Graph(topo.nodes, std::move(topo.arcs)), k, std::move(nominal), std::move(delta), std::move(gamma),
                  topo.source, topo.target);
}

}  // namespace mogsp

#endif  // MOGSP_INSTANCE_GEN_HPP
