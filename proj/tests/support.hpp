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

#ifndef MOGSP_TESTS_SUPPORT_HPP
#define MOGSP_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/instance_gen.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"

namespace mogsp::testing {

// Two disjoint three-edge paths from 0 to 5. Upper path 0-1-2-5 is cheap
// and certain, lower path 0-3-4-5 is free but uncertain.
inline Instance two_disjoint_paths(std::size_t gamma = 2) {
  Graph g(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
  return Instance(std::move(g), 1, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {gamma}, 0, 5);
}

inline constexpr const char* kTwoDisjointPathsText =
    "mo-gamma-sp v1\n"
    "# two disjoint paths, budget 2\n"
    "k 1\n"
    "gamma 2\n"
    "nodes 6\n"
    "query 0 5\n"
    "edge 0 1 1 0\n"
    "edge 1 2 1 0\n"
    "edge 2 5 1 0\n"
    "edge 0 3 0 1\n"
    "edge 3 4 0 1\n"
    "edge 4 5 0 1\n";

// Path s=0 -> v=1 -> t=3 with a two-edge cycle 1 -> 2 -> 1 whose cost is
// -1 in the nominal scenario and 0 when the first cycle edge deviates.
inline constexpr const char* kNegativeCycleText =
    "mo-gamma-sp v1\n"
    "k 1\n"
    "gamma 1\n"
    "nodes 4\n"
    "query 0 3\n"
    "edge 0 1 2 1\n"
    "edge 1 3 1 1\n"
    "edge 1 2 -1 1\n"
    "edge 2 1 0 0\n";

struct SweepCase {
  std::uint64_t seed;
  Instance instance;
  Cost x;
};

// Small random instances: |V| <= 10, |E| <= 25, k in {1,2,3},
// gamma_i in {0..4}, x in {0,10,50,100}. Families rotate so that
// objective independent and correlated structure is represented.
inline SweepCase sweep_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  static constexpr Cost kXs[] = {0, 10, 50, 100};
  GenSpec spec;
  spec.seed = seed;
  spec.population_uncertainty = kXs[uniform_int(rng, 0, 3)];
  spec.max_nominal = 9;
  spec.max_delta = 9;
  const Cost topology = uniform_int(rng, 0, 3);
  if (topology <= 1) {
    spec.topology = Topology::kRandomDigraph;
    spec.nodes = static_cast<std::size_t>(uniform_int(rng, 4, 10));
    const auto most = static_cast<Cost>(std::min<std::size_t>(25, spec.nodes * (spec.nodes - 1)));
    spec.edges = static_cast<std::size_t>(uniform_int(rng, static_cast<Cost>(spec.nodes), most));
  } else if (topology == 2) {
    spec.topology = Topology::kLayered;
    spec.layers = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    spec.width = static_cast<std::size_t>(uniform_int(rng, 2, spec.layers == 2 ? 4 : 2));
  } else {
    spec.topology = Topology::kGrid;
    spec.layers = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    spec.width = static_cast<std::size_t>(uniform_int(rng, 3, spec.layers == 2 ? 4 : 3));
  }
  switch (seed % 6) {
    case 0: spec.family = Family::kPopulation; break;
    case 1: spec.family = Family::kObjectiveIndependent; break;
    case 2: spec.family = Family::kCorrelated; break;
    case 3: spec.family = Family::kThreeObjective; break;
    case 4:
      spec.family = Family::kRandom;
      spec.objectives = 1;
      break;
    default:
      spec.family = Family::kRandom;
      spec.objectives = static_cast<std::size_t>(uniform_int(rng, 2, 3));
      break;
  }
  const std::size_t k = family_objectives(spec);
  const Cost g = uniform_int(rng, 0, 4);
  spec.gamma.assign(k, static_cast<std::size_t>(g));
  if (spec.family != Family::kObjectiveIndependent) {
    for (auto& value : spec.gamma) value = static_cast<std::size_t>(uniform_int(rng, 0, 4));
  }
  // Budgets larger than the drawn edge count are clipped by regenerating.
  for (;;) {
    try {
      return SweepCase{seed, generate(spec), spec.population_uncertainty};
    } catch (const Error&) {
      for (auto& value : spec.gamma) value = value / 2;
    }
  }
}

struct MalformedCase {
  std::string name;
  std::string text;
  ErrorKind kind;
  std::size_t line;
};

// Each case documents the error kind and line the parser must report.
inline std::vector<MalformedCase> malformed_corpus() {
  const std::string head = "mo-gamma-sp v1\nk 1\ngamma 1\nnodes 3\nquery 0 2\n";
  return {
      {"empty", "", ErrorKind::kMalformedHeader, 1},
      {"wrong header", "mo-gamma-sp v2\n", ErrorKind::kMalformedHeader, 1},
      {"unknown directive", "mo-gamma-sp v1\nk 1\narc 0 1\n", ErrorKind::kUnknownDirective, 3},
      {"bad integer", "mo-gamma-sp v1\nk one\n", ErrorKind::kBadInteger, 2},
      {"integer with suffix", "mo-gamma-sp v1\nnodes 3x\n", ErrorKind::kBadInteger, 2},
      {"duplicate directive", "mo-gamma-sp v1\nk 1\nk 1\n", ErrorKind::kDuplicateDirective, 3},
      {"missing query", "mo-gamma-sp v1\nk 1\ngamma 0\nnodes 2\nedge 0 1 1 1\n", ErrorKind::kMissingDirective, 5},
      {"gamma arity", "mo-gamma-sp v1\nk 2\ngamma 1\nnodes 2\nquery 0 1\n", ErrorKind::kWrongArity, 3},
      {"gamma too large", "mo-gamma-sp v1\nk 1\ngamma 2\nnodes 2\nquery 0 1\nedge 0 1 1 1\n",
       ErrorKind::kGammaOutOfRange, 3},
      {"zero nodes", "mo-gamma-sp v1\nk 1\ngamma 0\nnodes 0\nquery 0 1\n", ErrorKind::kEmptyGraph, 4},
      {"source equals target", "mo-gamma-sp v1\nk 1\ngamma 0\nnodes 2\nquery 1 1\n", ErrorKind::kDegenerateQuery, 5},
      {"edge arity", head + "edge 0 1 1\n", ErrorKind::kWrongArity, 6},
      {"dangling node", head + "edge 0 5 1 1\n", ErrorKind::kNodeOutOfRange, 6},
      {"negative node", head + "edge -1 1 1 1\n", ErrorKind::kNodeOutOfRange, 6},
      {"self loop", head + "edge 1 1 1 1\n", ErrorKind::kSelfLoop, 6},
      {"duplicate edge", head + "edge 0 1 1 1\nedge 0 1 2 2\n", ErrorKind::kDuplicateEdge, 7},
      {"negative nominal", head + "edge 0 1 -1 0\n", ErrorKind::kNegativeNominal, 6},
      {"negative delta", head + "edge 0 1 1 -2\n", ErrorKind::kNegativeDelta, 6},
  };
}

inline std::vector<CostVector> values_of(const Front& front) { return value_set(front); }

}  // namespace mogsp::testing

#endif  // MOGSP_TESTS_SUPPORT_HPP
