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

#include <gtest/gtest.h>

#include "mogsp/bottleneck.hpp"
#include "mogsp/instance_gen.hpp"
#include "mogsp/label_engine.hpp"
#include "mogsp/oracle.hpp"
#include "mogsp/worst_case.hpp"
#include "support.hpp"

namespace mogsp {
namespace {

std::vector<CostVector> target_values(const LabelSettingResult& run) {
  std::vector<CostVector> values;
  for (LabelId id : run.target_labels) values.push_back(run.labels[id].cost);
  std::sort(values.begin(), values.end());
  return values;
}

// Non-dominated nominal path costs by exhaustive enumeration.
std::vector<CostVector> nominal_front(const Instance& inst) {
  std::vector<FrontEntry> all;
  for (auto& p : enumerate_simple_paths(inst.graph(), inst.source(), inst.target(), {})) {
    all.push_back({p, nominal_cost(inst, p)});
  }
  return value_set(pareto_filter(std::move(all)));
}

TEST(LabelSetting, SingleEdge) {
  const Graph g(2, {{0, 1}});
  const std::vector<Cost> cost{7};
  const auto run = run_label_setting(g, 0, 1, SumAlgebra(cost, 1));
  ASSERT_EQ(run.target_labels.size(), 1U);
  EXPECT_EQ(run.labels[run.target_labels[0]].cost, CostVector{7});
  EXPECT_EQ(backtrack(run, run.target_labels[0]), Path{0});
  EXPECT_TRUE(backtrack(run, 0).empty());
}

TEST(LabelSetting, UnreachableTargetGivesNoLabels) {
  const Graph g(3, {{0, 1}, {2, 1}});
  const std::vector<Cost> cost{1, 1};
  const auto run = run_label_setting(g, 0, 2, SumAlgebra(cost, 1));
  EXPECT_TRUE(run.target_labels.empty());
}

TEST(LabelSetting, TwoDisjointPathsWithBottleneckAlgebra) {
  const auto inst = testing::two_disjoint_paths();
  const BottleneckAlgebra algebra(inst);
  const auto run = run_label_setting(inst.graph(), inst.source(), inst.target(), algebra);
  EXPECT_EQ(target_values(run), (std::vector<CostVector>{{0, 1, 1}, {3, 0, 0}}));
}

TEST(LabelSetting, BacktrackRejectsDanglingReferences) {
  LabelSettingResult broken;
  broken.labels.push_back(Label{{0}, 0, kNoLabel, 0, LabelState::kPermanent});
  broken.labels.push_back(Label{{1}, 1, 7, 0, LabelState::kPermanent});
  EXPECT_THROW(backtrack(broken, 1), Error);
  EXPECT_THROW(backtrack(broken, 9), Error);
}

class SumAgainstOracle : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SumAgainstOracle, TargetLabelsMatchEnumeration) {
  GenSpec spec;
  spec.seed = GetParam();
  spec.family = Family::kRandom;
  spec.objectives = 2;
  spec.nodes = 8;
  spec.edges = 8 + GetParam() % 20;
  spec.gamma = {0};
  const Instance inst = generate(spec);
  const SumAlgebra algebra(inst.nominal_matrix(), 2);
  const auto expected = nominal_front(inst);
  for (bool prune : {false, true}) {
    for (bool expand : {false, true}) {
      const auto run = run_label_setting(inst.graph(), inst.source(), inst.target(), algebra, {prune, expand});
      EXPECT_EQ(target_values(run), expected) << "prune " << prune << " expand " << expand;
      for (LabelId id : run.target_labels) {
        const Path p = backtrack(run, id);
        validate_path(inst, p);
        EXPECT_EQ(nominal_cost(inst, p), run.labels[id].cost);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SumAgainstOracle, ::testing::Range<std::uint64_t>(1, 31));

TEST(LabelSetting, PermanentOrderAndNodeInvariants) {
  for (std::uint64_t seed = 1; seed < 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.family = Family::kThreeObjective;
    spec.nodes = 9;
    spec.edges = 24;
    spec.gamma = {2};
    spec.population_uncertainty = 50;
    const Instance inst = generate(spec);
    const BottleneckAlgebra algebra(inst);
    const auto run = run_label_setting(inst.graph(), inst.source(), inst.target(), algebra);
    Cost last = 0;
    std::vector<std::vector<LabelId>> by_node(inst.node_count());
    for (LabelId id : run.permanent_order) {
      const Cost agg = algebra.aggregate(run.labels[id].cost);
      EXPECT_LE(last, agg);
      last = agg;
      by_node[run.labels[id].node].push_back(id);
      // Re-evaluating the represented path reproduces the label.
      CostVector replay(algebra.dimension(), 0);
      for (EdgeId e : backtrack(run, id)) replay = algebra.extend(replay, e);
      EXPECT_EQ(replay, run.labels[id].cost);
    }
    for (const auto& ids : by_node) {
      for (LabelId a : ids) {
        for (LabelId b : ids) {
          if (a != b) {
            EXPECT_FALSE(weakly_dominates(run.labels[a].cost, run.labels[b].cost));
          }
        }
      }
    }
    EXPECT_EQ(run.labels_permanent, run.permanent_order.size());
    EXPECT_LE(run.labels_permanent, run.labels_created);
  }
}

}  // namespace
}  // namespace mogsp
