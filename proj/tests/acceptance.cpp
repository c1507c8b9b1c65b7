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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mogsp/mogsp.hpp"
#include "support.hpp"

namespace {

using namespace mogsp;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kExampleLimitMicros = 1000.0;
constexpr double kSweepLimitSeconds = 60.0;
constexpr std::uint64_t kSweepSeeds = 240;
constexpr std::size_t kFullGridMaxEdges = 12;
constexpr std::uint64_t kTrendSeed = 5;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string str(const std::vector<CostVector>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t a = 0; a < values.size(); ++a) {
    out << (a ? " " : "") << '(';
    for (std::size_t i = 0; i < values[a].size(); ++i) out << (i ? "," : "") << values[a][i];
    out << ')';
  }
  out << '}';
  return out.str();
}

const std::vector<testing::SweepCase>& sweep() {
  static const std::vector<testing::SweepCase> cases = [] {
    std::vector<testing::SweepCase> out;
    for (std::uint64_t seed = 1; seed <= kSweepSeeds; ++seed) out.push_back(testing::sweep_instance(seed));
    return out;
  }();
  return cases;
}

Outcome example_golden() {
  Outcome o;
  const Instance inst = parse_instance(testing::kTwoDisjointPathsText);
  const auto start = Clock::now();
  const LsaReport lsa = solve_lsa(inst);
  const DsaReport dsa = solve_general(inst);
  const Front oracle = oracle_front(inst);
  const double micros = seconds_since(start) * 1e6;

  auto targets = lsa.target_costs;
  std::sort(targets.begin(), targets.end());
  const std::vector<CostVector> expected_targets{{0, 1, 1}, {3, 0, 0}};
  o.require(targets == expected_targets, "target labels " + str(targets));
  o.require(lsa.front.size() == 1 && lsa.front[0].cost == CostVector{2} && lsa.front[0].path == Path{3, 4, 5},
            "lsa front " + str(value_set(lsa.front)));
  o.require(dsa.front == lsa.front, "dsa front " + str(value_set(dsa.front)));
  o.require(oracle == lsa.front, "oracle front " + str(value_set(oracle)));
  o.require(micros < kExampleLimitMicros, "took " + str(micros) + " us");
  if (o.pass) o.detail = "labels {(0,1,1) (3,0,0)}, front {2} via 0-3-4-5, " + str(static_cast<long>(micros)) + " us";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t oi_checked = 0;
  std::map<std::size_t, std::size_t> by_k;
  for (const auto& c : sweep()) {
    const Instance& inst = c.instance;
    o.require(inst.node_count() <= 10 && inst.edge_count() <= 25, "seed " + str(c.seed) + " outside sweep limits");
    const auto expected = value_set(oracle_front(inst));
    const auto general = value_set(solve_general(inst).front);
    const auto lsa = value_set(solve_lsa(inst).front);
    o.require(general == expected, "seed " + str(c.seed) + ": general " + str(general) + " vs oracle " + str(expected));
    o.require(lsa == expected, "seed " + str(c.seed) + ": lsa " + str(lsa) + " vs oracle " + str(expected));
    if (detect_order_structure(inst).kind == OrderKind::kObjectiveIndependent) {
      ++oi_checked;
      const auto oi = value_set(solve_oi(inst).front);
      o.require(oi == expected, "seed " + str(c.seed) + ": oi " + str(oi) + " vs oracle " + str(expected));
    }
    ++by_k[inst.objectives()];
  }
  const double elapsed = seconds_since(start);
  o.require(sweep().size() >= 200, "too few instances");
  o.require(by_k.size() == 3, "not every objective count is represented");
  o.require(elapsed < kSweepLimitSeconds, "sweep took " + str(elapsed) + " s");
  if (o.pass) {
    o.detail = str(sweep().size()) + " instances (k=1: " + str(by_k[1]) + ", k=2: " + str(by_k[2]) + ", k=3: " +
               str(by_k[3]) + "), " + str(oi_checked) + " oi, " + str(elapsed) + " s";
  }
  return o;
}

Outcome bound_attainment() {
  // Component i of g depends on l_i alone, which is checked on sampled
  // grid points; every axis is then scanned exhaustively.
  Outcome o;
  std::size_t paths = 0;
  std::mt19937_64 rng(1);
  for (const auto& c : sweep()) {
    const Instance& inst = c.instance;
    const auto sorted = SortedDeltas::per_objective(inst);
    const std::size_t m = inst.edge_count();
    const std::size_t k = inst.objectives();
    for (const Path& p : enumerate_simple_paths(inst.graph(), inst.source(), inst.target(), {})) {
      ++paths;
      const CostVector wc = worst_case_cost(inst, p);
      std::vector<std::vector<Cost>> axis(k, std::vector<Cost>(m + 2, 0));
      for (std::size_t i = 0; i < k; ++i) {
        Cost best = std::numeric_limits<Cost>::max();
        for (std::size_t l = 1; l <= m + 1; ++l) {
          SubproblemIndex index{std::vector<std::size_t>(k, m + 1)};
          index.l[i] = l;
          const Cost g = g_value(sorted, p, index)[i];
          axis[i][l] = g;
          o.require(g >= wc[i], "seed " + str(c.seed) + ": g below worst case");
          best = std::min(best, g);
        }
        o.require(best == wc[i], "seed " + str(c.seed) + ": minimum of g misses the worst case");
      }
      for (int sample = 0; sample < 8; ++sample) {
        SubproblemIndex index{std::vector<std::size_t>(k)};
        for (auto& l : index.l) l = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<Cost>(m + 1)));
        const CostVector g = g_value(sorted, p, index);
        for (std::size_t i = 0; i < k; ++i) {
          o.require(g[i] == axis[i][index.l[i]], "seed " + str(c.seed) + ": g component depends on other indices");
        }
        o.require(weakly_dominates(wc, g), "seed " + str(c.seed) + ": g below worst case on grid point");
      }
    }
  }
  if (o.pass) o.detail = str(paths) + " paths, every index";
  return o;
}

Outcome count_bounds() {
  Outcome o;
  std::size_t runs = 0;
  auto bound = [](std::size_t m, std::size_t g) { return detail::reduced_index_bound(m, g); };
  for (const auto& c : sweep()) {
    const Instance& inst = c.instance;
    const std::size_t m = inst.edge_count();
    const std::size_t k = inst.objectives();
    const std::string tag = "seed " + str(c.seed) + ": ";

    if (k == 1) {
      const auto r = solve_single(inst);
      ++runs;
      o.require(r.subproblems_considered <= bound(m, inst.gamma(0)), tag + "single over bound");
      o.require(r.subproblems_solved <= r.subproblems_considered, tag + "solved > considered");
    }
    const auto structure = detect_order_structure(inst);
    if (structure.kind == OrderKind::kObjectiveIndependent) {
      const auto r = solve_oi(inst);
      ++runs;
      o.require(r.subproblems_considered <= bound(m, inst.gamma(0)), tag + "oi over bound");
      o.require(r.subproblems_solved <= r.subproblems_considered, tag + "solved > considered");
    }

    DsaOptions separate;
    separate.collapse_classes = false;
    const auto general = solve_general(inst, separate);
    ++runs;
    std::size_t product = 1;
    std::size_t grid = 1;
    for (std::size_t i = 0; i < k; ++i) product *= bound(m, inst.gamma(i));
    for (std::size_t s : general.loop_sizes) grid *= s;
    o.require(general.loop_sizes.size() == k, tag + "one loop per objective expected");
    o.require(general.subproblems_considered == grid, tag + "considered != grid size");
    o.require(general.subproblems_considered <= product, tag + "general over product bound");
    o.require(general.subproblem_bound == product, tag + "reported bound differs");

    const auto collapsed = solve_general(inst);
    ++runs;
    std::size_t class_product = 1;
    for (const auto& cls : structure.classes) class_product *= bound(m, inst.gamma(cls.front()));
    std::size_t collapsed_grid = 1;
    for (std::size_t s : collapsed.loop_sizes) collapsed_grid *= s;
    o.require(collapsed.loop_sizes.size() == structure.classes.size(), tag + "one loop per class expected");
    o.require(collapsed.subproblems_considered == collapsed_grid, tag + "collapsed considered != grid size");
    o.require(collapsed.subproblems_considered <= class_product, tag + "collapsed over class product bound");
    o.require(collapsed.subproblem_bound == class_product, tag + "reported class bound differs");
  }
  if (o.pass) o.detail = str(runs) + " runs within bounds";
  return o;
}

Outcome enhancement_neutrality() {
  Outcome o;
  std::size_t strictly_fewer = 0;
  std::size_t on_total = 0;
  std::size_t off_total = 0;
  DsaOptions off;
  off.solution_checking = false;
  for (const auto& c : sweep()) {
    const auto& inst = c.instance;
    const auto tag = "seed " + str(c.seed) + ": ";
    std::vector<std::pair<DsaReport, DsaReport>> pairs;
    pairs.emplace_back(solve_general(inst), solve_general(inst, off));
    if (inst.objectives() == 1) pairs.emplace_back(solve_single(inst), solve_single(inst, off));
    if (detect_order_structure(inst).kind == OrderKind::kObjectiveIndependent) {
      pairs.emplace_back(solve_oi(inst), solve_oi(inst, off));
    }
    for (const auto& [with, without] : pairs) {
      o.require(value_set(with.front) == value_set(without.front), tag + "fronts differ");
      o.require(with.subproblems_solved <= without.subproblems_solved, tag + "checking solved more");
      if (with.subproblems_solved < without.subproblems_solved) ++strictly_fewer;
      on_total += with.subproblems_solved;
      off_total += without.subproblems_solved;
    }
  }
  o.require(strictly_fewer > 0, "checking never skipped a subproblem");
  if (o.pass) {
    o.detail = "solved " + str(on_total) + " with checking vs " + str(off_total) + " without, fewer on " +
               str(strictly_fewer) + " runs";
  }
  return o;
}

Outcome index_reduction_safety() {
  Outcome o;
  std::size_t checked = 0;
  DsaOptions full;
  full.reduce_index = false;
  full.collapse_classes = false;
  DsaOptions full_unchecked = full;
  full_unchecked.solution_checking = false;
  for (const auto& c : sweep()) {
    if (c.instance.edge_count() > kFullGridMaxEdges) continue;
    ++checked;
    const auto reduced = value_set(solve_general(c.instance).front);
    const auto everything = solve_general(c.instance, full_unchecked);
    std::size_t grid = 1;
    for (std::size_t i = 0; i < c.instance.objectives(); ++i) grid *= c.instance.edge_count() + 1;
    o.require(everything.subproblems_considered == grid, "seed " + str(c.seed) + ": full grid not enumerated");
    o.require(value_set(everything.front) == reduced, "seed " + str(c.seed) + ": reduced index set changes the front");
    o.require(value_set(solve_general(c.instance, full).front) == reduced,
              "seed " + str(c.seed) + ": checked full grid changes the front");
  }
  o.require(checked >= 20, "only " + str(checked) + " small instances");
  if (o.pass) o.detail = str(checked) + " instances with |E| <= " + str(kFullGridMaxEdges);
  return o;
}

Outcome count_trends() {
  Outcome o;
  GenSpec spec;
  spec.seed = kTrendSeed;
  spec.family = Family::kPopulation;
  spec.topology = Topology::kGrid;
  spec.layers = 3;
  spec.width = 4;
  spec.population_uncertainty = 50;
  std::vector<std::size_t> considered;
  std::vector<std::size_t> labels;
  for (std::size_t gamma = 1; gamma <= 8; ++gamma) {
    spec.gamma = {gamma};
    const Instance inst = generate(spec);
    considered.push_back(solve_general(inst).subproblems_considered);
    labels.push_back(solve_lsa(inst).labels_created);
  }
  o.require(std::is_sorted(considered.rbegin(), considered.rend()), "dsa considered not non-increasing");
  o.require(std::is_sorted(labels.begin(), labels.end()), "lsa labels not non-decreasing");

  std::size_t oi_runs = 0;
  std::size_t oi_solved = 0;
  std::size_t general_solved = 0;
  DsaOptions forced;
  forced.collapse_classes = false;
  auto compare_oi = [&](const Instance& inst, const std::string& tag) {
    if (inst.objectives() < 2 || detect_order_structure(inst).kind != OrderKind::kObjectiveIndependent) return;
    const auto oi = solve_oi(inst);
    const auto general = solve_general(inst, forced);
    o.require(oi.subproblems_solved <= general.subproblems_solved, tag + ": oi solved more than forced general");
    ++oi_runs;
    oi_solved += oi.subproblems_solved;
    general_solved += general.subproblems_solved;
  };
  spec.family = Family::kObjectiveIndependent;
  for (std::size_t gamma = 1; gamma <= 8; ++gamma) {
    spec.gamma = {gamma};
    compare_oi(generate(spec), "gamma " + str(gamma));
  }
  for (const auto& c : sweep()) compare_oi(c.instance, "seed " + str(c.seed));
  o.require(oi_runs > 0, "no oi instance");
  if (o.pass) {
    std::ostringstream d;
    d << "considered";
    for (auto v : considered) d << ' ' << v;
    d << "; labels";
    for (auto v : labels) d << ' ' << v;
    d << "; oi solved " << oi_solved << " vs forced general " << general_solved << " on " << oi_runs << " instances";
    o.detail = d.str();
  }
  return o;
}

Outcome conservative_guard() {
  Outcome o;
  auto check = [&](const std::function<void()>& build, const std::string& where) {
    try {
      build();
      o.require(false, where + ": accepted");
    } catch (const Error& e) {
      o.require(e.kind() == ErrorKind::kNegativeNominal, where + ": wrong kind " + std::string(to_string(e.kind())));
      o.require(std::string(e.what()).find("conservative") != std::string::npos, where + ": diagnostic " + e.what());
    }
  };
  check([] { parse_instance(testing::kNegativeCycleText); }, "file");
  check([] { Instance(Graph(4, {{0, 1}, {1, 3}, {1, 2}, {2, 1}}), 1, {2, 1, -1, 0}, {1, 1, 1, 0}, {1}, 0, 3); },
        "constructor");
  if (o.pass) o.detail = "cycle of nominal cost -1 rejected with a conservative-cost diagnostic";
  return o;
}

Outcome format_roundtrip() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = sweep().at(seed - 1).instance;
    const Instance once = parse_instance(serialize_instance(inst));
    const Instance twice = parse_instance(serialize_instance(once));
    o.require(once == inst && twice == once, "seed " + str(seed) + ": round trip changed the instance");
  }
  const auto corpus = testing::malformed_corpus();
  for (const auto& c : corpus) {
    try {
      parse_instance(c.text);
      o.require(false, c.name + ": accepted");
    } catch (const Error& e) {
      o.require(e.kind() == c.kind && e.line() == c.line, c.name + ": got " + e.what());
    }
  }
  o.require(corpus.size() >= 10, "corpus too small");
  if (o.pass) o.detail = "100 instances, " + str(corpus.size()) + " malformed cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"example_golden", example_golden},
      {"oracle_equivalence", oracle_equivalence},
      {"bound_attainment", bound_attainment},
      {"subproblem_count_bounds", count_bounds},
      {"enhancement_neutrality", enhancement_neutrality},
      {"index_reduction_safety", index_reduction_safety},
      {"count_trends", count_trends},
      {"conservative_cost_guard", conservative_guard},
      {"format_roundtrip", format_roundtrip},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << std::endl;
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
