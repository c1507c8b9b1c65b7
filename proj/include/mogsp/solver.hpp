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
 * @file solver.hpp
 * @brief Named algorithm dispatch shared by the CLI and the bench harness.
 */

#ifndef MOGSP_SOLVER_HPP
#define MOGSP_SOLVER_HPP

#include <chrono>
#include <string>
#include <string_view>

#include "mogsp/bottleneck.hpp"
#include "mogsp/dsa.hpp"
#include "mogsp/error.hpp"
#include "mogsp/io.hpp"
#include "mogsp/oracle.hpp"
#include "mogsp/pareto.hpp"

namespace mogsp {

enum class Algorithm { kDsa, kDsaOi, kLsa, kOracle };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kDsa: return "dsa";
    case Algorithm::kDsaOi: return "dsa-oi";
    case Algorithm::kLsa: return "lsa";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

inline Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kDsa, Algorithm::kDsaOi, Algorithm::kLsa, Algorithm::kOracle}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorKind::kUsage, "unknown algorithm '" + std::string(name) + "'");
}

struct SolveFlags {
  bool solution_checking = true;
  /// One DSA loop per objective even when objectives share an order.
  bool force_general = false;
  bool parallel = false;
  EnumerationBudget budget{};
};

inline bool pairwise_nondominated(const Front& front) {
  for (std::size_t a = 0; a < front.size(); ++a) {
    for (std::size_t b = 0; b < front.size(); ++b) {
      if (a != b && weakly_dominates(front[a].cost, front[b].cost)) return false;
    }
  }
  return true;
}

/// Runs one algorithm and packages the front with its counters and
/// wall time in microseconds.
inline ResultRecord solve(const Instance& instance, Algorithm algorithm, const SolveFlags& flags, std::string id) {
  const auto start = std::chrono::steady_clock::now();
  Front front;
  std::optional<std::size_t> considered, solved, created, permanent;
  switch (algorithm) {
    case Algorithm::kDsa:
    case Algorithm::kDsaOi: {
      DsaOptions options;
      options.solution_checking = flags.solution_checking;
      options.collapse_classes = !flags.force_general;
      options.parallel = flags.parallel;
      DsaReport report = algorithm == Algorithm::kDsaOi ? solve_oi(instance, options) : solve_general(instance, options);
      front = std::move(report.front);
      considered = report.subproblems_considered;
      solved = report.subproblems_solved;
      created = report.labels_created;
      break;
    }
    case Algorithm::kLsa: {
      LsaReport report = solve_lsa(instance);
      front = std::move(report.front);
      created = report.labels_created;
      permanent = report.labels_permanent;
      break;
    }
    case Algorithm::kOracle: front = oracle_front(instance, flags.budget); break;
  }
  const auto stop = std::chrono::steady_clock::now();

  if (!pairwise_nondominated(front)) throw Error(ErrorKind::kInternal, "front is not pairwise non-dominated");
  ResultRecord record = make_record(instance, std::move(id), std::string(to_string(algorithm)), front);
  record.subproblems_considered = considered;
  record.subproblems_solved = solved;
  record.labels_created = created;
  record.labels_permanent = permanent;
  record.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  return record;
}

}  // namespace mogsp

#endif  // MOGSP_SOLVER_HPP
