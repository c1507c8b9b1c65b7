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
 * @file cli.hpp
 * @brief The `mogsp` command line: solve, compare, bench, generate.
 *
 * Exit codes:
 *   0  success
 *   1  compare: value sets differ
 *   2  usage error
 *   3  input could not be parsed or failed validation
 *   4  infeasible: the front is empty (the result file is still written)
 *   5  oracle budget exceeded
 *   6  unsupported request, e.g. dsa-oi on an instance without a common order
 *   7  file could not be read or written
 *   8  internal error
 */

#ifndef MOGSP_CLI_HPP
#define MOGSP_CLI_HPP

#include <algorithm>
#include <iostream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mogsp/bench.hpp"
#include "mogsp/dsa.hpp"
#include "mogsp/error.hpp"
#include "mogsp/instance_gen.hpp"
#include "mogsp/io.hpp"
#include "mogsp/solver.hpp"

namespace mogsp {

enum ExitCode : int {
  kExitOk = 0,
  kExitDifferent = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitInfeasible = 4,
  kExitBudget = 5,
  kExitUnsupported = 6,
  kExitIo = 7,
  kExitInternal = 8,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return kExitUsage;
    case ErrorKind::kBudgetExceeded: return kExitBudget;
    case ErrorKind::kUnsupported: return kExitUnsupported;
    case ErrorKind::kIo: return kExitIo;
    case ErrorKind::kInternal:
    case ErrorKind::kInvalidPath: return kExitInternal;
    default: return kExitParse;
  }
}

namespace detail {

inline void print_value_set(std::ostream& out, const char* label, const std::vector<CostVector>& values) {
  for (const auto& v : values) {
    out << label << " (";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")\n";
  }
}

inline void print_summary(std::ostream& out, const Instance& instance, const ResultRecord& record) {
  out << "algorithm:   " << record.algo << '\n';
  out << "instance:    " << record.instance << " (" << instance.node_count() << " nodes, " << instance.edge_count()
      << " edges, k = " << instance.objectives() << ", gamma =";
  for (std::size_t g : record.gamma) out << ' ' << g;
  out << ")\n";
  if (instance.objectives() > 1) {
    out << "order:       " << to_string(detect_order_structure(instance).kind) << '\n';
  }
  if (record.subproblems_considered) {
    out << "subproblems: " << *record.subproblems_considered << " considered, " << *record.subproblems_solved
        << " solved\n";
  }
  if (record.labels_created) out << "labels:      " << *record.labels_created << " created\n";
  out << "time:        " << record.micros << " us\n";
  out << "front:       " << record.front.size() << (record.front.size() == 1 ? " point\n" : " points\n");
  for (const auto& row : record.front) {
    out << "  (";
    for (std::size_t i = 0; i < row.cost.size(); ++i) out << (i ? ", " : "") << row.cost[i];
    out << ")  ";
    for (std::size_t v = 0; v < row.nodes.size(); ++v) out << (v ? " -> " : "") << row.nodes[v];
    out << '\n';
  }
}

}  // namespace detail

/// Entry point of the `mogsp` binary; streams are injectable for tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Multi-objective shortest paths under budgeted interval uncertainty", "mogsp"};
  app.require_subcommand(1);

  std::string algo = "dsa";
  std::string input;
  std::string output;
  bool no_checking = false;
  bool force_general = false;
  bool parallel = false;
  bool quiet = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("--algo", algo, "dsa | dsa-oi | lsa | oracle")
      ->check(CLI::IsMember({"dsa", "dsa-oi", "lsa", "oracle"}));
  solve_cmd->add_option("--input", input, "Instance file")->required();
  solve_cmd->add_option("--output", output, "Result CSV");
  solve_cmd->add_flag("--no-solution-checking", no_checking, "Solve every DSA subproblem");
  solve_cmd->add_flag("--force-general", force_general, "One DSA loop per objective");
  solve_cmd->add_flag("--parallel", parallel, "Solve DSA subproblems concurrently");
  solve_cmd->add_flag("--quiet", quiet, "No summary on stdout");

  std::string front_a;
  std::string front_b;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the value sets of two result files");
  compare_cmd->add_option("front_a", front_a, "Result CSV")->required();
  compare_cmd->add_option("front_b", front_b, "Result CSV")->required();

  std::string bench_spec;
  std::string bench_output;
  bool bench_parallel = false;
  unsigned bench_threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Run a JSON bench spec");
  bench_cmd->add_option("spec", bench_spec, "Bench spec file")->required();
  bench_cmd->add_option("--output", bench_output, "CSV output, stdout when omitted");
  bench_cmd->add_flag("--parallel", bench_parallel, "Run cells concurrently");
  bench_cmd->add_option("--threads", bench_threads, "Worker count for --parallel");

  GenSpec gen;
  std::string family = "population";
  std::string topology = "digraph";
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("generate", "Write a seeded random instance");
  gen_cmd->add_option("--family", family, "random | population | oi | correlated | three-objective");
  gen_cmd->add_option("--topology", topology, "digraph | layered | grid");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--nodes", gen.nodes);
  gen_cmd->add_option("--edges", gen.edges);
  gen_cmd->add_option("--layers", gen.layers);
  gen_cmd->add_option("--width", gen.width);
  gen_cmd->add_option("--objectives", gen.objectives, "Objective count of the random family");
  gen_cmd->add_option("--gamma", gen.gamma, "One budget, or one per objective")->expected(1, -1);
  gen_cmd->add_option("--x", gen.population_uncertainty, "Population uncertainty in percent");
  gen_cmd->add_option("--max-nominal", gen.max_nominal);
  gen_cmd->add_option("--max-delta", gen.max_delta);
  gen_cmd->add_option("--output", gen_output, "Instance file, stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mogsp: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const Instance instance = load_instance(input);
      SolveFlags flags;
      flags.solution_checking = !no_checking;
      flags.force_general = force_general;
      flags.parallel = parallel;
      flags.budget = EnumerationBudget::from_env();
      const ResultRecord record = solve(instance, parse_algorithm(algo), flags, input);
      if (!output.empty()) detail::write_file(output, result_csv(record));
      if (!quiet) detail::print_summary(out, instance, record);
      if (record.front.empty()) {
        err << "mogsp: target not reachable from source, front is empty\n";
        return kExitInfeasible;
      }
      return kExitOk;
    }
    if (*compare_cmd) {
      const auto a = value_set(parse_result_csv(detail::read_file(front_a)));
      const auto b = value_set(parse_result_csv(detail::read_file(front_b)));
      if (a == b) {
        out << "equal: " << a.size() << " values\n";
        return kExitOk;
      }
      std::vector<CostVector> only_a;
      std::vector<CostVector> only_b;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
      out << "different: " << only_a.size() << " only in " << front_a << ", " << only_b.size() << " only in "
          << front_b << '\n';
      detail::print_value_set(out, "  <", only_a);
      detail::print_value_set(out, "  >", only_b);
      return kExitDifferent;
    }
    if (*bench_cmd) {
      const std::string csv = run_bench(detail::read_file(bench_spec), bench_parallel, bench_threads);
      if (bench_output.empty()) {
        out << csv;
      } else {
        detail::write_file(bench_output, csv);
      }
      return kExitOk;
    }
    if (*gen_cmd) {
      gen.family = parse_family(family);
      gen.topology = parse_topology(topology);
      const std::string text = serialize_instance(generate(gen));
      if (gen_output.empty()) {
        out << text;
      } else {
        detail::write_file(gen_output, text);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "mogsp: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "mogsp: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mogsp

#endif  // MOGSP_CLI_HPP
