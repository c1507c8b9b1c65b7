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
 * @file bench.hpp
 * @brief Budget and uncertainty sweeps producing one CSV row per
 * (instance, algorithm, gamma).
 *
 * A bench spec is JSON:
 *
 *     {"entries": [{
 *        "name": "pop",                  // required, used in instance ids
 *        "family": "population",         // or "instance": "<file>"
 *        "topology": "layered", "nodes": 8, "edges": 16, "layers": 3, "width": 3,
 *        "objectives": 2, "max_nominal": 20, "max_delta": 10,
 *        "seed": 1, "repetitions": 1,
 *        "gamma": [1, 2, 3],             // each value applied to every objective
 *        "x": [10, 50],                  // population uncertainty in percent
 *        "algorithms": ["dsa", "lsa"],   // dsa, dsa-oi, dsa-general, dsa-unchecked, lsa, oracle
 *     }]}
 *
 * Repetition r uses seed + r. Changing gamma does not change the drawn
 * graph or costs, so a gamma sweep runs on one fixed instance. A malformed
 * entry or a failing solve yields a row with a non-ok status and the sweep
 * continues. Rows are sorted by entry, x, repetition, gamma and algorithm
 * position before they are returned, with or without parallel execution.
 */

#ifndef MOGSP_BENCH_HPP
#define MOGSP_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "mogsp/error.hpp"
#include "mogsp/instance_gen.hpp"
#include "mogsp/io.hpp"
#include "mogsp/solver.hpp"

namespace mogsp {

inline constexpr std::string_view kBenchHeader =
    "entry,instance,algo,gamma,x,repetition,seed,front_size,subproblems_considered,subproblems_solved,"
    "labels_created,labels_permanent,micros,status";

struct BenchAlgorithm {
  std::string name;
  Algorithm algorithm = Algorithm::kDsa;
  SolveFlags flags;
};

inline BenchAlgorithm parse_bench_algorithm(const std::string& name) {
  BenchAlgorithm out{name, Algorithm::kDsa, {}};
  out.flags.budget = EnumerationBudget::from_env();
  if (name == "dsa-general") {
    out.flags.force_general = true;
  } else if (name == "dsa-unchecked") {
    out.flags.solution_checking = false;
  } else {
    out.algorithm = parse_algorithm(name);
  }
  return out;
}

struct BenchEntry {
  std::string name;
  std::optional<std::string> instance_file;
  GenSpec gen;
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
  std::vector<std::size_t> gammas{1};
  std::vector<Cost> xs{10};
  std::vector<BenchAlgorithm> algorithms;
};

struct BenchRow {
  std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t> key;
  std::string text;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

inline BenchEntry parse_bench_entry(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kUsage, "bench entry must be an object");
  BenchEntry entry;
  entry.name = j.value("name", std::string());
  if (entry.name.empty()) throw Error(ErrorKind::kUsage, "bench entry needs a non-empty 'name'");
  static const std::vector<std::string> kKeys = {"name",       "family",      "instance", "topology", "nodes",
                                                 "edges",      "layers",      "width",    "objectives",
                                                 "max_nominal", "max_delta",  "seed",     "repetitions",
                                                 "gamma",      "x",           "algorithms"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error(ErrorKind::kUsage, "unknown bench key '" + key + "'");
    }
  }
  if (j.contains("instance")) {
    if (j.contains("family")) throw Error(ErrorKind::kUsage, "give either 'family' or 'instance'");
    entry.instance_file = j.at("instance").get<std::string>();
  } else {
    entry.gen.family = parse_family(j.value("family", std::string("population")));
  }
  entry.gen.topology = parse_topology(j.value("topology", std::string("digraph")));
  entry.gen.nodes = j.value("nodes", entry.gen.nodes);
  entry.gen.edges = j.value("edges", entry.gen.edges);
  entry.gen.layers = j.value("layers", entry.gen.layers);
  entry.gen.width = j.value("width", entry.gen.width);
  entry.gen.objectives = j.value("objectives", entry.gen.objectives);
  entry.gen.max_nominal = j.value("max_nominal", entry.gen.max_nominal);
  entry.gen.max_delta = j.value("max_delta", entry.gen.max_delta);
  entry.seed = j.value("seed", entry.seed);
  entry.repetitions = j.value("repetitions", entry.repetitions);
  if (j.contains("gamma")) entry.gammas = j.at("gamma").get<std::vector<std::size_t>>();
  if (j.contains("x")) entry.xs = j.at("x").get<std::vector<Cost>>();
  for (const auto& name : j.value("algorithms", std::vector<std::string>{"dsa", "lsa"})) {
    entry.algorithms.push_back(parse_bench_algorithm(name));
  }
  if (entry.repetitions == 0 || entry.gammas.empty() || entry.xs.empty() || entry.algorithms.empty()) {
    throw Error(ErrorKind::kUsage, "sweeps must be non-empty");
  }
  return entry;
}

}  // namespace detail

/// Runs a bench spec and returns the CSV text, header included.
inline std::string run_bench(const std::string& spec_text, bool parallel = false, unsigned threads = 0) {
  std::vector<BenchRow> rows;
  nlohmann::json spec;
  if (spec_text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      spec = nlohmann::json::parse(spec_text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kUsage, std::string("bench spec is not valid JSON: ") + e.what());
    }
  }
  const nlohmann::json entries = spec.is_object() ? spec.value("entries", nlohmann::json::array()) : nlohmann::json::array();
  if (!entries.is_array()) throw Error(ErrorKind::kUsage, "'entries' must be an array");

  struct Cell {
    std::size_t entry;
    std::size_t x;
    std::size_t rep;
    std::size_t gamma;
  };
  std::vector<BenchEntry> parsed(entries.size());
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    try {
      parsed[e] = detail::parse_bench_entry(entries[e]);
    } catch (const std::exception& ex) {
      const auto& raw = entries[e];
      const std::string name =
          raw.is_object() && raw.contains("name") && raw["name"].is_string() ? raw["name"].get<std::string>() : "";
      rows.push_back({{e, 0, 0, 0, 0},
                      detail::csv_quote(name) + ",,,,,,,,,,,,," + detail::csv_quote(std::string("error: ") + ex.what())});
      continue;
    }
    for (std::size_t x = 0; x < parsed[e].xs.size(); ++x) {
      for (std::size_t r = 0; r < parsed[e].repetitions; ++r) {
        for (std::size_t g = 0; g < parsed[e].gammas.size(); ++g) cells.push_back({e, x, r, g});
      }
    }
  }

  auto run_cell = [&](const Cell& cell) {
    const BenchEntry& entry = parsed[cell.entry];
    const Cost x = entry.xs[cell.x];
    const std::size_t gamma = entry.gammas[cell.gamma];
    const std::uint64_t seed = entry.seed + cell.rep;
    const std::string id = entry.name + "/x" + std::to_string(x) + "/r" + std::to_string(cell.rep);
    std::vector<BenchRow> out;
    std::optional<Instance> instance;
    std::string failure;
    try {
      if (entry.instance_file) {
        const Instance base = load_instance(*entry.instance_file);
        instance = with_gamma(base, std::vector<std::size_t>(base.objectives(), gamma));
      } else {
        GenSpec gen = entry.gen;
        gen.seed = seed;
        gen.population_uncertainty = x;
        gen.gamma = {gamma};
        instance = generate(gen);
      }
    } catch (const std::exception& ex) {
      failure = std::string("error: ") + ex.what();
    }
    for (std::size_t a = 0; a < entry.algorithms.size(); ++a) {
      const BenchAlgorithm& algo = entry.algorithms[a];
      std::ostringstream row;
      row << detail::csv_quote(entry.name) << ',' << detail::csv_quote(id) << ',' << algo.name << ',' << gamma << ','
          << x << ',' << cell.rep << ',' << seed << ',';
      std::string status = failure;
      if (status.empty()) {
        try {
          const ResultRecord r = solve(*instance, algo.algorithm, algo.flags, id);
          row << r.front.size() << ',' << detail::optional_count(r.subproblems_considered) << ','
              << detail::optional_count(r.subproblems_solved) << ',' << detail::optional_count(r.labels_created) << ','
              << detail::optional_count(r.labels_permanent) << ',' << r.micros << ',';
          status = "ok";
        } catch (const std::exception& ex) {
          status = std::string("error: ") + ex.what();
        }
      }
      if (status != "ok") row << ",,,,,,";
      row << detail::csv_quote(status);
      out.push_back({{cell.entry, cell.x, cell.rep, cell.gamma, a}, row.str()});
    }
    return out;
  };

  std::vector<std::vector<BenchRow>> results(cells.size());
  if (parallel && cells.size() > 1) {
    const unsigned workers = std::max(1u, threads ? threads : std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) results[c] = run_cell(cells[c]);
      });
    }
  } else {
    for (std::size_t c = 0; c < cells.size(); ++c) results[c] = run_cell(cells[c]);
  }
  for (auto& cell_rows : results) rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) { return a.key < b.key; });

  std::string csv(kBenchHeader);
  csv += '\n';
  for (const auto& row : rows) csv += row.text + '\n';
  return csv;
}

}  // namespace mogsp

#endif  // MOGSP_BENCH_HPP
