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
 * @file io.hpp
 * @brief Instance text format and result CSV.
 *
 * Instance format, one directive per line, `#` starts a comment:
 *
 *     mo-gamma-sp v1
 *     k <k>
 *     gamma <g_1> ... <g_k>
 *     nodes <n>
 *     query <s> <t>
 *     edge <tail> <head> <nominal_1> <delta_1> ... <nominal_k> <delta_k>
 *
 * The header comes first; the four scalar directives appear exactly once in
 * any order; edge ids are assigned in file order. All values are integers.
 *
 * Result CSV header:
 *
 *     instance,algo,gamma,front_index,z1,...,zk,path,subproblems_considered,
 *     subproblems_solved,labels_created,labels_permanent,micros
 *
 * One row per front entry. `gamma` joins the budgets with ';', `path` joins
 * the node sequence with '-'. Counters that do not apply to an algorithm are
 * left empty. An empty front is a header-only file.
 */

#ifndef MOGSP_IO_HPP
#define MOGSP_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mogsp/error.hpp"
#include "mogsp/model.hpp"
#include "mogsp/pareto.hpp"

namespace mogsp {

inline constexpr std::string_view kFormatHeader = "mo-gamma-sp v1";

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

inline std::int64_t parse_int(std::string_view token, std::size_t line, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kBadInteger, "expected integer for " + std::string(what) + ", got '" + std::string(token) + "'",
                line);
  }
  return value;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path + "' failed");
}

}  // namespace detail

/// Parses the instance text format. Every rejection carries the offending
/// line number and an ErrorKind.
inline Instance parse_instance(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
  };
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    for (std::string_view raw : detail::split(text, '\n')) {
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      auto tokens = detail::split_ws(raw);
      if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
    }
  }
  if (lines.empty()) throw Error(ErrorKind::kMalformedHeader, "empty input, expected '" + std::string(kFormatHeader) + "'", 1);
  {
    const auto& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "mo-gamma-sp" || head.tokens[1] != "v1") {
      throw Error(ErrorKind::kMalformedHeader, "expected '" + std::string(kFormatHeader) + "'", head.number);
    }
  }

  std::optional<std::size_t> k;
  std::optional<std::size_t> nodes;
  std::optional<std::pair<std::int64_t, std::int64_t>> query;
  const Line* gamma_line = nullptr;
  std::size_t query_line = 0;
  std::vector<const Line*> edge_lines;
  auto once = [](bool seen, const Line& line) {
    if (seen) throw Error(ErrorKind::kDuplicateDirective, "directive '" + std::string(line.tokens[0]) + "' repeated", line.number);
  };
  auto arity = [](const Line& line, std::size_t expected) {
    if (line.tokens.size() != expected) {
      throw Error(ErrorKind::kWrongArity, "'" + std::string(line.tokens[0]) + "' expects " + std::to_string(expected - 1) +
                                              " values, got " + std::to_string(line.tokens.size() - 1),
                  line.number);
    }
  };

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string_view directive = line.tokens[0];
    if (directive == "k") {
      once(k.has_value(), line);
      arity(line, 2);
      const auto value = detail::parse_int(line.tokens[1], line.number, "k");
      if (value < 1) throw Error(ErrorKind::kDimensionMismatch, "k must be at least 1", line.number);
      k = static_cast<std::size_t>(value);
    } else if (directive == "nodes") {
      once(nodes.has_value(), line);
      arity(line, 2);
      const auto value = detail::parse_int(line.tokens[1], line.number, "nodes");
      if (value < 1) throw Error(ErrorKind::kEmptyGraph, "node count must be positive", line.number);
      nodes = static_cast<std::size_t>(value);
    } else if (directive == "query") {
      once(query.has_value(), line);
      arity(line, 3);
      query_line = line.number;
      query = {detail::parse_int(line.tokens[1], line.number, "source"),
               detail::parse_int(line.tokens[2], line.number, "target")};
    } else if (directive == "gamma") {
      once(gamma_line != nullptr, line);
      gamma_line = &line;
    } else if (directive == "edge") {
      edge_lines.push_back(&line);
    } else {
      throw Error(ErrorKind::kUnknownDirective, "unknown directive '" + std::string(directive) + "'", line.number);
    }
  }
  const std::size_t last = lines.back().number;
  if (!k) throw Error(ErrorKind::kMissingDirective, "missing 'k'", last);
  if (!gamma_line) throw Error(ErrorKind::kMissingDirective, "missing 'gamma'", last);
  if (!nodes) throw Error(ErrorKind::kMissingDirective, "missing 'nodes'", last);
  if (!query) throw Error(ErrorKind::kMissingDirective, "missing 'query'", last);

  const std::size_t n = *nodes;
  const std::size_t m = edge_lines.size();
  auto node_id = [&](std::int64_t value, std::size_t line, std::string_view what) {
    if (value < 0 || static_cast<std::uint64_t>(value) >= n) {
      throw Error(ErrorKind::kNodeOutOfRange,
                  std::string(what) + " " + std::to_string(value) + " outside [0, " + std::to_string(n) + ")", line);
    }
    return static_cast<NodeId>(value);
  };

  const NodeId source = node_id(query->first, query_line, "source");
  const NodeId target = node_id(query->second, query_line, "target");
  if (source == target) throw Error(ErrorKind::kDegenerateQuery, "source and target must differ", query_line);

  arity(*gamma_line, *k + 1);
  std::vector<std::size_t> gamma;
  for (std::size_t i = 0; i < *k; ++i) {
    const auto value = detail::parse_int(gamma_line->tokens[i + 1], gamma_line->number, "gamma");
    if (value < 0 || static_cast<std::uint64_t>(value) > m) {
      throw Error(ErrorKind::kGammaOutOfRange, "gamma_" + std::to_string(i + 1) + " = " + std::to_string(value) +
                                                   " must lie in [0, |E| = " + std::to_string(m) + "]",
                  gamma_line->number);
    }
    gamma.push_back(static_cast<std::size_t>(value));
  }

  std::vector<Arc> arcs;
  std::vector<Cost> nominal;
  std::vector<Cost> delta;
  std::vector<std::pair<NodeId, NodeId>> seen;
  for (const Line* line : edge_lines) {
    arity(*line, 3 + 2 * *k);
    const NodeId tail = node_id(detail::parse_int(line->tokens[1], line->number, "tail"), line->number, "tail");
    const NodeId head = node_id(detail::parse_int(line->tokens[2], line->number, "head"), line->number, "head");
    if (tail == head) throw Error(ErrorKind::kSelfLoop, "self-loop at node " + std::to_string(tail), line->number);
    const std::pair<NodeId, NodeId> key{tail, head};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "parallel edge " + std::to_string(tail) + " -> " + std::to_string(head) + " (parallel edges are not allowed)",
                  line->number);
    }
    seen.push_back(key);
    for (std::size_t i = 0; i < *k; ++i) {
      const Cost c = detail::parse_int(line->tokens[3 + 2 * i], line->number, "nominal cost");
      const Cost d = detail::parse_int(line->tokens[4 + 2 * i], line->number, "interval length");
      if (c < 0) {
        throw Error(ErrorKind::kNegativeNominal,
                    "negative nominal cost " + std::to_string(c) + " for objective " + std::to_string(i + 1) +
                        "; edge costs must be conservative (every cycle non-negative in every scenario), so nominal "
                        "costs must be >= 0",
                    line->number);
      }
      if (d < 0) {
        throw Error(ErrorKind::kNegativeDelta,
                    "negative interval length " + std::to_string(d) + " for objective " + std::to_string(i + 1) +
                        "; cost intervals [nominal, nominal + delta] require delta >= 0",
                    line->number);
      }
      nominal.push_back(c);
      delta.push_back(d);
    }
    arcs.push_back({tail, head});
  }

  return Instance(Graph(n, std::move(arcs)), *k, std::move(nominal), std::move(delta), std::move(gamma), source, target);
}

inline std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << kFormatHeader << '\n';
  out << "k " << instance.objectives() << '\n';
  out << "gamma";
  for (std::size_t g : instance.gammas()) out << ' ' << g;
  out << '\n';
  out << "nodes " << instance.node_count() << '\n';
  out << "query " << instance.source() << ' ' << instance.target() << '\n';
  for (EdgeId e = 0; e < instance.edge_count(); ++e) {
    const Arc& a = instance.graph().arc(e);
    out << "edge " << a.tail << ' ' << a.head;
    for (std::size_t i = 0; i < instance.objectives(); ++i) out << ' ' << instance.nominal(e, i) << ' ' << instance.delta(e, i);
    out << '\n';
  }
  return out.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(detail::read_file(path)); }

inline void save_instance(const std::string& path, const Instance& instance) {
  detail::write_file(path, serialize_instance(instance));
}

// ---------------------------------------------------------------------------
// Result records
// ---------------------------------------------------------------------------

struct ResultRow {
  CostVector cost;
  std::vector<NodeId> nodes;
};

struct ResultRecord {
  std::string instance;
  std::string algo;
  std::vector<std::size_t> gamma;
  std::size_t objectives = 0;
  std::vector<ResultRow> front;
  std::optional<std::size_t> subproblems_considered;
  std::optional<std::size_t> subproblems_solved;
  std::optional<std::size_t> labels_created;
  std::optional<std::size_t> labels_permanent;
  std::int64_t micros = 0;
};

inline ResultRecord make_record(const Instance& instance, std::string id, std::string algo, const Front& front) {
  ResultRecord record;
  record.instance = std::move(id);
  record.algo = std::move(algo);
  record.gamma.assign(instance.gammas().begin(), instance.gammas().end());
  record.objectives = instance.objectives();
  for (const auto& entry : front) {
    record.front.push_back(ResultRow{entry.cost, path_nodes(instance.graph(), instance.source(), entry.path)});
  }
  return record;
}

inline std::string result_csv_header(std::size_t objectives) {
  std::string header = "instance,algo,gamma,front_index";
  for (std::size_t i = 1; i <= objectives; ++i) header += ",z" + std::to_string(i);
  header += ",path,subproblems_considered,subproblems_solved,labels_created,labels_permanent,micros";
  return header;
}

namespace detail {

inline std::string join_gamma(const std::vector<std::size_t>& gamma) {
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) out += (i ? ";" : "") + std::to_string(gamma[i]);
  return out;
}

inline std::string optional_count(const std::optional<std::size_t>& value) {
  return value ? std::to_string(*value) : std::string();
}

}  // namespace detail

/// Rows of a record without the header.
inline std::string result_csv_rows(const ResultRecord& record) {
  std::ostringstream out;
  for (std::size_t r = 0; r < record.front.size(); ++r) {
    const auto& row = record.front[r];
    out << record.instance << ',' << record.algo << ',' << detail::join_gamma(record.gamma) << ',' << r;
    for (Cost z : row.cost) out << ',' << z;
    out << ',';
    for (std::size_t v = 0; v < row.nodes.size(); ++v) out << (v ? "-" : "") << row.nodes[v];
    out << ',' << detail::optional_count(record.subproblems_considered) << ','
        << detail::optional_count(record.subproblems_solved) << ',' << detail::optional_count(record.labels_created) << ','
        << detail::optional_count(record.labels_permanent) << ',' << record.micros << '\n';
  }
  return out.str();
}

inline std::string result_csv(const ResultRecord& record) {
  return result_csv_header(record.objectives) + "\n" + result_csv_rows(record);
}

/// Reads a result CSV back. Only the fields needed for comparison are
/// interpreted strictly: the header layout, objective values and paths.
inline ResultRecord parse_result_csv(std::string_view text) {
  auto lines = detail::split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorKind::kMalformedHeader, "empty result file", 1);
  auto strip = [](std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
  };
  const auto header = detail::split(strip(lines[0]), ',');
  constexpr std::size_t kFixed = 4 + 6;
  if (header.size() < kFixed + 1 || header[0] != "instance" || header[3] != "front_index") {
    throw Error(ErrorKind::kMalformedHeader, "not a result CSV header", 1);
  }
  ResultRecord record;
  record.objectives = header.size() - kFixed;
  if (result_csv_header(record.objectives) != strip(lines[0])) {
    throw Error(ErrorKind::kMalformedHeader, "unexpected result CSV columns", 1);
  }
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = detail::split(strip(lines[r]), ',');
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::kWrongArity, "row has " + std::to_string(fields.size()) + " fields, expected " +
                                              std::to_string(header.size()),
                  r + 1);
    }
    if (r == 1) {
      record.instance = std::string(fields[0]);
      record.algo = std::string(fields[1]);
      for (auto g : detail::split(fields[2], ';')) {
        if (!g.empty()) record.gamma.push_back(static_cast<std::size_t>(detail::parse_int(g, r + 1, "gamma")));
      }
    }
    ResultRow row;
    for (std::size_t i = 0; i < record.objectives; ++i) row.cost.push_back(detail::parse_int(fields[4 + i], r + 1, "objective value"));
    for (auto v : detail::split(fields[4 + record.objectives], '-')) {
      if (!v.empty()) row.nodes.push_back(static_cast<NodeId>(detail::parse_int(v, r + 1, "path node")));
    }
    record.front.push_back(std::move(row));
  }
  return record;
}

inline std::vector<CostVector> value_set(const ResultRecord& record) {
  std::vector<CostVector> values;
  for (const auto& row : record.front) values.push_back(row.cost);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace mogsp

#endif  // MOGSP_IO_HPP
