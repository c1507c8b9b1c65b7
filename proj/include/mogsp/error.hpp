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

#ifndef MOGSP_ERROR_HPP
#define MOGSP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mogsp {

/// Classifies every failure the library reports. Parse and validation
/// failures get their own kinds so the CLI can map them to exit codes and
/// tests can assert on them without matching message text.
enum class ErrorKind {
  kUsage,
  kMalformedHeader,
  kUnknownDirective,
  kBadInteger,
  kWrongArity,
  kDuplicateDirective,
  kMissingDirective,
  kEmptyGraph,
  kNodeOutOfRange,
  kDegenerateQuery,
  kSelfLoop,
  kDuplicateEdge,
  kNegativeNominal,
  kNegativeDelta,
  kGammaOutOfRange,
  kDimensionMismatch,
  kInvalidPath,
  kBudgetExceeded,
  kUnsupported,
  kIo,
  kInternal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kMalformedHeader: return "malformed-header";
    case ErrorKind::kUnknownDirective: return "unknown-directive";
    case ErrorKind::kBadInteger: return "bad-integer";
    case ErrorKind::kWrongArity: return "wrong-arity";
    case ErrorKind::kDuplicateDirective: return "duplicate-directive";
    case ErrorKind::kMissingDirective: return "missing-directive";
    case ErrorKind::kEmptyGraph: return "empty-graph";
    case ErrorKind::kNodeOutOfRange: return "node-out-of-range";
    case ErrorKind::kDegenerateQuery: return "degenerate-query";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kDuplicateEdge: return "duplicate-edge";
    case ErrorKind::kNegativeNominal: return "negative-nominal";
    case ErrorKind::kNegativeDelta: return "negative-delta";
    case ErrorKind::kGammaOutOfRange: return "gamma-out-of-range";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kInvalidPath: return "invalid-path";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(kind, message, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based source line for parse diagnostics, 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message, std::size_t line) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    out += "[";
    out += to_string(kind);
    out += "] ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace mogsp

#endif  // MOGSP_ERROR_HPP
