// Copyright 2026 The BTAS Authors
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

#ifndef BTAS_TOOLS_COMMANDS_HPP_
#define BTAS_TOOLS_COMMANDS_HPP_

// Subcommand bodies of the `btas` tool, kept apart from argument parsing so
// tests can drive them directly.
//
// Exit codes: 0 ok, 1 verification failed, 2 input error, 3 negative cycle
// under --strict, 4 I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "btas/btas.hpp"

namespace btas::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNegativeCycle = 3,
  kIoError = 4,
};

enum class InputFormat { Auto, EdgeList, Matrix };
enum class WeightMode { Auto, Integer, Float };

struct InputSpec {
  std::string path;
  InputFormat format = InputFormat::Auto;
  SentinelConvention sentinel = SentinelConvention::InfToken;
};

struct SolveOptions {
  InputSpec input;
  ApspAlgorithm algorithm = ApspAlgorithm::FloydWarshall;
  WeightMode weights = WeightMode::Auto;
  std::optional<std::string> output;
  bool strict = false;
  std::size_t workers = default_worker_count();
};

struct VerifyOptions {
  InputSpec input;
  std::string result_path;
  WeightMode weights = WeightMode::Auto;
};

struct ConvertOptions {
  InputSpec input;
  std::string to = "inf";  // inf | zero | minus-one | edges
  WeightMode weights = WeightMode::Auto;
  std::optional<std::string> output;
};

struct BenchOptions {
  BenchConfig config;
  std::optional<std::string> output;
};

namespace detail {

// Thrown for unreadable/unwritable files; mapped to kIoError.
struct IoFailure {
  std::string message;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot read '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoFailure{"error reading '" + path + "'"};
  return text.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure{"cannot write '" + path + "'"};
  out << text;
  out.flush();
  if (!out) throw IoFailure{"error writing '" + path + "'"};
}

inline bool is_edge_list(const InputSpec& in) {
  if (in.format != InputFormat::Auto) return in.format == InputFormat::EdgeList;
  const auto ext = std::filesystem::path(in.path).extension().string();
  return ext == ".edges" || ext == ".el";
}

template <WeightScalar T>
TropicalMatrix<T> load_adjacency(const InputSpec& in, const std::string& text) {
  if (is_edge_list(in)) return graph_to_matrix(parse_edge_list<T>(text));
  return parse_matrix<T>(text, in.sentinel);
}

// Runs `body.template operator()<T>()` with T = int64 when every input
// parses as integers (or the mode forces it), otherwise with T = double.
template <class Body>
int with_weight_type(WeightMode mode, Body&& body) {
  if (mode == WeightMode::Float) return body.template operator()<double>();
  if (mode == WeightMode::Integer) return body.template operator()<std::int64_t>();
  try {
    return body.template operator()<std::int64_t>();
  } catch (const ParseError&) {
    return body.template operator()<double>();
  }
}

// Common error mapping; `body` returns an exit code.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoFailure& e) {
    err << "btas: " << e.message << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "btas: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace detail

/// Reads a graph, solves APSP and writes the distance matrix in matrix text
/// format to `output` (or `out`). Nothing is written on error.
inline int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string text = detail::read_file(opts.input.path);
    std::string rendered;
    bool negative = false;
    bool saturated = false;
    detail::with_weight_type(opts.weights, [&]<class T>() {
      const auto adj = detail::load_adjacency<T>(opts.input, text);
      const TileSpec tiles{TileSpec{}.tile_rows, TileSpec{}.tile_cols, opts.workers};
      const auto report = solve_apsp(adj, opts.algorithm, tiles);
      negative = report.negative_cycle;
      saturated = report.distances.saturated();
      rendered = write_matrix(report.distances);
      return 0;
    });
    if (saturated) err << "btas: warning: a path length overflowed and was saturated to inf\n";
    if (negative) {
      err << "btas: warning: negative cycle detected; distances are not shortest paths\n";
      if (opts.strict) return static_cast<int>(kNegativeCycle);
    }
    if (opts.output) {
      detail::write_file(*opts.output, rendered);
    } else {
      out << rendered;
    }
    return static_cast<int>(kOk);
  });
}

/// Checks a distance matrix against its graph; prints the first violated
/// property.
inline int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string input_text = detail::read_file(opts.input.path);
    const std::string result_text = detail::read_file(opts.result_path);
    return detail::with_weight_type(opts.weights, [&]<class T>() {
      const auto adj = detail::load_adjacency<T>(opts.input, input_text);
      const auto dist = parse_matrix<T>(result_text, SentinelConvention::InfToken);
      const ApspCheck check = check_apsp(adj, dist);
      if (check.ok()) {
        out << "ok\n";
        return static_cast<int>(kOk);
      }
      out << "verification failed: " << check.describe() << '\n';
      return static_cast<int>(kVerifyFailed);
    });
  });
}

/// Translates between the edge list, the `inf` matrix format and the two
/// bare-grid sentinel conventions.
inline int cmd_convert(const ConvertOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string text = detail::read_file(opts.input.path);
    std::string rendered;
    detail::with_weight_type(opts.weights, [&]<class T>() {
      const auto adj = detail::load_adjacency<T>(opts.input, text);
      if (opts.to == "edges") {
        rendered = write_edge_list(matrix_to_graph(adj));
      } else {
        rendered = write_grid(adj, parse_sentinel(opts.to));
      }
      return 0;
    });
    if (opts.output) {
      detail::write_file(*opts.output, rendered);
    } else {
      out << rendered;
    }
    return static_cast<int>(kOk);
  });
}

/// Runs the sweep and writes CSV to `output` (or `out`). With an output
/// file, the instance parameters go to `<output>.meta` as key=value lines.
inline int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto records = run_benchmark(opts.config, [&](const BenchRecord& r) {
      err << to_string(r.algorithm) << " n=" << r.n << " workers=" << r.worker_count;
      if (r.failed) {
        err << " FAILED (out of memory)\n";
      } else {
        err << " median=" << r.median_seconds << "s\n";
      }
    });
    std::ostringstream csv;
    write_csv(records, csv);
    if (!opts.output) {
      out << csv.str();
      return static_cast<int>(kOk);
    }
    detail::write_file(*opts.output, csv.str());
    const auto& c = opts.config;
    std::ostringstream meta;
    meta << "generator=" << kRandomGeneratorName << '\n'
         << "seed=" << c.seed << '\n'
         << "edge_probability=" << c.edge_probability << '\n'
         << "weight_low=" << c.weight_low << '\n'
         << "weight_high=" << c.weight_high << '\n'
         << "repetitions=" << c.repetitions << '\n'
         << "timer=steady_clock, 1 warm-up run excluded, median reported\n";
    detail::write_file(*opts.output + ".meta", meta.str());
    return static_cast<int>(kOk);
  });
}

}  // namespace btas::cli

#endif  // BTAS_TOOLS_COMMANDS_HPP_
