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

#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using btas::cli::InputFormat;
using btas::cli::WeightMode;

const std::map<std::string, InputFormat> kFormats{
    {"auto", InputFormat::Auto}, {"edges", InputFormat::EdgeList}, {"matrix", InputFormat::Matrix}};
const std::map<std::string, WeightMode> kModes{
    {"auto", WeightMode::Auto}, {"int", WeightMode::Integer}, {"float", WeightMode::Float}};
const std::map<std::string, btas::SentinelConvention> kSentinels{
    {"inf", btas::SentinelConvention::InfToken},
    {"zero", btas::SentinelConvention::ZeroMeansNoEdge},
    {"minus-one", btas::SentinelConvention::MinusOneMeansNoEdge}};

void add_input_options(CLI::App* cmd, btas::cli::InputSpec& in, WeightMode& mode) {
  cmd->add_option("input", in.path, "Graph file (edge list or matrix)")->required();
  cmd->add_option("--format", in.format, "Input format; auto picks edges for *.edges / *.el")
      ->transform(CLI::CheckedTransformer(kFormats));
  cmd->add_option("--sentinel", in.sentinel, "No-edge convention of matrix input")
      ->transform(CLI::CheckedTransformer(kSentinels));
  cmd->add_option("--numeric", mode, "Weight arithmetic; auto uses int when possible")
      ->transform(CLI::CheckedTransformer(kModes));
}

bool parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto r1 = std::from_chars(b, b + colon, lo);
  const auto r2 = std::from_chars(b + colon + 1, e, hi);
  return r1.ec == std::errc{} && r1.ptr == b + colon && r2.ec == std::errc{} && r2.ptr == e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical algebra kernels: all-pairs shortest paths and benchmarks"};
  app.require_subcommand(1);

  btas::cli::SolveOptions solve;
  std::string solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "Solve all-pairs shortest paths");
  add_input_options(solve_cmd, solve.input, solve.weights);
  solve_cmd->add_option("--algorithm", solve.algorithm, "fw or square")
      ->transform(CLI::CheckedTransformer(std::map<std::string, btas::ApspAlgorithm>{
          {"fw", btas::ApspAlgorithm::FloydWarshall},
          {"square", btas::ApspAlgorithm::RepeatedSquaring}}));
  solve_cmd->add_option("--out", solve_out, "Output file (default stdout)");
  solve_cmd->add_flag("--strict", solve.strict, "Exit 3 on a negative cycle");
  solve_cmd->add_option("--workers", solve.workers, "Worker threads for matmul")
      ->check(CLI::PositiveNumber);

  btas::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a distance matrix against a graph");
  add_input_options(verify_cmd, verify.input, verify.weights);
  verify_cmd->add_option("result", verify.result_path, "Distance matrix file")->required();

  btas::cli::ConvertOptions convert;
  std::string convert_out;
  auto* convert_cmd = app.add_subcommand("convert", "Translate between graph formats");
  add_input_options(convert_cmd, convert.input, convert.weights);
  convert_cmd->add_option("--to", convert.to, "inf, zero, minus-one or edges")
      ->check(CLI::IsMember({"inf", "zero", "minus-one", "edges"}));
  convert_cmd->add_option("--out", convert_out, "Output file (default stdout)");

  btas::cli::BenchOptions bench;
  std::string bench_out;
  std::string weights = "1:100";
  std::vector<std::string> algorithms{"fw", "square", "matmul"};
  auto* bench_cmd = app.add_subcommand("bench", "Run the scaling sweep and emit CSV");
  bench_cmd->add_option("--sizes", bench.config.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--reps", bench.config.repetitions, "Timed runs per record")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", bench.config.worker_counts, "Worker counts")->delimiter(',');
  bench_cmd->add_option("--algorithms", algorithms, "fw, square, matmul")
      ->delimiter(',')
      ->check(CLI::IsMember({"fw", "square", "matmul"}));
  bench_cmd->add_option("--seed", bench.config.seed, "Instance seed");
  bench_cmd->add_option("--edge-prob", bench.config.edge_probability, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--weights", weights, "Integer weight range lo:hi");
  bench_cmd->add_option("--out", bench_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : btas::cli::kInputError;
  }

  if (*solve_cmd) {
    if (!solve_out.empty()) solve.output = solve_out;
    return btas::cli::cmd_solve(solve, std::cout, std::cerr);
  }
  if (*verify_cmd) return btas::cli::cmd_verify(verify, std::cout, std::cerr);
  if (*convert_cmd) {
    if (!convert_out.empty()) convert.output = convert_out;
    return btas::cli::cmd_convert(convert, std::cout, std::cerr);
  }
  if (!parse_range(weights, bench.config.weight_low, bench.config.weight_high)) {
    std::cerr << "btas: --weights expects lo:hi integers\n";
    return btas::cli::kInputError;
  }
  bench.config.algorithms.clear();
  for (const auto& a : algorithms) {
    bench.config.algorithms.push_back(btas::parse_bench_algorithm(a));
  }
  if (!bench_out.empty()) bench.output = bench_out;
  return btas::cli::cmd_bench(bench, std::cout, std::cerr);
}
