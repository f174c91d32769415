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

#ifndef BTAS_BENCH_HPP_
#define BTAS_BENCH_HPP_

// Scaling sweep: time each solver on seeded random instances over a list
// of sizes and worker counts, and write the results as CSV.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <new>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "btas/apsp.hpp"
#include "btas/error.hpp"
#include "btas/graph_io.hpp"
#include "btas/matrix.hpp"

namespace btas {

enum class BenchAlgorithm { FloydWarshall, RepeatedSquaring, MatmulOnly };

inline std::string to_string(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::FloydWarshall: return "fw";
    case BenchAlgorithm::RepeatedSquaring: return "square";
    case BenchAlgorithm::MatmulOnly: return "matmul";
  }
  return "unknown";
}

inline BenchAlgorithm parse_bench_algorithm(std::string_view name) {
  if (name == "fw") return BenchAlgorithm::FloydWarshall;
  if (name == "square") return BenchAlgorithm::RepeatedSquaring;
  if (name == "matmul") return BenchAlgorithm::MatmulOnly;
  throw InvalidArgument("unknown algorithm '" + std::string(name) +
                        "' (expected fw, square or matmul)");
}

/// Exact median; the mean of the two middle values for even counts.
inline double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

struct BenchRecord {
  BenchAlgorithm algorithm = BenchAlgorithm::FloydWarshall;
  std::size_t n = 0;
  std::size_t repetitions = 0;
  std::vector<double> wall_times;  // seconds
  double median_seconds = 0.0;
  std::size_t worker_count = 1;
  std::uint64_t seed = 0;
  /// FNV-1a of the result matrix text; equal checksums mean equal results.
  std::uint64_t checksum = 0;
  bool failed = false;

  double min_seconds() const {
    return wall_times.empty() ? 0.0 : *std::min_element(wall_times.begin(), wall_times.end());
  }
  double max_seconds() const {
    return wall_times.empty() ? 0.0 : *std::max_element(wall_times.begin(), wall_times.end());
  }
};

struct BenchConfig {
  std::vector<std::size_t> sizes{4, 16, 32, 64, 128};
  std::size_t repetitions = 5;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::FloydWarshall,
                                         BenchAlgorithm::RepeatedSquaring,
                                         BenchAlgorithm::MatmulOnly};
  double edge_probability = 0.5;
  std::int64_t weight_low = 1;
  std::int64_t weight_high = 100;
  std::uint64_t seed = 1;
  std::vector<std::size_t> worker_counts{1, 4};

  void validate() const {
    if (sizes.empty()) throw InvalidArgument("benchmark needs at least one size");
    if (algorithms.empty()) throw InvalidArgument("benchmark needs at least one algorithm");
    if (worker_counts.empty()) throw InvalidArgument("benchmark needs at least one worker count");
    if (repetitions == 0) throw InvalidArgument("repetitions must be at least 1");
    if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
      throw InvalidArgument("sizes must be positive");
    }
    if (std::find(worker_counts.begin(), worker_counts.end(), std::size_t{0}) !=
        worker_counts.end()) {
      throw InvalidArgument("worker counts must be positive");
    }
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
      throw InvalidArgument("edge probability must lie in [0, 1]");
    }
    if (weight_low > weight_high) throw InvalidArgument("weight range needs low <= high");
  }
};

inline std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of the instance for size n; depends only on (seed, n).
inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t n) noexcept {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(n) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline TropicalMatrix<std::int64_t> bench_instance(const BenchConfig& config, std::size_t n) {
  return graph_to_matrix(random_graph<std::int64_t>(n, config.edge_probability,
                                                    config.weight_low, config.weight_high,
                                                    instance_seed(config.seed, n)));
}

/// Runs the sweep sequentially in (algorithm, n, worker_count) order. Each
/// record gets one untimed warm-up run followed by `repetitions` timed
/// runs. A run that exhausts memory marks its record failed and the sweep
/// moves on. `progress`, if set, is called after every record.
inline std::vector<BenchRecord> run_benchmark(
    const BenchConfig& config,
    const std::function<void(const BenchRecord&)>& progress = {}) {
  using Clock = std::chrono::steady_clock;
  config.validate();
  std::vector<BenchRecord> records;
  for (const BenchAlgorithm algorithm : config.algorithms) {
    for (const std::size_t n : config.sizes) {
      for (const std::size_t workers : config.worker_counts) {
        BenchRecord record;
        record.algorithm = algorithm;
        record.n = n;
        record.repetitions = config.repetitions;
        record.worker_count = workers;
        record.seed = config.seed;
        try {
          const auto adj = bench_instance(config, n);
          const TileSpec tiles{TileSpec{}.tile_rows, TileSpec{}.tile_cols, workers};
          auto solve = [&]() -> TropicalMatrix<std::int64_t> {
            switch (algorithm) {
              case BenchAlgorithm::FloydWarshall: return floyd_warshall(adj).distances;
              case BenchAlgorithm::RepeatedSquaring: return apsp_by_squaring(adj, tiles).distances;
              case BenchAlgorithm::MatmulOnly: return matmul(adj, adj, tiles);
            }
            return adj;
          };
          record.checksum = fnv1a(write_matrix(solve()));  // warm-up
          for (std::size_t r = 0; r < config.repetitions; ++r) {
            const auto start = Clock::now();
            const auto result = solve();
            const auto stop = Clock::now();
            record.wall_times.push_back(std::chrono::duration<double>(stop - start).count());
          }
          record.median_seconds = median(record.wall_times);
        } catch (const std::bad_alloc&) {
          record.failed = true;
          record.wall_times.clear();
          record.median_seconds = 0.0;
        }
        if (progress) progress(record);
        records.push_back(std::move(record));
      }
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader =
    "algorithm,n,worker_count,repetitions,median_seconds,min_seconds,max_seconds,seed";

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Header plus one row per record, ordered by (algorithm, n, worker_count).
/// Timing columns of failed records are left empty.
inline void write_csv(std::vector<BenchRecord> records, std::ostream& out) {
  if (records.empty()) throw InvalidArgument("no benchmark records to write");
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::make_tuple(to_string(a.algorithm), a.n, a.worker_count) <
           std::make_tuple(to_string(b.algorithm), b.n, b.worker_count);
  });
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << r.worker_count << ',' << r.repetitions
        << ',';
    if (!r.failed) {
      out << detail::format_double(r.median_seconds) << ','
          << detail::format_double(r.min_seconds()) << ','
          << detail::format_double(r.max_seconds());
    } else {
      out << ",,";
    }
    out << ',' << r.seed << '\n';
  }
}

/// Writes the CSV to `path`; returns 0 on success and 4 on I/O failure.
inline int emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ostringstream text;
  write_csv(records, text);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return 4;
  file << text.str();
  file.flush();
  return file ? 0 : 4;
}

/// One parsed CSV row. Timing fields are empty for failed records.
struct CsvRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t worker_count = 0;
  std::size_t repetitions = 0;
  std::optional<double> median_seconds;
  std::optional<double> min_seconds;
  std::optional<double> max_seconds;
  std::uint64_t seed = 0;
};

inline std::vector<CsvRow> parse_csv(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty CSV");
  std::vector<CsvRow> rows;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto field_error = [&](const std::string& what) { return ParseError(number, what); };
  auto to_uint = [&](std::string_view s, auto& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw field_error("bad integer field '" + std::string(s) + "'");
    }
  };
  auto to_time = [&](std::string_view s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw field_error("bad time field '" + std::string(s) + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (number == 1) {
      if (line != kCsvHeader) throw field_error("unexpected CSV header");
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 8) throw field_error("expected 8 fields");
    CsvRow row;
    row.algorithm = std::string(fields[0]);
    to_uint(fields[1], row.n);
    to_uint(fields[2], row.worker_count);
    to_uint(fields[3], row.repetitions);
    row.median_seconds = to_time(fields[4]);
    row.min_seconds = to_time(fields[5]);
    row.max_seconds = to_time(fields[6]);
    to_uint(fields[7], row.seed);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace btas

#endif  // BTAS_BENCH_HPP_
