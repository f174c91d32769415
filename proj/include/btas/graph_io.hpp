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

#ifndef BTAS_GRAPH_IO_HPP_
#define BTAS_GRAPH_IO_HPP_

// Graphs, the two text formats, and seeded random instances.
//
// Edge list:      `n m`, then m lines `src dst weight`.
// Matrix (inf):   `n_rows n_cols kind`, then n_rows lines of weights, `inf`
//                 for Infinity.
// Matrix (grid):  a bare square numeric grid where 0 (off-diagonal) or -1
//                 means "no edge".
// Blank lines and lines starting with `#` are ignored everywhere.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "btas/error.hpp"
#include "btas/matrix.hpp"
#include "btas/semiring.hpp"

namespace btas {

template <WeightScalar T>
struct Edge {
  std::size_t src;
  std::size_t dst;
  T weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed weighted graph. Edges are kept sorted by (src, dst) with at most
/// one edge per ordered pair (the lightest); self-loops of non-negative
/// weight are dropped.
template <WeightScalar T>
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge<T>> edges) : n_(n) {
    if (n == 0) throw InvalidArgument("graph needs at least one vertex");
    for (const auto& e : edges) {
      if (e.src >= n || e.dst >= n) {
        throw InvalidArgument("edge " + std::to_string(e.src) + "->" +
                              std::to_string(e.dst) + " is out of range for n = " +
                              std::to_string(n));
      }
      Weight<T>{e.weight};  // rejects NaN / IEEE infinity
    }
    std::erase_if(edges, [](const Edge<T>& e) { return e.src == e.dst && e.weight >= T{0}; });
    std::sort(edges.begin(), edges.end(), [](const Edge<T>& a, const Edge<T>& b) {
      return std::tie(a.src, a.dst, a.weight) < std::tie(b.src, b.dst, b.weight);
    });
    // After sorting the lightest duplicate comes first.
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge<T>& a, const Edge<T>& b) {
                              return a.src == b.src && a.dst == b.dst;
                            }),
                edges.end());
    edges_ = std::move(edges);
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge<T>>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Edge<T>> edges_;
};

enum class SentinelConvention { InfToken, ZeroMeansNoEdge, MinusOneMeansNoEdge };

inline SentinelConvention parse_sentinel(std::string_view name) {
  if (name == "inf") return SentinelConvention::InfToken;
  if (name == "zero") return SentinelConvention::ZeroMeansNoEdge;
  if (name == "minus-one") return SentinelConvention::MinusOneMeansNoEdge;
  throw InvalidArgument("unknown sentinel convention '" + std::string(name) +
                        "' (expected inf, zero or minus-one)");
}

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits text into content lines (blank and `#` lines removed), each cut
// into whitespace-separated tokens that view into `text`.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    Line line{number, {}};
    std::size_t pos = 0;
    while (true) {
      pos = raw.find_first_not_of(" \t\r\v\f", pos);
      if (pos == std::string_view::npos) break;
      const std::size_t end = std::min(raw.find_first_of(" \t\r\v\f", pos), raw.size());
      line.tokens.push_back(raw.substr(pos, end - pos));
      pos = end;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* const last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ParseError(line, std::string(what) + " '" + std::string(token) +
                               "' is not a non-negative integer");
  }
  return value;
}

template <WeightScalar T>
Weight<T> parse_weight_at(std::string_view token, std::size_t line) {
  try {
    return parse_weight<T>(token);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge lists

template <WeightScalar T>
Graph<T> parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty edge list (expected header 'n m')");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, "edge-list header must be 'n m'");
  }
  const std::size_t n = detail::parse_count(header.tokens[0], header.number, "vertex count");
  const std::size_t m = detail::parse_count(header.tokens[1], header.number, "edge count");
  if (n == 0) throw ParseError(header.number, "vertex count must be positive");

  if (lines.size() - 1 > m) {
    throw ParseError(lines[m + 1].number,
                     "more edge lines than the " + std::to_string(m) + " declared");
  }
  if (lines.size() - 1 < m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(lines.size() - 1));
  }

  std::vector<Edge<T>> edges;
  edges.reserve(m);
  for (std::size_t e = 1; e < lines.size(); ++e) {
    const auto& line = lines[e];
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, "edge line must be 'src dst weight'");
    }
    const std::size_t src = detail::parse_count(line.tokens[0], line.number, "source");
    const std::size_t dst = detail::parse_count(line.tokens[1], line.number, "target");
    if (src >= n || dst >= n) {
      throw ParseError(line.number, "vertex index out of range for n = " + std::to_string(n));
    }
    const Weight<T> w = detail::parse_weight_at<T>(line.tokens[2], line.number);
    if (w.is_infinite()) throw ParseError(line.number, "edge weight must be finite");
    edges.push_back({src, dst, w.value()});
  }
  return Graph<T>(n, std::move(edges));
}

template <WeightScalar T>
Graph<T> parse_edge_list(std::istream& in) {
  return parse_edge_list<T>(detail::read_all(in));
}

template <WeightScalar T>
std::string write_edge_list(const Graph<T>& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.edges().size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.src) + " " + std::to_string(e.dst) + " " +
           to_string(Weight<T>(e.weight)) + "\n";
  }
  return out;
}

/// Min-plus adjacency matrix: 0 on the diagonal, Infinity for absent edges.
/// A negative self-loop lowers its diagonal entry.
template <WeightScalar T>
TropicalMatrix<T> graph_to_matrix(const Graph<T>& g) {
  auto m = identity_matrix<T>(SemiringKind::MinPlus, g.n());
  for (const auto& e : g.edges()) {
    m(e.src, e.dst) = tadd(SemiringKind::MinPlus, m(e.src, e.dst), Weight<T>(e.weight));
  }
  return m;
}

/// Inverse of graph_to_matrix: every finite off-diagonal entry and every
/// negative diagonal entry becomes an edge.
template <WeightScalar T>
Graph<T> matrix_to_graph(const TropicalMatrix<T>& m) {
  if (!m.is_square()) throw DimensionError("adjacency matrix must be square");
  if (m.kind() != SemiringKind::MinPlus) throw KindError("adjacency matrix must be minplus");
  std::vector<Edge<T>> edges;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_finite()) edges.push_back({i, j, m(i, j).value()});
    }
  }
  return Graph<T>(m.rows(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Matrix text

template <WeightScalar T>
std::string write_matrix(const TropicalMatrix<T>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                    to_string(m.kind()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Bare square grid in one of the paper-compatible conventions. Throws
/// InvalidArgument when a weight collides with the convention's sentinel.
template <WeightScalar T>
std::string write_grid(const TropicalMatrix<T>& m, SentinelConvention convention) {
  if (convention == SentinelConvention::InfToken) return write_matrix(m);
  if (!m.is_square()) throw DimensionError("grid output needs a square matrix");
  const T sentinel = convention == SentinelConvention::ZeroMeansNoEdge ? T{0} : T{-1};
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Weight<T> w = m(i, j);
      const bool zero_diag = convention == SentinelConvention::ZeroMeansNoEdge && i == j;
      if (w.is_infinite()) {
        if (zero_diag) {
          throw InvalidArgument("diagonal Infinity cannot be written in the zero convention");
        }
      } else if (w.value() == sentinel && !zero_diag) {
        throw InvalidArgument("weight " + to_string(w) + " at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") collides with the sentinel");
      }
      if (j != 0) out += ' ';
      out += w.is_infinite() ? to_string(Weight<T>(sentinel)) : to_string(w);
    }
    out += '\n';
  }
  return out;
}

namespace detail {

template <WeightScalar T>
TropicalMatrix<T> parse_inf_matrix(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty matrix (expected header 'rows cols kind')");
  const auto& header = lines.front();
  if (header.tokens.size() != 3) {
    throw ParseError(header.number, "matrix header must be 'rows cols kind'");
  }
  const std::size_t rows = parse_count(header.tokens[0], header.number, "row count");
  const std::size_t cols = parse_count(header.tokens[1], header.number, "column count");
  if (rows == 0 || cols == 0) throw ParseError(header.number, "matrix dimensions must be positive");
  SemiringKind kind{};
  try {
    kind = parse_kind(header.tokens[2]);
  } catch (const InvalidArgument& e) {
    throw ParseError(header.number, e.what());
  }
  if (lines.size() - 1 > rows) {
    throw ParseError(lines[rows + 1].number,
                     "more rows than the " + std::to_string(rows) + " declared");
  }
  if (lines.size() - 1 < rows) {
    throw ParseError(0, "expected " + std::to_string(rows) + " rows, found " +
                            std::to_string(lines.size() - 1));
  }
  std::vector<Weight<T>> data;
  data.reserve(rows * cols);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    if (line.tokens.size() != cols) {
      throw ParseError(line.number, "expected " + std::to_string(cols) + " weights, found " +
                                        std::to_string(line.tokens.size()));
    }
    for (const auto token : line.tokens) data.push_back(parse_weight_at<T>(token, line.number));
  }
  return TropicalMatrix<T>(rows, cols, kind, std::move(data));
}

template <WeightScalar T>
TropicalMatrix<T> parse_grid(const std::vector<Line>& lines, SentinelConvention convention) {
  if (lines.empty()) throw ParseError(0, "empty matrix");
  const std::size_t n = lines.size();
  std::vector<Weight<T>> data;
  data.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = lines[r];
    if (line.tokens.size() != n) {
      throw ParseError(line.number, "expected a square grid of " + std::to_string(n) +
                                        " columns, found " + std::to_string(line.tokens.size()));
    }
    for (std::size_t c = 0; c < n; ++c) {
      Weight<T> w = parse_weight_at<T>(line.tokens[c], line.number);
      if (w.is_finite()) {
        if (convention == SentinelConvention::ZeroMeansNoEdge && r != c && w.value() == T{0}) {
          w = Weight<T>::infinity();
        } else if (convention == SentinelConvention::MinusOneMeansNoEdge &&
                   w.value() == T{-1}) {
          w = Weight<T>::infinity();
        }
      }
      data.push_back(w);
    }
  }
  return TropicalMatrix<T>(n, n, SemiringKind::MinPlus, std::move(data));
}

}  // namespace detail

/// Parses a matrix. InfToken expects the headed format; the two sentinel
/// conventions expect a bare square grid and produce a minplus matrix with
/// every sentinel replaced by Infinity (the zero convention keeps diagonal
/// zeros).
template <WeightScalar T>
TropicalMatrix<T> parse_matrix(std::string_view text,
                               SentinelConvention convention = SentinelConvention::InfToken) {
  const auto lines = detail::content_lines(text);
  if (convention == SentinelConvention::InfToken) return detail::parse_inf_matrix<T>(lines);
  return detail::parse_grid<T>(lines, convention);
}

template <WeightScalar T>
TropicalMatrix<T> parse_matrix(std::istream& in,
                               SentinelConvention convention = SentinelConvention::InfToken) {
  return parse_matrix<T>(detail::read_all(in), convention);
}

// ---------------------------------------------------------------------------
// Random instances

/// Engine behind random_graph; the raw 64-bit output sequence of
/// std::mt19937_64 is fixed by the standard, and the mapping to edges and
/// weights below avoids the implementation-defined std distributions.
inline constexpr std::string_view kRandomGeneratorName = "mt19937_64";

namespace detail {

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, span] by rejection.
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t span) {
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = 0;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % range;
}

}  // namespace detail

/// Each ordered pair (i, j), i != j, carries an edge with probability
/// `edge_probability`; weights are uniform over [low, high] (integers for
/// integral T). Identical arguments give identical graphs.
template <WeightScalar T>
Graph<T> random_graph(std::size_t n, double edge_probability, T low, T high,
                      std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("random_graph needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  if constexpr (std::floating_point<T>) {
    if (!std::isfinite(low) || !std::isfinite(high)) {
      throw InvalidArgument("weight range must be finite");
    }
  }
  if (!(low <= high)) throw InvalidArgument("weight range needs low <= high");

  std::mt19937_64 rng(seed);
  std::vector<Edge<T>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(detail::unit_double(rng) < edge_probability)) continue;
      T w{};
      if constexpr (std::signed_integral<T>) {
        const auto span = static_cast<std::uint64_t>(high) - static_cast<std::uint64_t>(low);
        w = static_cast<T>(static_cast<std::uint64_t>(low) + detail::uniform_u64(rng, span));
      } else {
        w = low + (high - low) * static_cast<T>(detail::unit_double(rng));
        w = std::clamp(w, low, high);
      }
      edges.push_back({i, j, w});
    }
  }
  return Graph<T>(n, std::move(edges));
}

}  // namespace btas

#endif  // BTAS_GRAPH_IO_HPP_
