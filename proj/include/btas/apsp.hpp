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

#ifndef BTAS_APSP_HPP_
#define BTAS_APSP_HPP_

// All-pairs shortest paths over the min-plus semiring.
//
// Both solvers start from B = I ⊕ A, the adjacency matrix with its diagonal
// clamped to at most 0, so B^k holds the shortest distances over walks of at
// most k edges and the powers are monotone non-increasing.

#include <cstddef>
#include <string>
#include <utility>

#include "btas/error.hpp"
#include "btas/matrix.hpp"
#include "btas/semiring.hpp"

namespace btas {

enum class ApspAlgorithm { FloydWarshall, RepeatedSquaring };

inline std::string to_string(ApspAlgorithm a) {
  return a == ApspAlgorithm::FloydWarshall ? "fw" : "square";
}

/// n x n min-plus matrix of shortest distances; Infinity marks "no path".
template <WeightScalar T>
using DistanceMatrix = TropicalMatrix<T>;

template <WeightScalar T>
struct ApspReport {
  DistanceMatrix<T> distances;
  ApspAlgorithm algorithm;
  /// When set, `distances` are not shortest-path distances.
  bool negative_cycle = false;
  /// Products spent computing the closure. Always 0 for Floyd-Warshall.
  std::size_t multiplications_performed = 0;
  /// Extra product used only to confirm the closure is a fixpoint (0 or 1).
  std::size_t check_multiplications = 0;
};

namespace detail {

template <WeightScalar T>
TropicalMatrix<T> closure_base(const TropicalMatrix<T>& adj, const char* who) {
  if (!adj.is_square()) {
    throw DimensionError(std::string(who) + " needs a square adjacency matrix, got " +
                         shape_str(adj.rows(), adj.cols()));
  }
  if (adj.kind() != SemiringKind::MinPlus) {
    throw KindError(std::string(who) + " needs a minplus matrix");
  }
  return ew_add(identity_matrix<T>(SemiringKind::MinPlus, adj.rows()), adj);
}

template <WeightScalar T>
bool has_negative_diagonal(const TropicalMatrix<T>& d) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i).is_finite() && d(i, i).value() < T{0}) return true;
  }
  return false;
}

}  // namespace detail

/// Sequential k-outermost dynamic program; the reference solver.
template <WeightScalar T>
ApspReport<T> floyd_warshall(const TropicalMatrix<T>& adj) {
  constexpr auto kMin = SemiringKind::MinPlus;
  TropicalMatrix<T> d = detail::closure_base(adj, "floyd_warshall");
  const std::size_t n = d.rows();
  bool saturated = d.saturated();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Weight<T> dik = d(i, k);
      if (dik.is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        d(i, j) = tadd(kMin, d(i, j), tmul(kMin, dik, d(k, j), saturated));
      }
    }
  }
  d.mark_saturated(saturated);
  const bool negative = detail::has_negative_diagonal(d);
  return ApspReport<T>{std::move(d), ApspAlgorithm::FloydWarshall, negative, 0, 0};
}

/// Closure of I ⊕ A by repeated squaring: B, B^2, B^4, ... until the power
/// reaches n - 1 or a squaring leaves the matrix unchanged. If the loop ends
/// without observing a fixpoint, one more squaring checks for negative
/// cycles (the matrix changes, or a diagonal entry is negative).
template <WeightScalar T>
ApspReport<T> apsp_by_squaring(const TropicalMatrix<T>& adj, const TileSpec& tiles = {}) {
  TropicalMatrix<T> cur = detail::closure_base(adj, "apsp_by_squaring");
  const std::size_t n = cur.rows();
  ApspReport<T> report{cur, ApspAlgorithm::RepeatedSquaring, false, 0, 0};

  if (n == 1) {
    report.negative_cycle = detail::has_negative_diagonal(cur);
    return report;
  }

  bool fixpoint = false;
  for (std::size_t reach = 1; reach < n - 1;) {
    TropicalMatrix<T> next = matmul(cur, cur, tiles);
    ++report.multiplications_performed;
    reach *= 2;
    fixpoint = next == cur;
    cur = std::move(next);
    if (fixpoint) break;
  }

  if (fixpoint) {
    report.negative_cycle = detail::has_negative_diagonal(cur);
  } else {
    const TropicalMatrix<T> check = matmul(cur, cur, tiles);
    report.check_multiplications = 1;
    report.negative_cycle = !(check == cur) || detail::has_negative_diagonal(check);
  }
  report.distances = std::move(cur);
  return report;
}

template <WeightScalar T>
ApspReport<T> solve_apsp(const TropicalMatrix<T>& adj, ApspAlgorithm algorithm,
                         const TileSpec& tiles = {}) {
  return algorithm == ApspAlgorithm::FloydWarshall ? floyd_warshall(adj)
                                                   : apsp_by_squaring(adj, tiles);
}

// ---------------------------------------------------------------------------
// Verification

enum class ApspViolation {
  None,
  NonZeroDiagonal,
  ExceedsAdjacency,
  TriangleInequality,
  NotFixpoint,
};

inline std::string to_string(ApspViolation v) {
  switch (v) {
    case ApspViolation::None: return "none";
    case ApspViolation::NonZeroDiagonal: return "non-zero diagonal";
    case ApspViolation::ExceedsAdjacency: return "distance exceeds direct edge";
    case ApspViolation::TriangleInequality: return "triangle inequality";
    case ApspViolation::NotFixpoint: return "not a fixpoint of D = D (I + A)";
  }
  return "unknown";
}

/// First violated property, with the entry (and intermediate vertex for the
/// triangle inequality) where it was found.
struct ApspCheck {
  ApspViolation violation = ApspViolation::None;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  bool ok() const noexcept { return violation == ApspViolation::None; }

  std::string describe() const {
    if (ok()) return "ok";
    std::string s = to_string(violation) + " at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")";
    if (violation == ApspViolation::TriangleInequality) {
      s += " via " + std::to_string(k);
    }
    return s;
  }
};

/// Checks, in order: zero diagonal, dist <= I ⊕ adj, the triangle inequality,
/// and dist = dist ⊗ (I ⊕ adj). The product is evaluated by a plain loop, not
/// by the tiled kernel.
template <WeightScalar T>
ApspCheck check_apsp(const TropicalMatrix<T>& adj, const DistanceMatrix<T>& dist) {
  constexpr auto kMin = SemiringKind::MinPlus;
  if (dist.rows() != adj.rows() || dist.cols() != adj.cols()) {
    throw DimensionError("verify: adjacency is " + detail::shape_str(adj.rows(), adj.cols()) +
                         " but distances are " +
                         detail::shape_str(dist.rows(), dist.cols()));
  }
  if (dist.kind() != kMin) throw KindError("verify: distances must be minplus");
  const TropicalMatrix<T> base = detail::closure_base(adj, "verify");
  const std::size_t n = base.rows();

  for (std::size_t i = 0; i < n; ++i) {
    if (dist(i, i) != Weight<T>(T{0})) return {ApspViolation::NonZeroDiagonal, i, i, 0};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (order_less(kMin, base(i, j), dist(i, j))) {
        return {ApspViolation::ExceedsAdjacency, i, j, 0};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (order_less(kMin, tmul(kMin, dist(i, k), dist(k, j)), dist(i, j))) {
          return {ApspViolation::TriangleInequality, i, j, k};
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Weight<T> acc = Weight<T>::infinity();
      for (std::size_t k = 0; k < n; ++k) {
        acc = tadd(kMin, acc, tmul(kMin, dist(i, k), base(k, j)));
      }
      if (acc != dist(i, j)) return {ApspViolation::NotFixpoint, i, j, 0};
    }
  }
  return {};
}

template <WeightScalar T>
bool verify_apsp(const TropicalMatrix<T>& adj, const DistanceMatrix<T>& dist) {
  return check_apsp(adj, dist).ok();
}

}  // namespace btas

#endif  // BTAS_APSP_HPP_
