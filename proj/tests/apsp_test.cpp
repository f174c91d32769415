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

#include "btas/apsp.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "btas/graph_io.hpp"
#include "oracles.hpp"

namespace btas {
namespace {

using testing::Int;
using M = TropicalMatrix<Int>;
using W = Weight<Int>;
using G = Graph<Int>;
constexpr auto kMin = SemiringKind::MinPlus;
const W inf = W::infinity();

std::size_t ceil_log2(std::size_t m) {
  std::size_t s = 0;
  while ((std::size_t{1} << s) < m) ++s;
  return s;
}

M three_node() { return graph_to_matrix(G(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 5}})); }

M path_graph(std::size_t n) {
  std::vector<Edge<Int>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return graph_to_matrix(G(n, edges));
}

TEST(ApspTest, ThreeNodeExample) {
  const M expected = M::from_rows(kMin, {{W(0), W(1), W(3)}, {inf, W(0), W(2)}, {inf, inf, W(0)}});
  const auto fw = floyd_warshall(three_node());
  EXPECT_EQ(fw.distances, expected);
  EXPECT_FALSE(fw.negative_cycle);
  EXPECT_EQ(fw.multiplications_performed, 0U);
  EXPECT_EQ(fw.algorithm, ApspAlgorithm::FloydWarshall);
  const auto sq = apsp_by_squaring(three_node());
  EXPECT_EQ(sq.distances, expected);
  EXPECT_FALSE(sq.negative_cycle);
  EXPECT_EQ(sq.algorithm, ApspAlgorithm::RepeatedSquaring);
  EXPECT_EQ(testing::brute_force_apsp(G(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 5}})),
            testing::to_plain(expected));
}

TEST(ApspTest, EdgelessGraphGivesIdentity) {
  const M adj(4, 4, kMin);
  EXPECT_EQ(floyd_warshall(adj).distances, identity_matrix<Int>(kMin, 4));
  EXPECT_EQ(apsp_by_squaring(adj).distances, identity_matrix<Int>(kMin, 4));
}

TEST(ApspTest, TwoCycleIsNegative) {
  const M adj = graph_to_matrix(G(2, {{0, 1, -2}, {1, 0, 1}}));
  EXPECT_TRUE(floyd_warshall(adj).negative_cycle);
  EXPECT_TRUE(apsp_by_squaring(adj).negative_cycle);
  EXPECT_TRUE(testing::brute_force_negative_cycle(G(2, {{0, 1, -2}, {1, 0, 1}})));
}

TEST(ApspTest, NegativeSelfLoop) {
  const M adj = graph_to_matrix(G(1, {{0, 0, -1}}));
  EXPECT_TRUE(floyd_warshall(adj).negative_cycle);
  EXPECT_TRUE(apsp_by_squaring(adj).negative_cycle);
}

TEST(ApspTest, NegativeEdgesWithoutCycle) {
  const M adj = graph_to_matrix(G(3, {{0, 1, 4}, {1, 2, -3}, {0, 2, 2}}));
  const auto fw = floyd_warshall(adj);
  EXPECT_FALSE(fw.negative_cycle);
  EXPECT_EQ(fw.distances(0, 2), W(1));
  EXPECT_EQ(apsp_by_squaring(adj).distances, fw.distances);
}

TEST(ApspTest, SingleVertex) {
  const auto r = apsp_by_squaring(M(1, 1, kMin));
  EXPECT_EQ(r.distances, M::from_rows(kMin, {{W(0)}}));
  EXPECT_EQ(r.multiplications_performed, 0U);
  EXPECT_EQ(r.check_multiplications, 0U);
}

TEST(ApspTest, PathGraph) {
  const auto r = apsp_by_squaring(path_graph(4));
  EXPECT_EQ(r.distances(0, 3), W(3));
  EXPECT_LE(r.multiplications_performed, 4U);
  EXPECT_EQ(floyd_warshall(path_graph(4)).distances, r.distances);
}

TEST(ApspTest, RejectsBadInput) {
  EXPECT_THROW(floyd_warshall(M(2, 3, kMin)), DimensionError);
  EXPECT_THROW(apsp_by_squaring(M(2, 3, kMin)), DimensionError);
  EXPECT_THROW(floyd_warshall(M(2, 2, SemiringKind::MaxPlus)), KindError);
  EXPECT_THROW(apsp_by_squaring(M(2, 2, SemiringKind::MaxPlus)), KindError);
}

TEST(ApspTest, DiagonalIsClampedAtEntry) {
  M adj = three_node();
  adj(1, 1) = W(7);
  EXPECT_EQ(floyd_warshall(adj).distances(1, 1), W(0));
  EXPECT_EQ(apsp_by_squaring(adj).distances(1, 1), W(0));
}

TEST(ApspTest, VerifyExamples) {
  const M adj = three_node();
  EXPECT_TRUE(verify_apsp(adj, floyd_warshall(adj).distances));
  M tampered = floyd_warshall(adj).distances;
  tampered(0, 2) = W(5);
  EXPECT_FALSE(verify_apsp(adj, tampered));
  EXPECT_TRUE(verify_apsp(M(3, 3, kMin), identity_matrix<Int>(kMin, 3)));
  EXPECT_THROW(verify_apsp(adj, M(2, 2, kMin)), DimensionError);
}

TEST(ApspTest, VerifyNamesViolation) {
  const M adj = three_node();
  const M good = floyd_warshall(adj).distances;

  M diag = good;
  diag(2, 2) = W(-1);
  EXPECT_EQ(check_apsp(adj, diag).violation, ApspViolation::NonZeroDiagonal);

  M above = good;
  above(0, 1) = W(2);
  EXPECT_EQ(check_apsp(adj, above).violation, ApspViolation::ExceedsAdjacency);

  M tri = good;
  tri(0, 2) = W(4);
  const auto c = check_apsp(adj, tri);
  EXPECT_EQ(c.violation, ApspViolation::TriangleInequality);
  EXPECT_EQ(c.describe(), "triangle inequality at (0, 2) via 1");
}

TEST(ApspTest, FloydWarshallMatchesSquaring) {
  std::mt19937_64 seeds(99);
  for (std::size_t n = 2; n <= 32; ++n) {
    for (const double p : {0.1, 0.5, 0.9}) {
      for (int trial = 0; trial < 200; ++trial) {
        const M adj = graph_to_matrix(random_graph<Int>(n, p, 0, 100, seeds()));
        const auto fw = floyd_warshall(adj);
        const auto sq = apsp_by_squaring(adj, TileSpec{8, 8, 1});
        ASSERT_EQ(fw.distances, sq.distances) << "n=" << n << " p=" << p;
        ASSERT_FALSE(fw.negative_cycle);
        ASSERT_FALSE(sq.negative_cycle);
      }
    }
  }
}

TEST(ApspTest, BothSolversMatchPathEnumeration) {
  std::mt19937_64 seeds(100);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const double p : {0.1, 0.5, 0.9}) {
      for (int trial = 0; trial < 50; ++trial) {
        const G g = random_graph<Int>(n, p, 0, 100, seeds());
        const auto expected = testing::brute_force_apsp(g);
        const M adj = graph_to_matrix(g);
        ASSERT_EQ(testing::to_plain(floyd_warshall(adj).distances), expected);
        ASSERT_EQ(testing::to_plain(apsp_by_squaring(adj).distances), expected);
      }
    }
  }
}

TEST(ApspTest, ClosureIsIdempotentAndVerified) {
  std::mt19937_64 seeds(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 20;
    const M adj = graph_to_matrix(random_graph<Int>(n, 0.3, 0, 50, seeds()));
    const M d = apsp_by_squaring(adj).distances;
    ASSERT_EQ(matmul(d, d, d), d);
    ASSERT_TRUE(verify_apsp(adj, d));
  }
}

TEST(ApspTest, NegativeCycleFlagsAgree) {
  std::mt19937_64 seeds(102);
  std::size_t flagged = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 16;
    const G g = random_graph<Int>(n, 0.3, -3, 10, seeds());
    const M adj = graph_to_matrix(g);
    const bool fw = floyd_warshall(adj).negative_cycle;
    ASSERT_EQ(apsp_by_squaring(adj).negative_cycle, fw) << "n=" << n;
    if (n <= 7) {
      ASSERT_EQ(testing::brute_force_negative_cycle(g), fw) << "n=" << n;
    }
    flagged += fw ? 1 : 0;
  }
  EXPECT_GT(flagged, 50U);
  EXPECT_LT(flagged, 550U);
}

TEST(ApspTest, MultiplicationCountIsLogarithmic) {
  for (std::size_t n = 2; n <= 128; ++n) {
    const auto path = apsp_by_squaring(path_graph(n));
    ASSERT_LE(path.multiplications_performed, 2 * ceil_log2(n - 1)) << "n=" << n;
    ASSERT_EQ(path.distances(0, n - 1), W(static_cast<Int>(n - 1)));
    const auto dense = apsp_by_squaring(graph_to_matrix(random_graph<Int>(n, 0.5, 1, 100, n)));
    ASSERT_LE(dense.multiplications_performed, 2 * ceil_log2(n - 1)) << "n=" << n;
  }
}

TEST(ApspTest, SaturationIsReported) {
  constexpr Int big = std::numeric_limits<Int>::max() / 2 + 1;
  const M adj = graph_to_matrix(G(3, {{0, 1, big}, {1, 2, big}}));
  const auto fw = floyd_warshall(adj);
  EXPECT_TRUE(fw.distances.saturated());
  EXPECT_TRUE(fw.distances(0, 2).is_infinite());
  EXPECT_TRUE(apsp_by_squaring(adj).distances.saturated());
}

}  // namespace
}  // namespace btas
