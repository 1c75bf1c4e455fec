// Copyright 2026 The mpcover Authors
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

#include <gtest/gtest.h>

#include <random>

#include "mpcover/graph_core.hpp"
#include "oracles.hpp"

namespace mpcover {
namespace {

TEST(Shape, CanonicalizesPartOrder) {
  EXPECT_EQ(build_shape({2, 3, 4}), build_shape({4, 3, 2}));
  EXPECT_EQ(build_shape({2, 3, 4}).part_sizes(), (std::vector<int>{4, 3, 2}));
  EXPECT_EQ(build_shape({2, 3, 4}).to_string(), "[4,3,2]");
}

TEST(Shape, CountsVerticesAndEdges) {
  const auto s = build_shape({4, 3, 2});
  EXPECT_EQ(s.vertex_count(), 9);
  EXPECT_EQ(s.edge_count(), 4 * 3 + 4 * 2 + 3 * 2);
  EXPECT_EQ(build_shape({3, 3, 3}).edge_count(), 27);
  EXPECT_EQ(gk_shape(4).edge_count(), 24);
}

TEST(Shape, EdgesAreLexicographic) {
  const auto s = build_shape({2, 1, 1});
  std::vector<std::pair<int, int>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(s.edges(), expected);
  for (int i = 0; i < s.edge_count(); ++i) {
    auto [u, v] = s.edge(i);
    EXPECT_EQ(s.edge_index(u, v), i);
    EXPECT_EQ(s.edge_index(v, u), i);
  }
  EXPECT_EQ(s.edge_index(0, 1), -1);
}

TEST(Shape, RejectsBadInput) {
  EXPECT_THROW(build_shape({}), InvalidShape);
  EXPECT_THROW(build_shape({2, 0}), InvalidShape);
  EXPECT_THROW(build_shape({40, 30}), InvalidShape);
  EXPECT_THROW(build_shape({2, 2}).part_of(4), InvalidVertex);
}

TEST(Coloring, BitsRoundTrip) {
  std::mt19937_64 rng(5);
  const auto s = build_shape({3, 2, 2});
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = oracle::random_coloring(s, rng);
    EXPECT_EQ(EdgeColoring::from_bits(s, chi.bits()), chi);
  }
  EXPECT_THROW(EdgeColoring::from_bits(s, std::vector<bool>(3)), ParseError);
}

TEST(Coloring, NonEdgesHaveNoColor) {
  EdgeColoring chi(build_shape({2, 2}));
  EXPECT_THROW(chi.color(0, 1), InvalidVertex);
  EXPECT_THROW(chi.set_color(2, 3, Color::blue), InvalidVertex);
}

TEST(Coloring, SwapExchangesClasses) {
  std::mt19937_64 rng(9);
  const auto chi = oracle::random_coloring(build_shape({3, 2, 1}), rng);
  const auto sw = chi.swapped();
  for (auto [u, v] : chi.shape().edges()) EXPECT_EQ(sw.color(u, v), other(chi.color(u, v)));
  EXPECT_EQ(sw.count_color(Color::red), chi.count_color(Color::blue));
}

// BFS distances agree with Floyd-Warshall on every vertex subset sampled.
TEST(Distances, MatchFloydWarshall) {
  std::mt19937_64 rng(17);
  for (auto sizes : {std::vector<int>{3, 2, 2}, {4, 3, 2}, {2, 2, 2, 2}, {5, 1}, {3, 3}}) {
    const auto shape = build_shape(sizes);
    for (int trial = 0; trial < 30; ++trial) {
      const auto chi = oracle::random_coloring(shape, rng);
      VertexMask within = trial % 3 ? (rng() & shape.all()) : shape.all();
      if (!within) within = shape.all();
      for (Color c : kColors) {
        const auto fw = oracle::floyd(chi, c, within);
        for (Vertex r = 0; r < shape.vertex_count(); ++r) {
          if (!contains(within, r)) continue;
          const auto d = bfs_distances(chi.graph(), c, r, within);
          for (Vertex v = 0; v < shape.vertex_count(); ++v) {
            if (!contains(within, v)) continue;
            const int expect = fw[r][v] >= oracle::kFar ? kInfinity : fw[r][v];
            ASSERT_EQ(d[v], expect) << shape.to_string() << " root " << r << " to " << v;
          }
        }
        const int diam = oracle::diameter(chi, c, within);
        const int got = induced_diameter(chi.graph(), c, within);
        EXPECT_EQ(got, diam >= oracle::kFar ? kInfinity : diam);
        for (int d = 0; d <= 4; ++d)
          EXPECT_EQ(diameter_at_most(chi.graph(), c, within, d), diam <= d);
      }
    }
  }
}

TEST(Distances, BallIsRadiusBounded) {
  std::mt19937_64 rng(3);
  const auto shape = build_shape({4, 3, 2});
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    const auto fw = oracle::floyd(chi, Color::blue, shape.all());
    for (int r = 0; r <= 3; ++r) {
      VertexMask expect = 0;
      for (Vertex v = 0; v < 9; ++v)
        if (fw[0][v] <= r) expect |= bit(v);
      EXPECT_EQ(ball(chi.graph(), Color::blue, 0, r, shape.all()), expect);
    }
  }
}

TEST(Layers, BucketsCapAtFour) {
  // Red path 0-3-1-4-2 inside K_{3,2}; everything else blue.
  EdgeColoring chi(build_shape({3, 2}), Color::blue);
  for (auto [u, v] : {std::pair{0, 3}, {1, 3}, {1, 4}, {2, 4}}) chi.set_color(u, v, Color::red);
  const auto layers = bfs_layers(chi, Color::red, 0, std::vector<int>{0, 1});
  EXPECT_EQ(layers.layer(0), bit(0));
  EXPECT_EQ(layers.layer(1), bit(3));
  EXPECT_EQ(layers.layer(2), bit(1));
  EXPECT_EQ(layers.layer(3), bit(4));
  EXPECT_EQ(layers.layer(4), bit(2));
  EXPECT_EQ(layers.layer(0, 4), bit(2));
  EXPECT_EQ(layers.layer(1, 4), 0u);
}

TEST(Clones, OnlyInPartsOfSizeTwo) {
  const auto s = build_shape({3, 2, 1});
  EXPECT_EQ(clone_of(s, 3), 4);
  EXPECT_EQ(clone_of(s, 4), 3);
  EXPECT_THROW(clone_of(s, 0), NoUniqueClone);
  EXPECT_THROW(clone_of(s, 5), NoUniqueClone);
}

TEST(Clones, ProfilePartitionsCommonNeighbors) {
  std::mt19937_64 rng(21);
  const auto s = gk_shape(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = oracle::random_coloring(s, rng);
    for (Vertex v = 0; v < 8; ++v) {
      const auto p = clone_profile(chi, v);
      VertexMask seen = 0;
      for (Color i : kColors)
        for (Color j : kColors) {
          for (Vertex w : to_vertices(p.at(i, j))) {
            EXPECT_EQ(chi.color(v, w), i);
            EXPECT_EQ(chi.color(p.clone, w), j);
          }
          EXPECT_EQ(seen & p.at(i, j), 0u);
          seen |= p.at(i, j);
        }
      EXPECT_EQ(seen, s.all() & ~s.part_mask(s.part_of(v)));
    }
  }
}

TEST(Clones, BilayerMatchesDistances) {
  std::mt19937_64 rng(22);
  const auto s = gk_shape(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = oracle::random_coloring(s, rng);
    const Vertex x = static_cast<Vertex>(rng() % 10);
    for (Color c : kColors) {
      const auto bl = bilayer_partition(chi, x, c);
      const auto fw = oracle::floyd(chi, c, s.all());
      for (Vertex w = 0; w < 10; ++w) {
        if (w == x || w == bl.clone) continue;
        const int i = std::min(fw[x][w], 3), j = std::min(fw[bl.clone][w], 3);
        EXPECT_TRUE(contains(bl.at(i, j), w));
      }
    }
  }
}

}  // namespace
}  // namespace mpcover
