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

#include "mpcover/cover.hpp"
#include "mpcover/io.hpp"
#include "oracles.hpp"

namespace mpcover {
namespace {

// K_{2,2} on {0,1} x {2,3}: red 4-cycle minus edge 1-3, which is blue.
EdgeColoring path_coloring() {
  EdgeColoring chi(build_shape({2, 2}), Color::red);
  chi.set_color(1, 3, Color::blue);
  return chi;
}

TEST(Verify, AcceptsSpanningRedPath) {
  const auto chi = path_coloring();
  // Red path 3-0-2-1 has diameter 3.
  const Cover cover{{MonoSubgraph{Color::red, chi.shape().all()}}};
  EXPECT_FALSE(verify_cover(chi, cover, 3, 1));
  EXPECT_FALSE(verify_cover(chi, cover, kInfinity, 1));
}

TEST(Verify, ReportsDiameterExceeded) {
  const auto chi = path_coloring();
  const auto v = verify_cover(chi, Cover{{MonoSubgraph{Color::red, chi.shape().all()}}}, 2, 1);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::diameter_exceeded);
  EXPECT_EQ(v->subgraph, 0);
  ASSERT_EQ(v->witness.size(), 2u);
  EXPECT_EQ(color_distance(chi, Color::red, v->witness[0], v->witness[1]), 3);
}

TEST(Verify, ReportsDisconnected) {
  const auto chi = path_coloring();
  const auto v = verify_cover(chi, Cover{{MonoSubgraph{Color::blue, chi.shape().all()}}},
                              kInfinity, 1);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::disconnected);
}

TEST(Verify, ReportsCoverageGap) {
  const auto chi = path_coloring();
  const auto v = verify_cover(chi, Cover{{MonoSubgraph{Color::blue, bit(1) | bit(3)}}}, 1, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::coverage_gap);
  EXPECT_EQ(v->witness, std::vector<Vertex>{0});
}

TEST(Verify, ReportsTooManySubgraphs) {
  const auto chi = path_coloring();
  Cover cover;
  for (Vertex v = 0; v < 4; ++v) cover.subgraphs.push_back(singleton(v));
  const auto v = verify_cover(chi, cover, 0, 3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::too_many_subgraphs);
  EXPECT_FALSE(verify_cover(chi, cover, 0, 4));
}

TEST(Verify, RejectsMalformedCovers) {
  const auto chi = path_coloring();
  EXPECT_THROW(verify_cover(chi, Cover{{MonoSubgraph{Color::red, 0}}}, 3, 2), InvalidCover);
  EXPECT_THROW(verify_cover(chi, Cover{{MonoSubgraph{Color::red, bit(7)}}}, 3, 2), InvalidCover);
}

TEST(Verify, StarsHaveRadiusOne) {
  std::mt19937_64 rng(4);
  const auto shape = build_shape({3, 3, 2});
  for (int trial = 0; trial < 50; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    for (Vertex u = 0; u < shape.vertex_count(); ++u)
      for (Color c : kColors) {
        const auto s = star(chi.graph(), c, u);
        EXPECT_LE(oracle::diameter(chi, c, s.vertices), 2);
        EXPECT_EQ(subgraph_diameter(chi, s), oracle::diameter(chi, c, s.vertices));
      }
  }
}

// Random candidate covers: the verifier's verdict matches a direct
// Floyd-Warshall check of every condition.
TEST(Verify, AgreesWithDirectCheck) {
  std::mt19937_64 rng(11);
  const auto shape = build_shape({3, 2, 2});
  const VertexMask all = shape.all();
  for (int trial = 0; trial < 2000; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    Cover cover;
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      VertexMask m = rng() & all;
      if (!m) m = bit(static_cast<Vertex>(rng() % 7));
      cover.subgraphs.push_back({rng() & 1 ? Color::blue : Color::red, m});
    }
    const int d = static_cast<int>(rng() % 4);
    bool expect = static_cast<int>(cover.size()) <= 2 && cover.covered() == all;
    for (const auto& s : cover.subgraphs) expect = expect && oracle::diameter(chi, s.color, s.vertices) <= d;
    EXPECT_EQ(is_valid_cover(chi.graph(), cover, d, 2), expect);
  }
}

TEST(Verify, CoverJsonRoundTrip) {
  const Cover cover{{MonoSubgraph{Color::blue, bit(0) | bit(2)}, MonoSubgraph{Color::red, bit(1) | bit(3)}}};
  EXPECT_EQ(cover_from_json(cover_to_json(cover)), cover);
}

}  // namespace
}  // namespace mpcover
