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

#include "mpcover/decide.hpp"
#include "mpcover/extremal.hpp"
#include "oracles.hpp"

namespace mpcover {
namespace {

constexpr PruneConfig kNoPrune{false, false, false};

// The subset-table decision against the 3^n bag assignment, for every d
// that matters on small hosts.
TEST(Exhaustive, MatchesBagAssignment) {
  std::mt19937_64 rng(2024);
  for (auto sizes : {std::vector<int>{2, 2}, {3, 2}, {2, 1, 1}, {2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {3, 3}}) {
    const auto shape = build_shape(sizes);
    for (int trial = 0; trial < 40; ++trial) {
      const auto chi = oracle::random_coloring(shape, rng);
      for (int t = 1; t <= 2; ++t)
        for (int d = 0; d <= 4; ++d) {
          const auto cover = exhaustive_cover(chi.graph(), t, d);
          ASSERT_EQ(cover.has_value(), oracle::cover_exists(chi, t, d))
              << shape.to_string() << " t=" << t << " d=" << d;
          if (cover) EXPECT_TRUE(is_valid_cover(chi.graph(), *cover, d, t));
        }
    }
  }
}

TEST(Exhaustive, RejectsLargeHosts) {
  EXPECT_THROW(exhaustive_cover(ColorGraph(23), 2, 2), CapExceeded);
}

// Every prune rule combination decides the same question.
TEST(CoverExists, PruningDoesNotChangeAnswers) {
  std::mt19937_64 rng(7);
  const std::vector<PruneConfig> configs = {
      {}, kNoPrune, {true, false, false}, {false, true, false}, {false, false, true}};
  for (auto sizes : {std::vector<int>{3, 2, 2}, {2, 2, 2, 2}, {4, 2, 2}, {3, 3, 2}}) {
    const auto shape = build_shape(sizes);
    for (int trial = 0; trial < 60; ++trial) {
      const auto chi = oracle::random_coloring(shape, rng);
      for (int d = 1; d <= 3; ++d) {
        const bool truth = cover_exists(chi, 2, d, kNoPrune).exists;
        for (const auto& p : configs) {
          const auto r = cover_exists(chi, 2, d, p);
          ASSERT_EQ(r.exists, truth);
          if (r.exists) {
            ASSERT_TRUE(r.witness);
            EXPECT_TRUE(is_valid_cover(chi.graph(), *r.witness, d, 2)) << to_string(r.rule);
          }
        }
      }
    }
  }
}

TEST(CoverExists, MinDiameterMatchesOracle) {
  std::mt19937_64 rng(31);
  for (auto sizes : {std::vector<int>{2, 2, 1}, {3, 1, 1}, {2, 2, 2}, {4, 2}}) {
    const auto shape = build_shape(sizes);
    for (int trial = 0; trial < 30; ++trial) {
      const auto chi = oracle::random_coloring(shape, rng);
      EXPECT_EQ(min_cover_diameter(chi, 2, 4), oracle::min_diameter(chi, 2, 4));
      EXPECT_EQ(min_cover_diameter(chi, 1, 4), oracle::min_diameter(chi, 1, 4));
    }
  }
}

TEST(CoverExists, ExtremalFamilies) {
  for (int k = 2; k <= 4; ++k) {
    const auto chi = gen_thm31(k);
    EXPECT_FALSE(cover_exists(chi, 2, 2).exists) << k;
    EXPECT_TRUE(cover_exists(chi, 2, 3).exists) << k;
  }
  EXPECT_FALSE(cover_exists(gen_fig4(), 2, 2).exists);
  EXPECT_TRUE(cover_exists(gen_fig4(), 2, 3).exists);
}

TEST(CoverExists, ParameterChecks) {
  const EdgeColoring chi(build_shape({2, 2}));
  EXPECT_THROW(cover_exists(chi, 3, 2), Unsupported);
  EXPECT_THROW(cover_exists(chi, 0, 2), Unsupported);
  EXPECT_THROW(cover_exists(chi, 2, -1), InvalidParameter);
  EXPECT_EQ(cover_exists(chi, 1, 2).rule, Rule::spanning);
}

// On G_5 every certificate the clone rules emit is a valid cover.
TEST(Prune, CertificatesVerifyOnG5) {
  std::mt19937_64 rng(5);
  const auto shape = gk_shape(5);
  int certified = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    if (auto cert = prune_with_constructions(chi, 2)) {
      ++certified;
      ASSERT_TRUE(is_valid_cover(chi.graph(), cert->cover, 2, 2)) << to_string(cert->rule);
    }
  }
  EXPECT_GT(certified, 2500);
}

TEST(Prune, ClonePairRuleFiresWhenAPairIsMissing) {
  // All red except the edges at vertex 0, which are blue: vertex 0 and its
  // clone share no (blue, blue) common neighbor.
  EdgeColoring chi(gk_shape(3), Color::red);
  for (Vertex w = 2; w < 6; ++w) chi.set_color(0, w, Color::blue);
  const auto p = clone_profile(chi, 0);
  EXPECT_EQ(p.at(Color::blue, Color::blue), 0u);
  const auto cert = prune_with_constructions(chi, 2, false, true);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(is_valid_cover(chi.graph(), cert->cover, 2, 2));
}

TEST(Prune, BlowupCandidatesAreWellFormed) {
  std::mt19937_64 rng(6);
  const auto shape = gk_shape(5);
  int tried = 0;
  for (int trial = 0; trial < 2000 && tried < 200; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    for (Vertex x = 0; x < 10; ++x)
      for (Color c : kColors) {
        const auto bl = bilayer_partition(chi, x, c);
        for (Vertex y : to_vertices(bl.at(1, 3))) {
          ++tried;
          for (const auto& cover : clone_blowup_candidates(chi, bl, y)) {
            EXPECT_LE(cover.size(), 2u);
            for (const auto& s : cover.subgraphs) EXPECT_NE(s.vertices, 0u);
          }
        }
      }
  }
  EXPECT_GT(tried, 0);
}

TEST(CloneProperties, AllPairsMatchesDirectScan) {
  std::mt19937_64 rng(41);
  const auto shape = gk_shape(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    bool pairs = true;
    for (Vertex v = 0; v < 6; ++v) {
      const Vertex vc = clone_of(shape, v);
      for (Color i : kColors)
        for (Color j : kColors) {
          bool found = false;
          for (Vertex w = 0; w < 6; ++w)
            if (shape.adjacent(v, w) && chi.color(v, w) == i && chi.color(vc, w) == j) found = true;
          pairs = pairs && found;
        }
    }
    EXPECT_EQ(check_clone_properties(chi).all_pairs_realized, pairs);
  }
}

TEST(Extension, CopiesColorsAndKeepsShapeSorted) {
  const auto chi = gen_thm31(2);  // [5,2,2]; b1 is vertex 5
  const auto ext = check_monotone_extension(chi, 5);
  EXPECT_EQ(ext.shape(), build_shape({5, 3, 2}));
  // y is the third vertex of the grown part and copies b1.
  const Vertex y = 7;
  EXPECT_EQ(ext.shape().part_of(y), ext.shape().part_of(5));
  for (Vertex w = 0; w < ext.vertex_count(); ++w)
    if (ext.shape().adjacent(y, w)) EXPECT_EQ(ext.color(y, w), ext.color(5, w));

  const EdgeColoring red(build_shape({2, 2, 1}), Color::red);
  const auto grown = check_monotone_extension(red, 4);
  EXPECT_EQ(grown.shape(), build_shape({2, 2, 2}));
  EXPECT_EQ(grown.count_color(Color::blue), 0);
}

TEST(Extension, PreservesTheLowerBound) {
  for (const auto& chi : {gen_fig4(), gen_thm31(2)})
    for (Vertex x = 0; x < chi.vertex_count(); ++x) {
      const auto ext = check_monotone_extension(chi, x);
      EXPECT_FALSE(cover_exists(ext, 2, 2).exists) << "extension at " << x;
    }
}

TEST(Extension, EveryOriginalEdgeSurvives) {
  std::mt19937_64 rng(3);
  const auto shape = build_shape({3, 2, 2, 1});
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = oracle::random_coloring(shape, rng);
    const Vertex x = static_cast<Vertex>(rng() % shape.vertex_count());
    const auto ext = check_monotone_extension(chi, x);
    EXPECT_EQ(ext.shape().edge_count(),
              shape.edge_count() + shape.vertex_count() - shape.part_size(shape.part_of(x)));
    EXPECT_EQ(ext.count_color(Color::blue),
              chi.count_color(Color::blue) + count(chi.neighbors(Color::blue, x)));
  }
}

}  // namespace
}  // namespace mpcover
