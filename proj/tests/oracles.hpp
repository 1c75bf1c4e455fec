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

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond the data types, so agreement means something.

#ifndef MPCOVER_TESTS_ORACLES_HPP
#define MPCOVER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mpcover/graph_core.hpp"

namespace oracle {

using mpcover::Color;
using mpcover::EdgeColoring;
using mpcover::MultipartiteShape;

inline constexpr int kFar = 1 << 20;

/// All-pairs color-c distances inside `within` by Floyd-Warshall over an
/// adjacency matrix read one edge at a time.
inline std::vector<std::vector<int>> floyd(const EdgeColoring& chi, Color c,
                                           std::uint64_t within) {
  const int n = chi.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (int u = 0; u < n; ++u) {
    if (!((within >> u) & 1)) continue;
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (u != v && ((within >> v) & 1) && chi.shape().adjacent(u, v) && chi.color(u, v) == c)
        d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline int diameter(const EdgeColoring& chi, Color c, std::uint64_t s) {
  const auto d = floyd(chi, c, s);
  int best = 0;
  for (int u = 0; u < chi.vertex_count(); ++u)
    for (int v = 0; v < chi.vertex_count(); ++v)
      if (((s >> u) & 1) && ((s >> v) & 1)) best = std::max(best, d[u][v]);
  return best;
}

/// Cover existence by the textbook enumeration: every vertex goes to bag 1,
/// bag 2 or both (3^n assignments) and each bag gets one of two colors.
inline bool cover_exists(const EdgeColoring& chi, int t, int d) {
  const int n = chi.vertex_count();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (Color c : {Color::red, Color::blue})
    if (diameter(chi, c, all) <= d) return true;
  if (t < 2) return false;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t a = 0, b = 0, x = code;
    for (int v = 0; v < n; ++v, x /= 3) {
      if (x % 3 != 1) a |= std::uint64_t{1} << v;
      if (x % 3 != 0) b |= std::uint64_t{1} << v;
    }
    if (!a || !b) continue;
    for (Color ca : {Color::red, Color::blue}) {
      if (diameter(chi, ca, a) > d) continue;
      for (Color cb : {Color::red, Color::blue})
        if (diameter(chi, cb, b) <= d) return true;
    }
  }
  return false;
}

/// Smallest d with a t-cover, scanning d = 0..d_max; d_max + 1 if none.
inline int min_diameter(const EdgeColoring& chi, int t, int d_max) {
  for (int d = 0; d <= d_max; ++d)
    if (oracle::cover_exists(chi, t, d)) return d;
  return d_max + 1;
}

/// Every symmetry of a shape as an explicit vertex permutation: vertex
/// permutations inside parts composed with permutations of equal-size parts.
inline std::vector<std::vector<int>> shape_automorphisms(const MultipartiteShape& shape) {
  const int n = shape.vertex_count();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        ok = shape.adjacent(u, v) == shape.adjacent(perm[u], perm[v]);
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Number of colorings up to shape symmetries and the color swap, by
/// applying every group element to every coloring.
inline std::uint64_t orbit_count(const MultipartiteShape& shape) {
  const int m = shape.edge_count();
  const auto autos = shape_automorphisms(shape);
  std::set<std::uint64_t> reps;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& p : autos)
      for (int flip = 0; flip < 2; ++flip) {
        std::uint64_t image = 0;
        for (int e = 0; e < m; ++e) {
          const auto [u, v] = shape.edge(e);
          const int f = shape.edge_index(p[u], p[v]);
          if ((((bits >> e) & 1) ^ flip) != 0) image |= std::uint64_t{1} << f;
        }
        best = std::min(best, image);
      }
    reps.insert(best);
  }
  return reps.size();
}

inline EdgeColoring random_coloring(const MultipartiteShape& shape, std::mt19937_64& rng) {
  std::vector<bool> bits(shape.edge_count());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() & 1;
  return EdgeColoring::from_bits(shape, bits);
}

/// Relabels vertices by a random shape automorphism and optionally swaps
/// colors.
inline EdgeColoring random_relabel(const EdgeColoring& chi, std::mt19937_64& rng) {
  const auto& shape = chi.shape();
  const int n = shape.vertex_count();
  // Random permutation of equal-size parts, then random order inside parts.
  std::vector<int> parts(shape.part_count());
  std::iota(parts.begin(), parts.end(), 0);
  for (int p = 0; p < shape.part_count(); ++p)
    for (int q = p + 1; q < shape.part_count(); ++q)
      if (shape.part_size(p) == shape.part_size(q) && (rng() & 1)) std::swap(parts[p], parts[q]);
  std::vector<int> perm(n);
  for (int p = 0; p < shape.part_count(); ++p) {
    std::vector<int> target(shape.part_size(p));
    std::iota(target.begin(), target.end(), shape.part_begin(parts[p]));
    std::shuffle(target.begin(), target.end(), rng);
    for (int i = 0; i < shape.part_size(p); ++i) perm[shape.part_begin(p) + i] = target[i];
  }
  const bool flip = rng() & 1;
  EdgeColoring out(shape);
  for (auto [u, v] : shape.edges()) {
    const Color c = chi.color(u, v);
    out.set_color(perm[u], perm[v], flip ? mpcover::other(c) : c);
  }
  return out;
}

}  // namespace oracle

#endif  // MPCOVER_TESTS_ORACLES_HPP
