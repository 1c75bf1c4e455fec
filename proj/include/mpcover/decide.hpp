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

#ifndef MPCOVER_DECIDE_HPP
#define MPCOVER_DECIDE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcover/construct.hpp"
#include "mpcover/cover.hpp"
#include "mpcover/graph_core.hpp"

namespace mpcover {

/// Which certificate settled a cover-existence query.
enum class Rule {
  spanning,
  two_stars,
  clone_pair,
  clone_far,
  clone_blowup,
  star_doublestar,
  exhaustive,
  none,
};

inline constexpr std::array<Rule, 8> kRules = {Rule::spanning,     Rule::two_stars,
                                               Rule::clone_pair,   Rule::clone_far,
                                               Rule::clone_blowup, Rule::star_doublestar,
                                               Rule::exhaustive,   Rule::none};

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::spanning: return "spanning";
    case Rule::two_stars: return "two_stars";
    case Rule::clone_pair: return "clone_pair";
    case Rule::clone_far: return "clone_far";
    case Rule::clone_blowup: return "clone_blowup";
    case Rule::star_doublestar: return "star_doublestar";
    case Rule::exhaustive: return "exhaustive";
    case Rule::none: return "none";
  }
  return "?";
}

/// Which shortcuts may run before the exhaustive decision.
struct PruneConfig {
  bool stars = true;
  bool clone_rules = true;
  bool star_doublestar = true;

  friend bool operator==(const PruneConfig&, const PruneConfig&) = default;
};

struct Certificate {
  Cover cover;
  Rule rule = Rule::none;
};

struct ExistenceResult {
  bool exists = false;
  std::optional<Cover> witness;
  Rule rule = Rule::none;
};

inline constexpr int kExhaustiveMaxVertices = 22;

/// Exact decision for covers with at most t <= 2 subgraphs of diameter <= d.
///
/// Tabulates every vertex set whose color-c induced graph has diameter <= d,
/// then closes the table under subsets so that each set knows one good
/// superset. A two-subgraph cover exists iff some good c1-set S leaves a
/// complement contained in a good c2-set. This decides the same question as
/// assigning each vertex to bag 1, bag 2 or both, in O(2^n n) instead of 3^n.
inline std::optional<Cover> exhaustive_cover(const ColorGraph& g, int t, int d) {
  const int n = g.vertex_count();
  if (n > kExhaustiveMaxVertices)
    throw CapExceeded("exhaustive cover search is limited to 22 vertices", std::pow(3.0, n));
  if (t < 1) return std::nullopt;
  const VertexMask all = g.all();
  const std::size_t size = std::size_t{1} << n;

  thread_local std::array<std::vector<std::uint32_t>, 2> superset;
  for (Color c : kColors) {
    auto& table = superset[index(c)];
    table.assign(size, 0);
    for (std::size_t s = 1; s < size; ++s)
      if (diameter_at_most(g, c, s, d)) table[s] = static_cast<std::uint32_t>(s);
    if (table[all]) return Cover{{MonoSubgraph{c, all}}};
  }
  if (t == 1) return std::nullopt;

  // After closure, table[s] == s exactly when s itself is good.
  for (auto& table : superset)
    for (int i = 0; i < n; ++i)
      for (std::size_t s = 0; s < size; ++s)
        if (!table[s] && !((s >> i) & 1)) table[s] = table[s | (std::size_t{1} << i)];

  static constexpr std::array<std::pair<Color, Color>, 4> kPairs = {
      std::pair{Color::blue, Color::red}, std::pair{Color::red, Color::blue},
      std::pair{Color::blue, Color::blue}, std::pair{Color::red, Color::red}};
  for (auto [c1, c2] : kPairs) {
    const auto& first = superset[index(c1)];
    const auto& second = superset[index(c2)];
    for (std::size_t s = 1; s < size; ++s) {
      if (first[s] != s) continue;
      const std::size_t rest = all & ~static_cast<VertexMask>(s);
      if (const std::uint32_t cover = second[rest])
        return Cover{{MonoSubgraph{c1, s}, MonoSubgraph{c2, cover}}};
    }
  }
  return std::nullopt;
}

/// Covers built around the r-colored blow-up of the five-cycle x, A22, x',
/// y, (A21 u A31) minus y', where r is the other color of bl and y lies in
/// A13 (adjacent to x in color, far from x'). Unverified; callers check.
inline std::vector<Cover> clone_blowup_candidates(const EdgeColoring& chi,
                                                  const BiLayerPartition& bl, Vertex y) {
  const auto& shape = chi.shape();
  const ColorGraph& g = chi.graph();
  const Color c = bl.color;
  const Color r = other(c);
  VertexMask tail = bl.at(2, 1) | bl.at(3, 1);
  std::optional<Vertex> yc;
  if (shape.part_size(shape.part_of(y)) == 2) {
    yc = clone_of(shape, y);
    tail &= ~bit(*yc);
  }
  const MonoSubgraph blowup{r, bit(bl.x) | bl.at(2, 2) | bit(bl.clone) | bit(y) | tail};
  std::vector<Cover> out{Cover{{star(g, c, bl.x), blowup}}};
  if (yc) {
    out.push_back(Cover{{star(g, r, *yc), blowup}});
    out.push_back(Cover{{star(g, r, *yc), star(g, r, bl.clone)}});
  }
  return out;
}

/// Candidate covers read off the clone arguments for shapes with a size-2
/// part, plus stars at every vertex. Only verified candidates are returned.
inline std::optional<Certificate> prune_with_constructions(const EdgeColoring& chi, int d = 2,
                                                           bool stars = true,
                                                           bool clone_rules = true) {
  const auto& shape = chi.shape();
  const ColorGraph& g = chi.graph();
  const int n = shape.vertex_count();

  if (stars)
    for (Vertex u = 0; u < n; ++u) {
      Cover cover = two_stars_at(g, u);
      if (is_valid_cover(g, cover, d, 2)) return Certificate{std::move(cover), Rule::two_stars};
    }
  if (!clone_rules) return std::nullopt;

  std::vector<Vertex> paired;
  for (int p = 0; p < shape.part_count(); ++p)
    if (shape.part_size(p) == 2) {
      paired.push_back(shape.part_begin(p));
      paired.push_back(shape.part_begin(p) + 1);
    }
  auto is_paired = [&](Vertex v) { return shape.part_size(shape.part_of(v)) == 2; };
  std::optional<Certificate> found;
  auto attempt = [&](Cover cover, Rule rule) {
    if (!found && is_valid_cover(g, cover, d, 2)) found = Certificate{std::move(cover), rule};
    return found.has_value();
  };

  // No common neighbor sends colors (i, j) to (v, v'): the other-color star at
  // v and the other-color star at v' then cover everything.
  for (Vertex v : paired) {
    const CloneProfile profile = clone_profile(chi, v);
    for (Color i : kColors)
      for (Color j : kColors)
        if (!profile.at(i, j) &&
            attempt(Cover{{star(g, other(i), v), star(g, other(j), profile.clone)}},
                    Rule::clone_pair))
          return found;
  }

  for (Vertex x : paired)
    for (Color c : kColors) {
      const Color r = other(c);
      const BiLayerPartition bl = bilayer_partition(chi, x, c);
      const Vertex xc = bl.clone;

      // A vertex far from x in c and not adjacent to x' in c.
      for (Vertex y : to_vertices(bl.at(3, 2) | bl.at(3, 3))) {
        if (attempt(Cover{{star(g, r, x), star(g, r, y)}}, Rule::clone_far)) return found;
        if (attempt(Cover{{MonoSubgraph{r, star(g, r, xc).vertices | bit(x)}, star(g, c, xc)}},
                    Rule::clone_far))
          return found;
        if (!is_paired(y)) continue;
        const Vertex yc = clone_of(shape, y);
        if (attempt(Cover{{MonoSubgraph{r, star(g, r, yc).vertices | bit(y) | bit(x)},
                           star(g, c, yc)}},
                    Rule::clone_far))
          return found;
        if (attempt(Cover{{star(g, r, y), star(g, c, yc)}}, Rule::clone_far)) return found;
      }

      for (Vertex y : to_vertices(bl.at(1, 3)))
        for (Cover& cover : clone_blowup_candidates(chi, bl, y))
          if (attempt(std::move(cover), Rule::clone_blowup)) return found;
    }
  return std::nullopt;
}

/// Decides whether chi has a cover by at most t subgraphs of diameter <= d.
/// Cheap certificates are tried first; the exhaustive decision settles the
/// rest.
inline ExistenceResult cover_exists(const EdgeColoring& chi, int t, int d,
                                    const PruneConfig& prune = {}) {
  if (t < 1 || t > 2) throw Unsupported("only covers with one or two subgraphs are supported");
  if (d < 0) throw InvalidParameter("diameter bound must be nonnegative");
  const ColorGraph& g = chi.graph();
  const VertexMask all = chi.shape().all();
  for (Color c : kColors)
    if (diameter_at_most(g, c, all, d)) return {true, Cover{{MonoSubgraph{c, all}}}, Rule::spanning};
  if (t == 2) {
    if (prune.stars || prune.clone_rules)
      if (auto cert = prune_with_constructions(chi, d, prune.stars, prune.clone_rules))
        return {true, std::move(cert->cover), cert->rule};
    if (prune.star_doublestar && d >= 3)
      if (auto cover = star_doublestar_search(g, d))
        return {true, std::move(*cover), Rule::star_doublestar};
  }
  if (auto cover = exhaustive_cover(g, t, d)) return {true, std::move(*cover), Rule::exhaustive};
  return {false, std::nullopt, Rule::none};
}

/// Smallest d <= d_max with a cover, or d_max + 1 if none exists.
inline int min_cover_diameter(const EdgeColoring& chi, int t, int d_max,
                              const PruneConfig& prune = {}) {
  for (int d = 0; d <= d_max; ++d)
    if (cover_exists(chi, t, d, prune).exists) return d;
  return d_max + 1;
}

/// Which of the clone-structure properties hold. Each is checked only for
/// the vertices it is stated for; a false field means a counterexample.
struct CloneProperties {
  /// Every color pair (i, j) is realized by a common neighbor of v and v'.
  bool all_pairs_realized = true;
  /// If x has a c-far vertex, nothing is far from one of x, x' and at
  /// distance >= 2 from the other.
  bool no_far_layers = true;
  /// If x has a c-far vertex: y in A13 has y' in A21, z in A31 has z' in A12.
  bool clones_placed = true;

  bool all() const { return all_pairs_realized && no_far_layers && clones_placed; }
};

inline CloneProperties check_clone_properties(const EdgeColoring& chi) {
  const auto& shape = chi.shape();
  CloneProperties out;
  for (int p = 0; p < shape.part_count(); ++p) {
    if (shape.part_size(p) != 2) continue;
    for (Vertex x : {shape.part_begin(p), shape.part_begin(p) + 1}) {
      const CloneProfile profile = clone_profile(chi, x);
      for (Color i : kColors)
        for (Color j : kColors)
          if (!profile.at(i, j)) out.all_pairs_realized = false;

      for (Color c : kColors) {
        const BiLayerPartition bl = bilayer_partition(chi, x, c);
        if (!bl.row(3)) continue;
        if (bl.at(2, 3) | bl.at(3, 2) | bl.at(3, 3)) out.no_far_layers = false;
        auto placed = [&](VertexMask from, VertexMask into) {
          for (Vertex y : to_vertices(from)) {
            if (shape.part_size(shape.part_of(y)) != 2) continue;
            if (!contains(into, clone_of(shape, y))) out.clones_placed = false;
          }
        };
        placed(bl.at(1, 3), bl.at(2, 1));
        placed(bl.at(3, 1), bl.at(1, 2));
      }
    }
  }
  return out;
}

/// Grows x's part by one vertex y that copies x's colors to every other
/// vertex. Parts keep their relative order; the grown part moves ahead of
/// smaller parts so the shape stays sorted.
inline EdgeColoring check_monotone_extension(const EdgeColoring& chi, Vertex x) {
  const auto& shape = chi.shape();
  shape.check_vertex(x);
  const int k = shape.part_count();
  const int grown = shape.part_of(x);

  std::vector<int> sizes = shape.part_sizes();
  ++sizes[grown];
  std::vector<int> rank(k);
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
  std::vector<int> new_begin(k);
  std::vector<int> sorted_sizes;
  int offset = 0;
  for (int q : rank) {
    new_begin[q] = offset;
    offset += sizes[q];
    sorted_sizes.push_back(sizes[q]);
  }

  EdgeColoring out(MultipartiteShape(sorted_sizes), Color::red);
  auto relabel = [&](Vertex v) {
    const int p = shape.part_of(v);
    return new_begin[p] + (v - shape.part_begin(p));
  };
  const Vertex y = new_begin[grown] + shape.part_size(grown);
  for (auto [u, v] : shape.edges()) out.set_color(relabel(u), relabel(v), chi.color(u, v));
  for (Vertex w = 0; w < shape.vertex_count(); ++w)
    if (shape.adjacent(x, w)) out.set_color(relabel(w), y, chi.color(x, w));
  return out;
}

}  // namespace mpcover

#endif  // MPCOVER_DECIDE_HPP
