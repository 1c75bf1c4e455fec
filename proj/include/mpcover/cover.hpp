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

#ifndef MPCOVER_COVER_HPP
#define MPCOVER_COVER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpcover/graph_core.hpp"

namespace mpcover {

/// A monochromatic subgraph in normal form: every edge of `color` with both
/// ends in `vertices`.
struct MonoSubgraph {
  Color color = Color::red;
  VertexMask vertices = 0;

  friend bool operator==(const MonoSubgraph&, const MonoSubgraph&) = default;
};

struct Cover {
  std::vector<MonoSubgraph> subgraphs;

  std::size_t size() const { return subgraphs.size(); }
  VertexMask covered() const {
    VertexMask m = 0;
    for (const auto& s : subgraphs) m |= s.vertices;
    return m;
  }

  friend bool operator==(const Cover&, const Cover&) = default;
};

enum class ViolationKind { coverage_gap, disconnected, diameter_exceeded, too_many_subgraphs };

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::coverage_gap: return "CoverageGap";
    case ViolationKind::disconnected: return "Disconnected";
    case ViolationKind::diameter_exceeded: return "DiameterExceeded";
    case ViolationKind::too_many_subgraphs: return "TooManySubgraphs";
  }
  return "?";
}

struct Violation {
  ViolationKind kind = ViolationKind::coverage_gap;
  std::vector<Vertex> witness;
  int subgraph = -1;
};

/// Star at u in color c: u together with all of its c-neighbors.
inline MonoSubgraph star(const ColorGraph& g, Color c, Vertex u) {
  return {c, bit(u) | g.neighbors(c, u)};
}

/// Double star on the c-edge w1 w2.
inline MonoSubgraph double_star(const ColorGraph& g, Color c, Vertex w1, Vertex w2) {
  return {c, bit(w1) | bit(w2) | g.neighbors(c, w1) | g.neighbors(c, w2)};
}

inline MonoSubgraph singleton(Vertex v) { return {Color::red, bit(v)}; }

inline int subgraph_diameter(const ColorGraph& g, const MonoSubgraph& s) {
  return induced_diameter(g, s.color, s.vertices);
}

inline int subgraph_diameter(const EdgeColoring& chi, const MonoSubgraph& s) {
  if (s.vertices & ~chi.shape().all()) throw InvalidCover("vertex out of range");
  return subgraph_diameter(chi.graph(), s);
}

/// Checks every certificate condition of a cover. Returns nullopt when the
/// cover is valid at (d, t); otherwise the first violation in scan order:
/// subgraph count, then each subgraph by index, then coverage by vertex id.
/// Pass d = kInfinity to require connectivity only.
inline std::optional<Violation> verify_cover(const ColorGraph& g, const Cover& cover,
                                             int d, int t) {
  for (const auto& s : cover.subgraphs) {
    if (s.vertices == 0) throw InvalidCover("cover contains an empty subgraph");
    if (s.vertices & ~g.all()) throw InvalidCover("cover names a vertex out of range");
  }
  if (static_cast<int>(cover.size()) > t)
    return Violation{ViolationKind::too_many_subgraphs, {}, t};

  for (std::size_t i = 0; i < cover.size(); ++i) {
    const auto& s = cover.subgraphs[i];
    const int idx = static_cast<int>(i);
    if (diameter_at_most(g, s.color, s.vertices, d)) continue;
    std::optional<Violation> found;
    for_each_vertex(s.vertices, [&](Vertex u) {
      if (found) return;
      auto dist = bfs_distances(g, s.color, u, s.vertices);
      for_each_vertex(s.vertices, [&](Vertex w) {
        if (found) return;
        if (dist[w] == kInfinity)
          found = Violation{ViolationKind::disconnected, {u, w}, idx};
        else if (dist[w] > d)
          found = Violation{ViolationKind::diameter_exceeded, {u, w}, idx};
      });
    });
    if (found) return found;
  }

  const VertexMask missing = g.all() & ~cover.covered();
  if (missing) return Violation{ViolationKind::coverage_gap, {lowest(missing)}, -1};
  return std::nullopt;
}

inline std::optional<Violation> verify_cover(const EdgeColoring& chi, const Cover& cover,
                                             int d, int t) {
  return verify_cover(chi.graph(), cover, d, t);
}

inline bool is_valid_cover(const ColorGraph& g, const Cover& cover, int d, int t) {
  return !verify_cover(g, cover, d, t).has_value();
}

}  // namespace mpcover

#endif  // MPCOVER_COVER_HPP
