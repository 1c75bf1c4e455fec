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

#ifndef MPCOVER_GRAPH_CORE_HPP
#define MPCOVER_GRAPH_CORE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpcover/errors.hpp"

namespace mpcover {

using Vertex = int;

/// A set of vertices, bit v set iff vertex v is a member. Hosts have at most
/// 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Sentinel distance, strictly larger than any finite distance.
inline constexpr int kInfinity = 1 << 20;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask first_n(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
constexpr int count(VertexMask m) { return std::popcount(m); }
constexpr bool contains(VertexMask m, Vertex v) { return (m >> v) & 1u; }
constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(count(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

inline VertexMask to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

// Blue is color 1 and is stored as bit value 1.
enum class Color : std::uint8_t { red = 0, blue = 1 };

inline constexpr std::array<Color, 2> kColors = {Color::red, Color::blue};

constexpr Color other(Color c) {
  return c == Color::red ? Color::blue : Color::red;
}
constexpr int index(Color c) { return static_cast<int>(c); }

inline std::string_view to_string(Color c) {
  return c == Color::red ? "red" : "blue";
}

inline Color parse_color(std::string_view s) {
  if (s == "red") return Color::red;
  if (s == "blue") return Color::blue;
  throw ParseError("unknown color '" + std::string(s) + "'");
}

/// The complete multipartite graph K_{a1,...,ak}. Part sizes are kept in
/// descending order; part p owns the contiguous vertex block
/// [part_begin(p), part_begin(p) + part_size(p)). Edges are numbered in
/// lexicographic (u, v), u < v, order.
class MultipartiteShape {
 public:
  MultipartiteShape() = default;

  explicit MultipartiteShape(std::vector<int> part_sizes) {
    if (part_sizes.empty()) throw InvalidShape("shape needs at least one part");
    for (int s : part_sizes)
      if (s < 1) throw InvalidShape("part sizes must be positive");
    std::sort(part_sizes.begin(), part_sizes.end(), std::greater<>());
    const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    if (n > kMaxVertices)
      throw InvalidShape("at most 64 vertices are supported");
    sizes_ = std::move(part_sizes);
    n_ = n;
    begin_.resize(sizes_.size());
    part_of_.resize(n_);
    int offset = 0;
    for (std::size_t p = 0; p < sizes_.size(); ++p) {
      begin_[p] = offset;
      for (int i = 0; i < sizes_[p]; ++i) part_of_[offset + i] = static_cast<int>(p);
      offset += sizes_[p];
    }
    edge_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (part_of_[u] != part_of_[v]) {
          edge_index_[u * n_ + v] = edge_index_[v * n_ + u] =
              static_cast<int>(edges_.size());
          edges_.emplace_back(u, v);
        }
  }

  int vertex_count() const { return n_; }
  int part_count() const { return static_cast<int>(sizes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& part_sizes() const { return sizes_; }
  int part_size(int p) const { return sizes_[p]; }
  int part_begin(int p) const { return begin_[p]; }
  VertexMask part_mask(int p) const {
    return first_n(begin_[p] + sizes_[p]) & ~first_n(begin_[p]);
  }
  VertexMask all() const { return first_n(n_); }

  int part_of(Vertex v) const {
    check_vertex(v);
    return part_of_[v];
  }
  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return part_of_[u] != part_of_[v];
  }
  /// Index of edge uv in lexicographic order, or -1 for a non-edge.
  int edge_index(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return edge_index_[u * n_ + v];
  }
  std::pair<Vertex, Vertex> edge(int i) const { return edges_.at(i); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(sizes_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const MultipartiteShape& a, const MultipartiteShape& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> begin_;
  std::vector<int> part_of_;
  std::vector<int> edge_index_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  int n_ = 0;
};

inline MultipartiteShape build_shape(std::vector<int> part_sizes) {
  return MultipartiteShape(std::move(part_sizes));
}

/// Shape with k parts of size 2.
inline MultipartiteShape gk_shape(int k) {
  return MultipartiteShape(std::vector<int>(static_cast<std::size_t>(k), 2));
}

/// Two-colored simple graph on at most 64 vertices, one adjacency bit row
/// per vertex per color. Any host (multipartite or not) is represented this
/// way; the host's edge set is the union of both color classes.
class ColorGraph {
 public:
  ColorGraph() = default;
  explicit ColorGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InvalidParameter("graph size out of range");
    rows_[0].assign(n, 0);
    rows_[1].assign(n, 0);
  }

  int vertex_count() const { return n_; }
  VertexMask all() const { return first_n(n_); }

  VertexMask neighbors(Color c, Vertex v) const { return rows_[index(c)][v]; }
  VertexMask host_neighbors(Vertex v) const { return rows_[0][v] | rows_[1][v]; }

  bool adjacent(Vertex u, Vertex v) const { return contains(host_neighbors(u), v); }

  std::optional<Color> color_of(Vertex u, Vertex v) const {
    if (contains(rows_[0][u], v)) return Color::red;
    if (contains(rows_[1][u], v)) return Color::blue;
    return std::nullopt;
  }

  void set_edge(Vertex u, Vertex v, Color c) {
    clear_edge(u, v);
    rows_[index(c)][u] |= bit(v);
    rows_[index(c)][v] |= bit(u);
  }

  void clear_edge(Vertex u, Vertex v) {
    for (auto& row : rows_) {
      row[u] &= ~bit(v);
      row[v] &= ~bit(u);
    }
  }

  /// Drops every edge with both ends inside `m`.
  void clear_inside(VertexMask m) {
    for_each_vertex(m, [&](Vertex v) {
      rows_[0][v] &= ~m;
      rows_[1][v] &= ~m;
    });
  }

  void swap_colors() { std::swap(rows_[0], rows_[1]); }

  friend bool operator==(const ColorGraph&, const ColorGraph&) = default;

 private:
  int n_ = 0;
  std::array<std::vector<VertexMask>, 2> rows_;
};

/// A 2-coloring of every edge of a complete multipartite shape.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  explicit EdgeColoring(MultipartiteShape shape, Color fill = Color::red)
      : shape_(std::move(shape)), graph_(shape_.vertex_count()) {
    for (auto [u, v] : shape_.edges()) graph_.set_edge(u, v, fill);
  }

  /// Bit i is the color of the i-th edge in lexicographic order, 1 = blue.
  static EdgeColoring from_bits(MultipartiteShape shape,
                                const std::vector<bool>& bits) {
    if (static_cast<int>(bits.size()) != shape.edge_count())
      throw ParseError("bit count does not match the shape's edge count");
    EdgeColoring chi(std::move(shape));
    for (int i = 0; i < chi.shape_.edge_count(); ++i) {
      auto [u, v] = chi.shape_.edge(i);
      chi.graph_.set_edge(u, v, bits[i] ? Color::blue : Color::red);
    }
    return chi;
  }

  const MultipartiteShape& shape() const { return shape_; }
  const ColorGraph& graph() const { return graph_; }
  int vertex_count() const { return shape_.vertex_count(); }

  Color color(Vertex u, Vertex v) const {
    if (!shape_.adjacent(u, v))
      throw InvalidVertex("vertices " + std::to_string(u) + " and " +
                          std::to_string(v) + " are not adjacent");
    return *graph_.color_of(u, v);
  }

  void set_color(Vertex u, Vertex v, Color c) {
    if (!shape_.adjacent(u, v))
      throw InvalidVertex("cannot color a non-edge");
    graph_.set_edge(u, v, c);
  }

  VertexMask neighbors(Color c, Vertex v) const {
    shape_.check_vertex(v);
    return graph_.neighbors(c, v);
  }

  std::vector<bool> bits() const {
    std::vector<bool> out(shape_.edge_count());
    for (int i = 0; i < shape_.edge_count(); ++i) {
      auto [u, v] = shape_.edge(i);
      out[i] = contains(graph_.neighbors(Color::blue, u), v);
    }
    return out;
  }

  int count_color(Color c) const {
    int total = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) total += count(graph_.neighbors(c, v));
    return total / 2;
  }

  EdgeColoring swapped() const {
    EdgeColoring out = *this;
    out.graph_.swap_colors();
    return out;
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.shape_ == b.shape_ && a.graph_ == b.graph_;
  }

 private:
  MultipartiteShape shape_;
  ColorGraph graph_;
};

// ---------------------------------------------------------------------------
// Distances inside one color class.

/// Color-c BFS distances from `root` in the subgraph induced on `within`.
/// Vertices outside `within` or unreachable get kInfinity.
inline std::vector<int> bfs_distances(const ColorGraph& g, Color c, Vertex root,
                                      VertexMask within) {
  std::vector<int> dist(g.vertex_count(), kInfinity);
  if (!contains(within, root)) return dist;
  dist[root] = 0;
  VertexMask reached = bit(root);
  VertexMask frontier = reached;
  for (int level = 1; frontier; ++level) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex w) { next |= g.neighbors(c, w); });
    next &= within & ~reached;
    for_each_vertex(next, [&](Vertex w) { dist[w] = level; });
    reached |= next;
    frontier = next;
  }
  return dist;
}

/// Vertices within color-c distance `radius` of `root` inside `within`.
inline VertexMask ball(const ColorGraph& g, Color c, Vertex root, int radius,
                       VertexMask within) {
  VertexMask reached = bit(root) & within;
  VertexMask frontier = reached;
  for (int step = 0; step < radius && frontier; ++step) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex w) { next |= g.neighbors(c, w); });
    frontier = next & within & ~reached;
    reached |= frontier;
  }
  return reached;
}

/// True iff the color-c graph induced on nonempty `s` is connected with
/// diameter at most d.
inline bool diameter_at_most(const ColorGraph& g, Color c, VertexMask s, int d) {
  if (s == 0) return false;
  const int size = count(s);
  if (size == 1) return true;
  if (d <= 0) return false;
  if (d >= size - 1) return ball(g, c, lowest(s), size, s) == s;
  bool ok = true;
  for_each_vertex(s, [&](Vertex u) {
    if (ok && ball(g, c, u, d, s) != s) ok = false;
  });
  return ok;
}

/// Exact diameter of the color-c graph induced on `s`; kInfinity if it is
/// disconnected.
inline int induced_diameter(const ColorGraph& g, Color c, VertexMask s) {
  if (s == 0) throw EmptySet("diameter of an empty vertex set");
  int diameter = 0;
  for_each_vertex(s, [&](Vertex u) {
    if (diameter == kInfinity) return;
    auto dist = bfs_distances(g, c, u, s);
    for_each_vertex(s, [&](Vertex w) { diameter = std::max(diameter, dist[w]); });
  });
  return diameter;
}

inline int color_distance(const EdgeColoring& chi, Color c, Vertex u, Vertex v) {
  chi.shape().check_vertex(u);
  chi.shape().check_vertex(v);
  return bfs_distances(chi.graph(), c, u, chi.shape().all())[v];
}

inline int color_diameter(const EdgeColoring& chi, Color c, VertexMask s) {
  if (s & ~chi.shape().all()) throw InvalidVertex("vertex set out of range");
  return induced_diameter(chi.graph(), c, s);
}

/// Largest color-c distance from `root` to another vertex of the host.
inline int eccentricity(const ColorGraph& g, Color c, Vertex root) {
  auto dist = bfs_distances(g, c, root, g.all());
  return *std::max_element(dist.begin(), dist.end());
}

// ---------------------------------------------------------------------------
// Layer decompositions.

/// Color-c BFS layers from a root, viewed through a grouping of the host's
/// vertices. Layer index 4 collects every vertex at distance >= 4, including
/// unreachable ones.
struct LayerPartition {
  Vertex root = 0;
  Color color = Color::red;
  std::vector<int> distance;
  std::vector<VertexMask> groups;

  static constexpr int kFarLayer = 4;

  /// Vertices of group g at layer i (0 <= i <= 4).
  VertexMask layer(int g, int i) const {
    VertexMask out = 0;
    for_each_vertex(groups.at(g), [&](Vertex v) {
      if (bucket(v) == i) out |= bit(v);
    });
    return out;
  }

  VertexMask layer(int i) const {
    VertexMask out = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) out |= layer(static_cast<int>(g), i);
    return out;
  }

  int bucket(Vertex v) const { return std::min(distance[v], kFarLayer); }
};

inline LayerPartition bfs_layers(const ColorGraph& g, Color c, Vertex root,
                                 std::vector<VertexMask> groups) {
  if (root < 0 || root >= g.vertex_count())
    throw InvalidVertex("root out of range");
  LayerPartition out;
  out.root = root;
  out.color = c;
  out.distance = bfs_distances(g, c, root, g.all());
  out.groups = std::move(groups);
  return out;
}

/// `part_group[p]` names the group of part p.
inline LayerPartition bfs_layers(const EdgeColoring& chi, Color c, Vertex root,
                                 const std::vector<int>& part_group) {
  const auto& shape = chi.shape();
  shape.check_vertex(root);
  if (static_cast<int>(part_group.size()) != shape.part_count())
    throw InvalidParameter("grouping must name a group for every part");
  int group_count = 0;
  for (int g : part_group) {
    if (g < 0) throw InvalidParameter("negative group id");
    group_count = std::max(group_count, g + 1);
  }
  std::vector<VertexMask> groups(group_count, 0);
  for (int p = 0; p < shape.part_count(); ++p) groups[part_group[p]] |= shape.part_mask(p);
  return bfs_layers(chi.graph(), c, root, std::move(groups));
}

inline Vertex clone_of(const MultipartiteShape& shape, Vertex v) {
  const int p = shape.part_of(v);
  if (shape.part_size(p) != 2)
    throw NoUniqueClone("vertex " + std::to_string(v) + " is not in a part of size 2");
  const Vertex first = shape.part_begin(p);
  return v == first ? first + 1 : first;
}

/// Common neighbors of v and its clone, split by the color pair they send.
struct CloneProfile {
  Vertex v = 0;
  Vertex clone = 0;
  // sets[i][j]: vertices w with color(v, w) = i and color(clone, w) = j.
  std::array<std::array<VertexMask, 2>, 2> sets{};

  VertexMask at(Color to_v, Color to_clone) const {
    return sets[index(to_v)][index(to_clone)];
  }
};

inline CloneProfile clone_profile(const EdgeColoring& chi, Vertex v) {
  CloneProfile out;
  out.v = v;
  out.clone = clone_of(chi.shape(), v);
  for (Color i : kColors)
    for (Color j : kColors)
      out.sets[index(i)][index(j)] =
          chi.neighbors(i, v) & chi.neighbors(j, out.clone);
  return out;
}

/// Vertices other than x and its clone, binned by color distance (1, 2, or
/// >= 3) from each of the two.
struct BiLayerPartition {
  Vertex x = 0;
  Vertex clone = 0;
  Color color = Color::blue;
  // sets[i][j] for 1 <= i, j <= 3; row and column 0 unused.
  std::array<std::array<VertexMask, 4>, 4> sets{};

  VertexMask at(int i, int j) const { return sets.at(i).at(j); }
  VertexMask row(int i) const { return sets[i][1] | sets[i][2] | sets[i][3]; }
  VertexMask column(int j) const { return sets[1][j] | sets[2][j] | sets[3][j]; }
};

inline BiLayerPartition bilayer_partition(const EdgeColoring& chi, Vertex x,
                                          Color c = Color::blue) {
  BiLayerPartition out;
  out.x = x;
  out.clone = clone_of(chi.shape(), x);
  out.color = c;
  const auto from_x = bfs_distances(chi.graph(), c, x, chi.shape().all());
  const auto from_clone = bfs_distances(chi.graph(), c, out.clone, chi.shape().all());
  for (Vertex w = 0; w < chi.vertex_count(); ++w) {
    if (w == x || w == out.clone) continue;
    const int i = std::min(from_x[w], 3);
    const int j = std::min(from_clone[w], 3);
    out.sets[i][j] |= bit(w);
  }
  return out;
}

}  // namespace mpcover

#endif  // MPCOVER_GRAPH_CORE_HPP
