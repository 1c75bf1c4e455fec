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

#ifndef MPCOVER_CONSTRUCT_HPP
#define MPCOVER_CONSTRUCT_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpcover/cover.hpp"
#include "mpcover/graph_core.hpp"

namespace mpcover {

/// Audit trail of the constructive case analysis.
struct CaseTrace {
  struct Step {
    std::string label;
    std::vector<Vertex> witnesses;
  };
  std::vector<Step> cases;

  void add(std::string label, std::vector<Vertex> witnesses = {}) {
    cases.push_back({std::move(label), std::move(witnesses)});
  }
  bool has(const std::string& label) const {
    for (const auto& s : cases)
      if (s.label == label) return true;
    return false;
  }
};

struct Construction {
  Cover cover;
  CaseTrace trace;
};

/// Every candidate of the diameter-3 pipeline failed verification. Either a
/// bug or a counterexample; carries everything needed to replay it.
class ConstructionExhausted : public Error {
 public:
  ConstructionExhausted(EdgeColoring coloring, CaseTrace attempts)
      : Error("no verified cover of diameter <= 3 was produced"),
        coloring_(std::move(coloring)),
        attempts_(std::move(attempts)) {}
  const EdgeColoring& coloring() const { return coloring_; }
  const CaseTrace& attempts() const { return attempts_; }

 private:
  EdgeColoring coloring_;
  CaseTrace attempts_;
};

// Stable labels used in case traces.
namespace case_label {
inline constexpr const char* kUniversalVertex = "universal-vertex stars";
inline constexpr const char* kSpanning = "spanning color";
inline constexpr const char* kStarDoubleStar = "star and double star";
inline constexpr const char* kRoot = "root";
inline constexpr const char* kFarLayer = "far-layer double stars";
inline constexpr const char* kSecondLayer = "second-layer blue extension";
inline constexpr const char* kCrossEdge = "blue cross edge extension";
inline constexpr const char* kFinal = "final blow-up cover";
inline constexpr const char* kThirdLayerNonempty = "root group has third-layer vertices";
inline constexpr const char* kCrossComplete = "first layers complete in red";
inline constexpr const char* kCrossIncomplete = "first layers not complete in red";
}  // namespace case_label

/// Red star and blue star centered at u.
inline Cover two_stars_at(const ColorGraph& g, Vertex u) {
  return Cover{{star(g, Color::red, u), star(g, Color::blue, u)}};
}

inline Cover two_stars_at(const EdgeColoring& chi, Vertex u) {
  chi.shape().check_vertex(u);
  return two_stars_at(chi.graph(), u);
}

/// Exhaustive search over (star, double star) pairs, every center and color.
/// Returns the first pair that verifies at (d, 2).
inline std::optional<Cover> star_doublestar_search(const ColorGraph& g, int d = 3) {
  const int n = g.vertex_count();
  const VertexMask all = g.all();
  std::vector<MonoSubgraph> stars;
  for (Vertex u = 0; u < n; ++u)
    for (Color c : kColors) stars.push_back(star(g, c, u));
  for (Vertex w1 = 0; w1 < n; ++w1)
    for (Vertex w2 = w1 + 1; w2 < n; ++w2) {
      auto c2 = g.color_of(w1, w2);
      if (!c2) continue;
      const MonoSubgraph ds = double_star(g, *c2, w1, w2);
      const VertexMask rest = all & ~ds.vertices;
      for (const auto& s : stars) {
        if ((s.vertices & rest) != rest) continue;
        Cover cover{{s, ds}};
        if (is_valid_cover(g, cover, d, 2)) return cover;
      }
    }
  return std::nullopt;
}

inline std::optional<Cover> star_doublestar_search(const EdgeColoring& chi, int d = 3) {
  return star_doublestar_search(chi.graph(), d);
}

namespace detail {

/// The diameter-3 case pipeline over a complete tripartite host with groups
/// A, B, C (edges inside a group are absent from `g`).
class TripartitePipeline {
 public:
  TripartitePipeline(const ColorGraph& g, std::array<VertexMask, 3> groups)
      : g_(g), groups_(groups), all_(g.all()) {}

  std::optional<Construction> run() {
    if (auto c = universal_vertex()) return c;
    if (auto c = spanning()) return c;
    if (auto c = dominated_group()) return c;
    for (Color red : kColors)
      for (Vertex v = 0; v < g_.vertex_count(); ++v)
        if (eccentricity(g_, red, v) >= 4)
          if (auto c = from_root(red, v)) return c;
    return std::nullopt;
  }

  const CaseTrace& attempts() const { return attempts_; }

 private:
  std::optional<Construction> accept(CaseTrace context, const char* label,
                                     std::vector<Vertex> witnesses, Cover cover,
                                     int d = 3) {
    attempts_.add(label, witnesses);
    if (!is_valid_cover(g_, cover, d, 2)) return std::nullopt;
    context.add(label, std::move(witnesses));
    return Construction{std::move(cover), std::move(context)};
  }

  int group_of(Vertex v) const {
    for (int i = 0; i < 3; ++i)
      if (contains(groups_[i], v)) return i;
    throw InvalidVertex("vertex outside every group");
  }

  std::optional<Construction> universal_vertex() {
    for (Vertex u = 0; u < g_.vertex_count(); ++u)
      if ((g_.host_neighbors(u) | bit(u)) == all_)
        return accept({}, case_label::kUniversalVertex, {u}, two_stars_at(g_, u), 2);
    return std::nullopt;
  }

  std::optional<Construction> spanning() {
    for (Color c : kColors)
      if (diameter_at_most(g_, c, all_, 3))
        return accept({}, case_label::kSpanning, {},
                      Cover{{MonoSubgraph{c, all_}, singleton(0)}});
    return std::nullopt;
  }

  std::optional<Construction> dominated_group() {
    for (Vertex u = 0; u < g_.vertex_count(); ++u)
      for (const VertexMask part : groups_) {
        if (contains(part, u)) continue;
        for (Color c : kColors) {
          if ((g_.neighbors(c, u) & part) != part) continue;
          attempts_.add(case_label::kStarDoubleStar, {u});
          if (auto cover = star_doublestar_search(g_, 3)) {
            CaseTrace trace;
            trace.add(case_label::kStarDoubleStar, {u});
            return Construction{*cover, std::move(trace)};
          }
          return std::nullopt;
        }
      }
    return std::nullopt;
  }

  bool is_color(Vertex a, Vertex b, Color c) const { return g_.color_of(a, b) == c; }

  std::optional<Construction> from_root(Color red, Vertex v) {
    const Color blue = other(red);
    const int a = group_of(v);
    const int b = a == 0 ? 1 : 0;
    const int c = 3 - a - b;
    const auto layers = bfs_layers(g_, red, v, {groups_[0], groups_[1], groups_[2]});
    auto layer = [&](int group, int i) { return layers.layer(group, i); };

    CaseTrace context;
    context.add(case_label::kRoot, {v, index(red)});

    // Vertices far from the root outside its group.
    for (auto [y, z] : {std::pair{b, c}, std::pair{c, b}}) {
      for (Vertex u4 : to_vertices(layer(y, 4))) {
        if (!is_color(v, u4, blue)) continue;
        for (Vertex u3 : to_vertices(layer(a, 3) | layer(z, 3)))
          for (Vertex u1 : to_vertices(layer(y, 1))) {
            if (!is_color(u1, u3, blue)) continue;
            Cover cover{{double_star(g_, blue, v, u4), double_star(g_, blue, u1, u3)}};
            if (auto r = accept(context, case_label::kFarLayer, {u4, u1, u3}, cover))
              return r;
          }
      }
    }

    // A second-layer vertex outside the root group.
    const VertexMask a2 = layer(a, 2);
    const VertexMask a3 = layer(a, 3);
    for (Vertex x : to_vertices(layer(b, 2) | layer(c, 2))) {
      const VertexMask blue_part = (all_ & ~(a2 | a3)) | g_.neighbors(blue, x);
      Cover cover{{MonoSubgraph{blue, blue_part}, star(g_, red, x)}};
      if (auto r = accept(context, case_label::kSecondLayer, {x}, cover)) return r;
    }

    if (a3) context.add(case_label::kThirdLayerNonempty, to_vertices(a3));

    // A blue edge between the two first layers.
    const VertexMask b1 = layer(b, 1);
    const VertexMask c1 = layer(c, 1);
    std::optional<std::pair<Vertex, Vertex>> blue_cross;
    for (Vertex x : to_vertices(b1))
      for (Vertex y : to_vertices(c1)) {
        if (!is_color(x, y, blue)) continue;
        if (!blue_cross) blue_cross = std::pair{x, y};
        for (Vertex centre : {x, y}) {
          const VertexMask blue_part = (all_ & ~a2) | g_.neighbors(blue, centre);
          Cover cover{{MonoSubgraph{blue, blue_part}, star(g_, red, centre)}};
          if (auto r = accept(context, case_label::kCrossEdge, {x, y, centre}, cover))
            return r;
        }
      }
    if (blue_cross)
      context.add(case_label::kCrossIncomplete, {blue_cross->first, blue_cross->second});
    else
      context.add(case_label::kCrossComplete);

    // Split the root group's second layer between the two colors.
    VertexMask x1 = 0, x2 = 0, x3 = 0;
    for (Vertex x : to_vertices(a2)) {
      const VertexMask red_n = g_.neighbors(red, x);
      const VertexMask blue_n = g_.neighbors(blue, x);
      if ((blue_n & b1) == 0)
        x1 |= bit(x);
      else if ((blue_n & c1) == 0)
        x2 |= bit(x);
      else if ((red_n & b1) && (red_n & c1))
        x3 |= bit(x);
    }
    const VertexMask a2_red = x1 | x2 | x3;
    const VertexMask a2_blue = a2 & ~a2_red;
    const VertexMask red_part = b1 | c1 | a2_red;
    const VertexMask blue_part = (all_ & ~a2) | a2_blue;
    if (red_part == 0 || blue_part == 0) return std::nullopt;
    Cover cover{{MonoSubgraph{blue, blue_part}, MonoSubgraph{red, red_part}}};
    return accept(context, case_label::kFinal, to_vertices(a2_red), cover);
  }

  const ColorGraph& g_;
  std::array<VertexMask, 3> groups_;
  VertexMask all_;
  CaseTrace attempts_;
};

}  // namespace detail

/// Diameter-3 two-subgraph cover of a host whose vertices are split into
/// three groups, with every edge of `g` running between groups.
inline Construction tripartite_cover(const ColorGraph& g, std::array<VertexMask, 3> groups,
                                     const EdgeColoring& forensic) {
  for (VertexMask m : groups)
    if (m == 0) throw InvalidParameter("tripartite cover needs three nonempty groups");
  detail::TripartitePipeline pipeline(g, groups);
  if (auto result = pipeline.run()) return std::move(*result);
  throw ConstructionExhausted(forensic, pipeline.attempts());
}

inline Construction tripartite_cover(const EdgeColoring& chi) {
  const auto& shape = chi.shape();
  if (shape.part_count() != 3)
    throw InvalidParameter("tripartite_cover needs exactly three parts");
  return tripartite_cover(chi.graph(),
                          {shape.part_mask(0), shape.part_mask(1), shape.part_mask(2)}, chi);
}

enum class GroupingStrategy { balanced, first_fit };

/// Assigns every part to one of three groups. Balanced: parts in descending
/// size order go to the currently smallest group. First-fit: the two largest
/// parts stay alone and the rest share the third group.
inline std::vector<int> group_parts(const MultipartiteShape& shape,
                                    GroupingStrategy strategy = GroupingStrategy::balanced) {
  if (shape.part_count() < 3) throw InvalidParameter("grouping needs at least three parts");
  std::vector<int> group(shape.part_count());
  if (strategy == GroupingStrategy::first_fit) {
    for (int p = 0; p < shape.part_count(); ++p) group[p] = std::min(p, 2);
    return group;
  }
  std::array<int, 3> load{};
  for (int p = 0; p < shape.part_count(); ++p) {
    int best = 0;
    for (int g = 1; g < 3; ++g)
      if (load[g] < load[best]) best = g;
    group[p] = best;
    load[best] += shape.part_size(p);
  }
  return group;
}

/// Diameter-3 cover of any complete multipartite graph with at least three
/// parts, built on the spanning tripartite subgraph given by `part_group`
/// and checked against the full coloring.
inline Construction multipartite_cover(const EdgeColoring& chi,
                                       const std::vector<int>& part_group) {
  const auto& shape = chi.shape();
  if (shape.part_count() < 3) throw InvalidParameter("need at least three parts");
  if (static_cast<int>(part_group.size()) != shape.part_count())
    throw InvalidParameter("grouping must cover every part");
  std::array<VertexMask, 3> groups{};
  for (int p = 0; p < shape.part_count(); ++p) {
    if (part_group[p] < 0 || part_group[p] > 2) throw InvalidParameter("group id out of range");
    groups[part_group[p]] |= shape.part_mask(p);
  }

  // A vertex of a singleton part sees everything in the full graph.
  for (int p = 0; p < shape.part_count(); ++p)
    if (shape.part_size(p) == 1) {
      const Vertex u = shape.part_begin(p);
      Cover cover = two_stars_at(chi, u);
      if (is_valid_cover(chi.graph(), cover, 2, 2)) {
        CaseTrace trace;
        trace.add(case_label::kUniversalVertex, {u});
        return {std::move(cover), std::move(trace)};
      }
    }

  ColorGraph host = chi.graph();
  for (VertexMask m : groups) host.clear_inside(m);
  Construction result = tripartite_cover(host, groups, chi);
  if (!is_valid_cover(chi.graph(), result.cover, 3, 2))
    throw std::logic_error("host cover failed against the full coloring");
  return result;
}

inline Construction multipartite_cover(const EdgeColoring& chi,
                                       GroupingStrategy strategy = GroupingStrategy::balanced) {
  return multipartite_cover(chi, group_parts(chi.shape(), strategy));
}

/// At most two monochromatic connected subgraphs covering every vertex of a
/// complete multipartite graph with at least two parts. Works on the
/// spanning complete bipartite graph between the first part and the rest.
inline Cover tc2_cover(const EdgeColoring& chi) {
  const auto& shape = chi.shape();
  if (shape.part_count() < 2) throw InvalidParameter("tc2 cover needs at least two parts");
  const int n = shape.vertex_count();
  const VertexMask all = shape.all();
  const VertexMask left = shape.part_mask(0);
  const VertexMask right = all & ~left;
  ColorGraph host = chi.graph();
  host.clear_inside(right);

  for (Vertex v : to_vertices(left))
    for (Color c : kColors) {
      const Color o = other(c);
      const VertexMask comp = ball(host, c, v, n, all);
      const VertexMask left_in = comp & left;
      const VertexMask right_in = comp & right;
      Cover cover;
      if (left_in == left) {
        cover = {{MonoSubgraph{c, comp}, MonoSubgraph{o, ball(host, o, v, n, all)}}};
      } else if (right_in == right) {
        cover = {{MonoSubgraph{c, comp}, MonoSubgraph{o, (left & ~left_in) | right}}};
      } else {
        cover = {{MonoSubgraph{o, (left & ~left_in) | right_in},
                  MonoSubgraph{o, left_in | (right & ~right_in)}}};
      }
      if (is_valid_cover(chi.graph(), cover, kInfinity, 2)) return cover;
    }
  throw std::logic_error("no connected two-subgraph cover found");
}

}  // namespace mpcover

#endif  // MPCOVER_CONSTRUCT_HPP
