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

#ifndef MPCOVER_RYSER_HPP
#define MPCOVER_RYSER_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mpcover/cover.hpp"
#include "mpcover/graph_core.hpp"
#include "mpcover/io.hpp"

namespace mpcover {

/// An r-partite hypergraph on vertices 0..N-1. classes[i] lists V_i; every
/// vertex lies in exactly one class and every edge meets each class at most
/// once. Edges are kept sorted and duplicate-free.
struct Hypergraph {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> edges;

  int vertex_count() const {
    int n = 0;
    for (const auto& c : classes) n += static_cast<int>(c.size());
    return n;
  }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int rank() const { return static_cast<int>(classes.size()); }

  int class_of(int v) const {
    for (int i = 0; i < rank(); ++i)
      if (std::find(classes[i].begin(), classes[i].end(), v) != classes[i].end()) return i;
    throw InvalidVertex("hypergraph vertex " + std::to_string(v) + " is in no class");
  }

  VertexMask edge_mask(int e) const { return to_mask(edges[e]); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Sorts and deduplicates edges and checks the partition and r-partiteness.
inline Hypergraph make_hypergraph(std::vector<std::vector<int>> classes,
                                  std::vector<std::vector<int>> edges) {
  Hypergraph h{std::move(classes), {}};
  const int n = h.vertex_count();
  if (n > kMaxVertices) throw CapExceeded("hypergraph has more than 64 vertices", n);
  std::vector<int> owner(n, -1);
  for (int i = 0; i < h.rank(); ++i)
    for (int v : h.classes[i]) {
      if (v < 0 || v >= n) throw InvalidParameter("class vertices must be numbered 0..N-1");
      if (owner[v] >= 0) throw InvalidParameter("vertex appears in two classes");
      owner[v] = i;
    }
  for (auto& c : h.classes) std::sort(c.begin(), c.end());
  for (auto& e : edges) {
    if (e.empty()) throw InvalidParameter("hyperedges must be nonempty");
    std::sort(e.begin(), e.end());
    std::vector<int> seen(h.rank(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) throw InvalidVertex("hyperedge names an unknown vertex");
      if (i > 0 && e[i] == e[i - 1]) throw InvalidParameter("hyperedge repeats a vertex");
      if (seen[owner[e[i]]]++) throw InvalidParameter("hyperedge meets a class twice");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  h.edges = std::move(edges);
  return h;
}

inline Json hypergraph_to_json(const Hypergraph& h) {
  return Json{{"classes", h.classes}, {"edges", h.edges}};
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  try {
    return make_hypergraph(j.at("classes").get<std::vector<std::vector<int>>>(),
                           j.at("edges").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed hypergraph: ") + e.what());
  }
}

/// Hypergraph of monochromatic components: one vertex per component of each
/// color (class 0 red, class 1 blue, trivial components included) and one
/// edge per graph vertex holding its two components.
struct ComponentHypergraph {
  Hypergraph hypergraph;
  /// Graph vertices of each hypergraph vertex.
  std::vector<VertexMask> components;
  std::vector<Color> component_color;
  /// Index in hypergraph.edges of the edge contributed by each graph vertex.
  std::vector<int> edge_of;
};

inline ComponentHypergraph graph_to_hypergraph(const ColorGraph& g) {
  const int n = g.vertex_count();
  const VertexMask all = g.all();
  ComponentHypergraph out;
  std::vector<std::vector<int>> classes(2);
  std::vector<std::array<int, 2>> comp_of(n);
  for (Color c : kColors) {
    VertexMask left = all;
    while (left) {
      const VertexMask comp = ball(g, c, lowest(left), n, all);
      const int id = static_cast<int>(out.components.size());
      out.components.push_back(comp);
      out.component_color.push_back(c);
      classes[index(c)].push_back(id);
      for_each_vertex(comp, [&](Vertex v) { comp_of[v][index(c)] = id; });
      left &= ~comp;
    }
  }
  std::vector<std::vector<int>> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({comp_of[v][0], comp_of[v][1]});
  out.hypergraph = make_hypergraph(std::move(classes), edges);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> e = edges[v];
    std::sort(e.begin(), e.end());
    const auto& hs = out.hypergraph.edges;
    out.edge_of.push_back(
        static_cast<int>(std::lower_bound(hs.begin(), hs.end(), e) - hs.begin()));
  }
  return out;
}

inline ComponentHypergraph graph_to_hypergraph(const EdgeColoring& chi) {
  return graph_to_hypergraph(chi.graph());
}

/// Intersection graph on the hyperedges, each edge colored by the smallest
/// class holding a shared vertex (class 0 red, class 1 blue).
inline ColorGraph hypergraph_to_graph(const Hypergraph& h) {
  if (h.rank() > 2) throw Unsupported("only 2-partite hypergraphs map to 2-colorings");
  const int m = h.edge_count();
  if (m > kMaxVertices) throw CapExceeded("hypergraph has more than 64 edges", m);
  std::vector<int> owner(h.vertex_count());
  for (int i = 0; i < h.rank(); ++i)
    for (int v : h.classes[i]) owner[v] = i;
  ColorGraph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      int best = -1;
      for (int v : h.edges[a])
        if (std::binary_search(h.edges[b].begin(), h.edges[b].end(), v))
          if (best < 0 || owner[v] < best) best = owner[v];
      if (best >= 0) g.set_edge(a, b, best == 0 ? Color::red : Color::blue);
    }
  return g;
}

struct StatsCaps {
  int max_vertices = 16;
  /// Also caps the vertex count of a graph, whose vertices are hyperedges.
  int max_edges = 24;
};

struct HypergraphStats {
  int tau = 0;
  std::vector<int> tau_witness;  // vertices
  int nu = 0;
  std::vector<int> nu_witness;  // edge indices
};

struct GraphStats {
  int alpha = 0;
  VertexMask alpha_witness = 0;
  int tc = 0;
  Cover tc_witness;
};

namespace detail {

/// Smallest hitting set of `sets` drawn from their own elements, by
/// branching on the elements of the first unhit set.
class HittingSet {
 public:
  explicit HittingSet(std::vector<VertexMask> sets) : sets_(std::move(sets)) {}

  VertexMask solve() {
    best_ = 0;
    best_size_ = 65;
    chosen_ = 0;
    branch(0);
    return best_;
  }

 private:
  void branch(int size) {
    if (size >= best_size_) return;
    for (VertexMask s : sets_)
      if (!(s & chosen_)) {
        if (size + 1 >= best_size_) return;
        for_each_vertex(s, [&](Vertex v) {
          chosen_ |= bit(v);
          branch(size + 1);
          chosen_ &= ~bit(v);
        });
        return;
      }
    best_ = chosen_;
    best_size_ = size;
  }

  std::vector<VertexMask> sets_;
  VertexMask chosen_ = 0;
  VertexMask best_ = 0;
  int best_size_ = 65;
};

/// Largest independent set among `candidates` for adjacency rows `adj`.
inline VertexMask max_independent(const std::vector<VertexMask>& adj, VertexMask candidates,
                                  VertexMask chosen, VertexMask best) {
  if (count(chosen) + count(candidates) <= count(best)) return best;
  if (!candidates) return chosen;
  const Vertex v = lowest(candidates);
  best = max_independent(adj, candidates & ~bit(v) & ~adj[v], chosen | bit(v), best);
  if (adj[v] & candidates) best = max_independent(adj, candidates & ~bit(v), chosen, best);
  return best;
}

}  // namespace detail

inline bool is_vertex_cover(const Hypergraph& h, const std::vector<int>& vertices) {
  const VertexMask s = to_mask(vertices);
  for (int e = 0; e < h.edge_count(); ++e)
    if (!(h.edge_mask(e) & s)) return false;
  return true;
}

inline bool is_matching(const Hypergraph& h, const std::vector<int>& edges) {
  VertexMask used = 0;
  for (int e : edges) {
    if (e < 0 || e >= h.edge_count() || (h.edge_mask(e) & used)) return false;
    used |= h.edge_mask(e);
  }
  return true;
}

inline bool is_independent(const ColorGraph& g, VertexMask s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) { ok = ok && !(g.host_neighbors(v) & s); });
  return ok;
}

inline HypergraphStats exact_stats(const Hypergraph& h, const StatsCaps& caps = {}) {
  if (h.vertex_count() > caps.max_vertices)
    throw CapExceeded("hypergraph exceeds the vertex cap", h.vertex_count());
  if (h.edge_count() > caps.max_edges)
    throw CapExceeded("hypergraph exceeds the edge cap", h.edge_count());
  HypergraphStats out;
  std::vector<VertexMask> sets;
  for (int e = 0; e < h.edge_count(); ++e) sets.push_back(h.edge_mask(e));
  out.tau_witness = to_vertices(detail::HittingSet(sets).solve());
  out.tau = static_cast<int>(out.tau_witness.size());

  // Matchings are independent sets of the edge-intersection graph.
  std::vector<VertexMask> clash(h.edge_count(), 0);
  for (int a = 0; a < h.edge_count(); ++a)
    for (int b = 0; b < h.edge_count(); ++b)
      if (a != b && (sets[a] & sets[b])) clash[a] |= bit(b);
  out.nu_witness = to_vertices(
      detail::max_independent(clash, first_n(h.edge_count()), 0, 0));
  out.nu = static_cast<int>(out.nu_witness.size());

  if (!is_vertex_cover(h, out.tau_witness) || !is_matching(h, out.nu_witness))
    throw std::logic_error("hypergraph statistics failed their own check");
  return out;
}

/// Independence number and the fewest monochromatic connected subgraphs
/// covering the vertices (diameter unbounded).
inline GraphStats exact_stats(const ColorGraph& g, const StatsCaps& caps = {}) {
  const int n = g.vertex_count();
  if (n > caps.max_edges) throw CapExceeded("graph exceeds the vertex cap", n);
  GraphStats out;
  std::vector<VertexMask> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.host_neighbors(v);
  out.alpha_witness = detail::max_independent(adj, g.all(), 0, 0);
  out.alpha = count(out.alpha_witness);

  // A minimum cover uses whole components; each vertex lies in one
  // component per color, so this is a hitting set on the component
  // hypergraph.
  const ComponentHypergraph ch = graph_to_hypergraph(g);
  std::vector<VertexMask> per_vertex;
  for (const auto& e : ch.hypergraph.edges) per_vertex.push_back(to_mask(e));
  const VertexMask picked = detail::HittingSet(per_vertex).solve();
  for_each_vertex(picked, [&](Vertex id) {
    out.tc_witness.subgraphs.push_back({ch.component_color[id], ch.components[id]});
  });
  out.tc = static_cast<int>(out.tc_witness.size());

  if (!is_independent(g, out.alpha_witness) ||
      !is_valid_cover(g, out.tc_witness, kInfinity, out.tc))
    throw std::logic_error("graph statistics failed their own check");
  return out;
}

struct InequalityCheck {
  std::string inequality;
  int lhs = 0;
  int rhs = 0;
  bool ok = true;
};

using EquivalenceReport = std::vector<InequalityCheck>;

inline Json report_to_json(const EquivalenceReport& report) {
  Json out = Json::array();
  for (const auto& c : report)
    out.push_back(
        Json{{"inequality", c.inequality}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
  return out;
}

namespace detail {
inline InequalityCheck at_most(std::string name, int lhs, int rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs};
}

inline EquivalenceReport require_all(EquivalenceReport report) {
  for (const auto& c : report)
    if (!c.ok)
      throw InequalityViolated(c.inequality + " fails: " + std::to_string(c.lhs) + " > " +
                               std::to_string(c.rhs));
  return report;
}
}  // namespace detail

/// Graph side: the component hypergraph H of a 2-colored graph G satisfies
/// tc(G) <= tau(H) and nu(H) <= alpha(G); with r = 2, tau(H) <= nu(H).
inline EquivalenceReport equivalence_report(const ColorGraph& g, const StatsCaps& caps = {}) {
  const ComponentHypergraph ch = graph_to_hypergraph(g);
  const GraphStats gs = exact_stats(g, caps);
  const HypergraphStats hs = exact_stats(ch.hypergraph, {2 * caps.max_edges, caps.max_edges});
  return {detail::at_most("tc(G) <= tau(H)", gs.tc, hs.tau),
          detail::at_most("tau(H) <= nu(H)", hs.tau, hs.nu),
          detail::at_most("nu(H) <= alpha(G)", hs.nu, gs.alpha),
          detail::at_most("tc(G) <= alpha(G)", gs.tc, gs.alpha)};
}

/// Hypergraph side: for the intersection graph G of H, tau(H) <= tc(G) and
/// alpha(G) <= nu(H); with r = 2, tau(H) <= nu(H).
inline EquivalenceReport equivalence_report(const Hypergraph& h, const StatsCaps& caps = {}) {
  const ColorGraph g = hypergraph_to_graph(h);
  const HypergraphStats hs = exact_stats(h, caps);
  const GraphStats gs = exact_stats(g, caps);
  return {detail::at_most("tau(H) <= tc(G)", hs.tau, gs.tc),
          detail::at_most("tc(G) <= alpha(G)", gs.tc, gs.alpha),
          detail::at_most("alpha(G) <= nu(H)", gs.alpha, hs.nu),
          detail::at_most("tau(H) <= nu(H)", hs.tau, hs.nu)};
}

/// Like equivalence_report, but throws InequalityViolated on any failure.
inline EquivalenceReport verify_equivalence_chain(const EdgeColoring& chi,
                                                  const StatsCaps& caps = {}) {
  return detail::require_all(equivalence_report(chi.graph(), caps));
}

inline EquivalenceReport verify_equivalence_chain(const ColorGraph& g,
                                                  const StatsCaps& caps = {}) {
  return detail::require_all(equivalence_report(g, caps));
}

inline EquivalenceReport verify_equivalence_chain(const Hypergraph& h,
                                                  const StatsCaps& caps = {}) {
  return detail::require_all(equivalence_report(h, caps));
}

}  // namespace mpcover

#endif  // MPCOVER_RYSER_HPP
