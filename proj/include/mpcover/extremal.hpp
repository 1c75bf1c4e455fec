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

#ifndef MPCOVER_EXTREMAL_HPP
#define MPCOVER_EXTREMAL_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpcover/graph_core.hpp"

namespace mpcover {

/// A generated coloring plus the human-readable vertex names it was drawn
/// with.
struct LabeledColoring {
  EdgeColoring coloring;
  std::map<std::string, Vertex> labels;
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("family checksum failed: ") + what);
}
}  // namespace detail

/// Vertex names of the K_{2k+1, 2, ..., 2} family: a1..a2k are 0..2k-1, c is
/// 2k and b_i is 2k+i, so {b_{2i-1}, b_{2i}} are the size-2 parts.
inline std::map<std::string, Vertex> thm31_labels(int k) {
  std::map<std::string, Vertex> labels;
  for (int i = 1; i <= 2 * k; ++i) {
    labels["a" + std::to_string(i)] = i - 1;
    labels["b" + std::to_string(i)] = 2 * k + i;
  }
  labels["c"] = 2 * k;
  return labels;
}

/// Blue on a_i b_i, c b_i and every b_i b_j edge; red elsewhere. No two
/// subgraphs of diameter 2 cover it.
inline EdgeColoring gen_thm31(int k) {
  if (k < 2) throw InvalidParameter("the K_{2k+1,2,...,2} family needs k >= 2");
  std::vector<int> parts{2 * k + 1};
  for (int i = 0; i < k; ++i) parts.push_back(2);
  EdgeColoring chi(MultipartiteShape(parts), Color::red);
  const Vertex c = 2 * k;
  auto b = [&](int i) { return 2 * k + i; };
  for (int i = 1; i <= 2 * k; ++i) {
    chi.set_color(i - 1, b(i), Color::blue);
    chi.set_color(c, b(i), Color::blue);
    for (int j = i + 1; j <= 2 * k; ++j)
      if (chi.shape().adjacent(b(i), b(j))) chi.set_color(b(i), b(j), Color::blue);
  }

  detail::require(chi.neighbors(Color::red, c) == 0, "c is red-isolated");
  for (Vertex a = 0; a < 2 * k; ++a)
    detail::require(count(chi.neighbors(Color::blue, a)) == 1, "blue at a_i is a matching");
  detail::require(color_distance(chi, Color::red, 0, b(1)) == 3, "d_red(a1, b1) = 3");
  detail::require(color_distance(chi, Color::blue, 0, b(2)) == 3, "d_blue(a1, b2) = 3");
  return chi;
}

/// fig4 vertex names v0..v8 mapped to canonical ids: the size-4 part
/// {v0..v3}, then {v6, v7, v8}, then {v4, v5}.
inline std::map<std::string, Vertex> fig4_labels() {
  return {{"v0", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}, {"v6", 4},
          {"v7", 5}, {"v8", 6}, {"v4", 7}, {"v5", 8}};
}

/// The K_{4,3,2} coloring without a two-subgraph diameter-2 cover.
inline EdgeColoring gen_fig4() {
  const auto id = fig4_labels();
  static const std::vector<std::pair<const char*, const char*>> kBlue = {
      {"v0", "v4"}, {"v0", "v5"}, {"v0", "v7"}, {"v0", "v8"}, {"v1", "v4"}, {"v1", "v6"},
      {"v1", "v7"}, {"v2", "v4"}, {"v2", "v8"}, {"v3", "v5"}, {"v5", "v7"}, {"v5", "v8"}};
  static const std::vector<std::pair<const char*, const char*>> kRed = {
      {"v0", "v6"}, {"v1", "v5"}, {"v1", "v8"}, {"v2", "v5"}, {"v2", "v6"},
      {"v2", "v7"}, {"v3", "v4"}, {"v3", "v6"}, {"v3", "v7"}, {"v3", "v8"},
      {"v4", "v6"}, {"v4", "v7"}, {"v4", "v8"}, {"v5", "v6"}};

  MultipartiteShape shape({4, 3, 2});
  // Both literal lists together must name each of the 26 edges once.
  EdgeColoring chi(shape, Color::blue);
  std::vector<int> seen(shape.edge_count(), 0);
  for (auto [u, v] : kBlue) {
    const int e = shape.edge_index(id.at(u), id.at(v));
    detail::require(e >= 0, "blue list names an edge");
    ++seen[e];
  }
  for (auto [u, v] : kRed) {
    const int e = shape.edge_index(id.at(u), id.at(v));
    detail::require(e >= 0, "red list names an edge");
    ++seen[e];
    chi.set_color(id.at(u), id.at(v), Color::red);
  }
  for (int s : seen) detail::require(s == 1, "every edge is listed exactly once");

  auto d = [&](Color c, const char* u, const char* v) {
    return color_distance(chi, c, id.at(u), id.at(v));
  };
  for (auto [u, v] : {std::pair{"v2", "v3"}, std::pair{"v2", "v6"}, std::pair{"v3", "v6"}})
    detail::require(d(Color::blue, u, v) >= 3, "v2, v3, v6 pairwise blue-far");
  for (auto [u, v] : {std::pair{"v0", "v1"}, std::pair{"v0", "v7"}, std::pair{"v1", "v7"}})
    detail::require(d(Color::red, u, v) == 3, "v0, v1, v7 pairwise red distance 3");
  return chi;
}

inline LabeledColoring family_thm31(int k) { return {gen_thm31(k), thm31_labels(k)}; }
inline LabeledColoring family_fig4() { return {gen_fig4(), fig4_labels()}; }

/// Parses "thm31:k=K", "fig4" or "fig3" (an alias of thm31 with k = 2).
inline LabeledColoring generate_family(const std::string& name) {
  if (name == "fig4") return family_fig4();
  if (name == "fig3") return family_thm31(2);
  const std::string prefix = "thm31:k=";
  if (name.rfind(prefix, 0) == 0) {
    int k = 0;
    std::size_t used = 0;
    try {
      k = std::stoi(name.substr(prefix.size()), &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used > 0 && used == name.size() - prefix.size()) return family_thm31(k);
  }
  throw ParseError("unknown family '" + name + "'");
}

}  // namespace mpcover

#endif  // MPCOVER_EXTREMAL_HPP
