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

#ifndef MPCOVER_IO_HPP
#define MPCOVER_IO_HPP

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpcover/construct.hpp"
#include "mpcover/cover.hpp"
#include "mpcover/extremal.hpp"
#include "mpcover/graph_core.hpp"

namespace mpcover {

using Json = nlohmann::ordered_json;

// Hex form of a bit vector: character j encodes bits 4j..4j+3, with bit
// 4j+b contributing 1 << b.
inline std::string bits_to_hex(const std::vector<bool>& bits) {
  static const char* kDigits = "0123456789abcdef";
  std::vector<int> nibbles((bits.size() + 3) / 4, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) nibbles[i / 4] |= 1 << (i % 4);
  std::string out;
  for (int x : nibbles) out += kDigits[x];
  return out;
}

inline std::vector<bool> hex_to_bits(const std::string& hex, std::size_t count) {
  if (hex.size() != (count + 3) / 4)
    throw ParseError("hex string has " + std::to_string(hex.size()) + " digits, expected " +
                     std::to_string((count + 3) / 4));
  std::vector<bool> bits(count);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[j])));
    int nibble;
    if (ch >= '0' && ch <= '9')
      nibble = ch - '0';
    else if (ch >= 'a' && ch <= 'f')
      nibble = ch - 'a' + 10;
    else
      throw ParseError("bad hex digit in bit string");
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * j + b;
      const bool set = (nibble >> b) & 1;
      if (i < count)
        bits[i] = set;
      else if (set)
        throw ParseError("hex string sets bits past the edge count");
    }
  }
  return bits;
}

inline Json shape_to_json(const MultipartiteShape& shape) { return Json(shape.part_sizes()); }

inline MultipartiteShape shape_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("\"parts\" must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("\"parts\" must hold integers");
    parts.push_back(x.get<int>());
  }
  return MultipartiteShape(std::move(parts));
}

/// Coloring as {"parts": [...], "edges": [[u, v, "red"|"blue"], ...]}, or in
/// compact form {"parts": [...], "bits": "<hex>"}.
inline Json coloring_to_json(const EdgeColoring& chi, bool compact = false) {
  Json j;
  j["parts"] = shape_to_json(chi.shape());
  if (compact) {
    j["bits"] = bits_to_hex(chi.bits());
    return j;
  }
  Json edges = Json::array();
  for (auto [u, v] : chi.shape().edges())
    edges.push_back(Json::array({u, v, std::string(to_string(chi.color(u, v)))}));
  j["edges"] = std::move(edges);
  return j;
}

inline Json coloring_to_json(const LabeledColoring& lc, bool compact = false) {
  Json j = coloring_to_json(lc.coloring, compact);
  Json labels = Json::object();
  for (const auto& [name, v] : lc.labels) labels[name] = v;
  j["labels"] = std::move(labels);
  return j;
}

inline EdgeColoring coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parts")) throw ParseError("coloring needs \"parts\"");
  MultipartiteShape shape = shape_from_json(j.at("parts"));
  if (j.contains("bits")) {
    if (!j.at("bits").is_string()) throw ParseError("\"bits\" must be a hex string");
    return EdgeColoring::from_bits(shape, hex_to_bits(j.at("bits").get<std::string>(),
                                                      shape.edge_count()));
  }
  if (!j.contains("edges")) throw ParseError("coloring needs \"edges\" or \"bits\"");
  EdgeColoring chi(shape);
  std::vector<int> seen(shape.edge_count(), 0);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_string())
      throw ParseError("edge entries must be [u, v, color]");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= shape.vertex_count() || v >= shape.vertex_count() || u >= v)
      throw ParseError("edge endpoints must satisfy 0 <= u < v < n");
    const int idx = shape.edge_index(u, v);
    if (idx < 0) throw ParseError("edge joins two vertices of the same part");
    if (seen[idx]++) throw ParseError("edge listed twice");
    chi.set_color(u, v, parse_color(e[2].get<std::string>()));
  }
  for (int s : seen)
    if (!s) throw ParseError("coloring leaves an edge uncolored");
  return chi;
}

inline Json cover_to_json(const Cover& cover) {
  Json subs = Json::array();
  for (const auto& s : cover.subgraphs)
    subs.push_back({{"color", std::string(to_string(s.color))}, {"vertices", to_vertices(s.vertices)}});
  return Json{{"subgraphs", std::move(subs)}};
}

inline Cover cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("subgraphs") || !j.at("subgraphs").is_array())
    throw ParseError("cover needs a \"subgraphs\" array");
  Cover cover;
  for (const auto& s : j.at("subgraphs")) {
    MonoSubgraph g;
    g.color = parse_color(s.at("color").get<std::string>());
    for (const auto& v : s.at("vertices")) {
      const int id = v.get<int>();
      if (id < 0 || id >= kMaxVertices) throw ParseError("cover vertex out of range");
      g.vertices |= bit(id);
    }
    cover.subgraphs.push_back(g);
  }
  return cover;
}

inline Json trace_to_json(const CaseTrace& trace) {
  Json cases = Json::array();
  for (const auto& s : trace.cases) cases.push_back({{"label", s.label}, {"witnesses", s.witnesses}});
  return Json{{"cases", std::move(cases)}};
}

inline CaseTrace trace_from_json(const Json& j) {
  CaseTrace trace;
  for (const auto& s : j.at("cases"))
    trace.add(s.at("label").get<std::string>(), s.at("witnesses").get<std::vector<Vertex>>());
  return trace;
}

inline Json violation_to_json(const Violation& v) {
  return Json{{"kind", std::string(to_string(v.kind))},
              {"witness", v.witness},
              {"subgraph", v.subgraph}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

/// Writes through a temporary file so a reader never sees a partial file.
inline void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp);
    out << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw ParseError("cannot replace " + path);
}

}  // namespace mpcover

#endif  // MPCOVER_IO_HPP
