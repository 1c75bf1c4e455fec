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

// Command implementations behind the mpcover CLI. Each command takes a
// RunConfig and returns the report text plus an exit code:
// 0 = claim verified, 1 = claim refuted or violation found,
// 2 = configuration or cap error.

#ifndef MPCOVER_HARNESS_HPP
#define MPCOVER_HARNESS_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mpcover/construct.hpp"
#include "mpcover/cover.hpp"
#include "mpcover/decide.hpp"
#include "mpcover/extremal.hpp"
#include "mpcover/graph_core.hpp"
#include "mpcover/io.hpp"
#include "mpcover/ryser.hpp"
#include "mpcover/search.hpp"

namespace mpcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitConfig = 2;

/// Everything that determines a run. Reports embed it verbatim.
struct RunConfig {
  std::string command;
  std::vector<int> parts;
  std::string input;
  std::string cover_path;
  std::string hypergraph_path;
  std::string family;
  std::string grouping = "balanced";
  int t = 2;
  int d = 3;
  int d_max = 4;
  int k = 0;
  int threads = 1;
  std::uint64_t seed = 1;
  int iterations = 100;
  std::string mode;
  PruneConfig prune;
  bool symmetry = true;
  std::string checkpoint;
  std::uint64_t stop_after = 0;
  std::optional<int> expect;
  std::string format = "json";
  bool timing = false;
  bool compact = false;
  int cap_edges = kDefaultEdgeCap;
  std::string reproducer_dir;
};

inline Json run_config_to_json(const RunConfig& c) {
  return Json{{"command", c.command},
              {"parts", c.parts},
              {"input", c.input},
              {"cover", c.cover_path},
              {"hypergraph", c.hypergraph_path},
              {"family", c.family},
              {"grouping", c.grouping},
              {"t", c.t},
              {"d", c.d},
              {"d_max", c.d_max},
              {"k", c.k},
              {"threads", c.threads},
              {"seed", c.seed},
              {"iterations", c.iterations},
              {"mode", c.mode},
              {"prune", detail::prune_to_json(c.prune)},
              {"symmetry", c.symmetry},
              {"checkpoint", c.checkpoint},
              {"stop_after", c.stop_after},
              {"expect", c.expect ? Json(*c.expect) : Json(nullptr)},
              {"format", c.format},
              {"timing", c.timing},
              {"cap_edges", c.cap_edges}};
}

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  /// Human-facing notes for stderr.
  std::string notes;
};

/// Closed-form value of D for two colors and two subgraphs on a complete
/// tripartite graph: 3 when the shape contains K_{5,2,2} or K_{4,3,2}, 1 for
/// K_{1,1,1} and K_{2,1,1}, and 2 otherwise.
inline int classify_tripartite(const MultipartiteShape& shape) {
  if (shape.part_count() != 3)
    throw Unsupported("the closed-form classification covers three parts only");
  const int a = shape.part_size(0);
  const int b = shape.part_size(1);
  const int c = shape.part_size(2);
  if ((a == 1 || a == 2) && b == 1 && c == 1) return 1;
  if ((a >= 5 && b >= 2 && c >= 2) || (a >= 4 && b >= 3 && c >= 2)) return 3;
  return 2;
}

namespace detail {

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline GroupingStrategy parse_grouping(const std::string& s) {
  if (s == "balanced") return GroupingStrategy::balanced;
  if (s == "first-fit") return GroupingStrategy::first_fit;
  throw InvalidParameter("grouping must be balanced or first-fit");
}

/// Largest diameter among the subgraphs of a cover.
inline int cover_diameter(const ColorGraph& g, const Cover& cover) {
  int d = 0;
  for (const auto& s : cover.subgraphs) d = std::max(d, subgraph_diameter(g, s));
  return d;
}

}  // namespace detail

inline CommandResult cmd_gen(const RunConfig& cfg) {
  const LabeledColoring lc = generate_family(cfg.family);
  Json out = coloring_to_json(lc, cfg.compact);
  return {kExitOk, detail::dump(out), {}};
}

/// Builds and verifies a diameter-3 cover. Shapes with fewer than three
/// parts fall outside the guarantee; they get a best-effort exact search.
inline CommandResult cmd_cover(const RunConfig& cfg) {
  const EdgeColoring chi = coloring_from_json(read_json_file(cfg.input));
  CommandResult result;
  Json out{{"config", run_config_to_json(cfg)}};
  Cover cover;
  CaseTrace trace;
  if (chi.shape().part_count() < 3) {
    result.notes = "warning: the diameter-3 guarantee needs at least three parts; "
                   "trying an exact search instead\n";
    const ExistenceResult r = cover_exists(chi, 2, cfg.d);
    if (!r.exists) {
      out["verified"] = false;
      out["cover"] = nullptr;
      return {kExitRefuted, detail::dump(out), result.notes};
    }
    cover = *r.witness;
    trace.add(std::string("exact search: ") + std::string(to_string(r.rule)));
  } else {
    try {
      Construction c = multipartite_cover(chi, detail::parse_grouping(cfg.grouping));
      cover = std::move(c.cover);
      trace = std::move(c.trace);
    } catch (const ConstructionExhausted& e) {
      Json forensics{{"config", run_config_to_json(cfg)},
                     {"coloring", coloring_to_json(e.coloring())},
                     {"attempts", trace_to_json(e.attempts())}};
      const std::string path = cfg.input + ".forensics.json";
      write_json_file(path, forensics);
      out["verified"] = false;
      out["forensics"] = path;
      return {kExitRefuted, detail::dump(out), std::string(e.what()) + "\n"};
    }
  }
  const auto violation = verify_cover(chi, cover, cfg.d, 2);
  out["verified"] = !violation;
  out["d_achieved"] = detail::cover_diameter(chi.graph(), cover);
  out["cover"] = cover_to_json(cover);
  out["trace"] = trace_to_json(trace);
  if (violation) out["violation"] = violation_to_json(*violation);
  result.exit_code = violation ? kExitRefuted : kExitOk;
  result.output = detail::dump(out);
  return result;
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
  const EdgeColoring chi = coloring_from_json(read_json_file(cfg.input));
  const Cover cover = cover_from_json(read_json_file(cfg.cover_path));
  const auto violation = verify_cover(chi, cover, cfg.d, cfg.t);
  Json out{{"config", run_config_to_json(cfg)}, {"valid", !violation}};
  if (violation) out["violation"] = violation_to_json(*violation);
  return {violation ? kExitRefuted : kExitOk, detail::dump(out), {}};
}

inline CommandResult cmd_exists(const RunConfig& cfg) {
  const EdgeColoring chi = coloring_from_json(read_json_file(cfg.input));
  const ExistenceResult r = cover_exists(chi, cfg.t, cfg.d, cfg.prune);
  Json out{{"config", run_config_to_json(cfg)},
           {"exists", r.exists},
           {"rule", std::string(to_string(r.rule))},
           {"witness", r.witness ? cover_to_json(*r.witness) : Json(nullptr)}};
  return {r.exists ? kExitOk : kExitRefuted, detail::dump(out), {}};
}

namespace detail {

inline CommandResult search_report(const RunConfig& cfg, const SearchResult& r) {
  CommandResult out;
  if (cfg.format == "tsv") {
    out.output = "# config: " + run_config_to_json(cfg).dump() + "\n" +
                 tsv_header(cfg.timing) + "\n" + format_tsv(r, cfg.timing) + "\n";
  } else {
    Json j = search_result_to_json(r, cfg.timing);
    j["config"] = run_config_to_json(cfg);
    out.output = dump(j);
  }
  if (!r.complete) {
    out.exit_code = kExitConfig;
    out.notes = "stopped at the configured budget; rerun with the same checkpoint to resume\n";
  } else if (cfg.expect) {
    out.exit_code = r.D == *cfg.expect ? kExitOk : kExitRefuted;
  } else {
    out.exit_code = r.exceeded() ? kExitRefuted : kExitOk;
  }
  return out;
}

inline SearchConfig search_config(const RunConfig& cfg) {
  SearchConfig sc;
  sc.t = cfg.t;
  sc.d_max = cfg.d_max;
  sc.symmetry = cfg.symmetry;
  sc.prune = cfg.prune;
  sc.max_edges = cfg.cap_edges;
  return sc;
}

inline RunOptions run_options(const RunConfig& cfg) {
  return RunOptions{cfg.threads, cfg.checkpoint, true, cfg.stop_after};
}

}  // namespace detail

inline CommandResult cmd_compute_d(const RunConfig& cfg) {
  const SearchResult r = compute_D(MultipartiteShape(cfg.parts), detail::search_config(cfg),
                                   detail::run_options(cfg));
  return detail::search_report(cfg, r);
}

inline CommandResult cmd_classify(const RunConfig& cfg) {
  const MultipartiteShape shape(cfg.parts);
  const int value = classify_tripartite(shape);
  Json out{{"config", run_config_to_json(cfg)}, {"shape", shape_to_json(shape)}, {"D", value}};
  return {kExitOk, detail::dump(out), {}};
}

inline CommandResult cmd_gk(const RunConfig& cfg) {
  RunConfig local = cfg;
  if (local.checkpoint.empty()) local.checkpoint = "gk" + std::to_string(cfg.k) + ".checkpoint.json";
  const SearchResult r =
      gk_survey(cfg.k, detail::search_config(local), detail::run_options(local));
  CommandResult out = detail::search_report(local, r);
  std::uint64_t violations = 0;
  for (const auto& [key, v] : r.counts)
    if (key.rfind("property_violations:", 0) == 0) violations += v;
  if (violations && out.exit_code == kExitOk) out.exit_code = kExitRefuted;
  return out;
}

inline CommandResult cmd_ryser(const RunConfig& cfg) {
  EquivalenceReport report;
  if (!cfg.hypergraph_path.empty())
    report = equivalence_report(hypergraph_from_json(read_json_file(cfg.hypergraph_path)));
  else
    report = equivalence_report(coloring_from_json(read_json_file(cfg.input)).graph());
  const bool ok = std::all_of(report.begin(), report.end(),
                              [](const InequalityCheck& c) { return c.ok; });
  Json out{{"config", run_config_to_json(cfg)}, {"report", report_to_json(report)}, {"ok", ok}};
  return {ok ? kExitOk : kExitRefuted, detail::dump(out), {}};
}

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzSummary {
  std::string mode;
  std::uint64_t seed = 0;
  int iterations = 0;
  int violations = 0;
  Counts counts;
  std::vector<std::string> reproducers;
};

inline Json fuzz_summary_to_json(const FuzzSummary& s) {
  return Json{{"mode", s.mode},
              {"seed", s.seed},
              {"iterations", s.iterations},
              {"violations", s.violations},
              {"counts", detail::counts_to_json(s.counts)},
              {"reproducers", s.reproducers}};
}

namespace detail {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Random part sizes: between min_parts and max_parts parts, at most
/// max_vertices vertices in total.
inline MultipartiteShape random_shape(Rng& rng, int min_parts, int max_parts, int max_vertices,
                                      int min_size = 1) {
  const int k = uniform(rng, min_parts, max_parts);
  const int max_size = std::max(min_size, uniform(rng, 1, 3) == 1 ? 2 : max_vertices / k);
  std::vector<int> parts;
  int left = max_vertices;
  for (int i = 0; i < k; ++i) {
    const int room = left - min_size * (k - i - 1);
    const int size = uniform(rng, min_size, std::max(min_size, std::min(max_size, room)));
    parts.push_back(size);
    left -= size;
  }
  return MultipartiteShape(parts);
}

/// Random colorings with structure: plain coin flips at a random bias,
/// level-banded colorings (blue between close levels, which stretches blue
/// distances), and two-community colorings; all with optional noise.
inline EdgeColoring random_coloring(Rng& rng, const MultipartiteShape& shape) {
  EdgeColoring chi(shape, Color::red);
  const int n = shape.vertex_count();
  const int style = uniform(rng, 0, 3);
  const double noise = std::array<double, 3>{0.0, 0.03, 0.12}[uniform(rng, 0, 2)];
  const double bias = style == 0 ? 0.5 : unit(rng);
  const int levels = uniform(rng, 2, 7);
  std::vector<int> label(n);
  for (auto& l : label) l = uniform(rng, 0, levels - 1);
  for (auto [u, v] : shape.edges()) {
    bool blue = false;
    switch (style) {
      case 0:
      case 1: blue = unit(rng) < bias; break;
      case 2: blue = std::abs(label[u] - label[v]) <= 1; break;
      default: blue = (label[u] % 2) == (label[v] % 2); break;
    }
    if (unit(rng) < noise) blue = !blue;
    chi.set_color(u, v, blue ? Color::blue : Color::red);
  }
  return uniform(rng, 0, 1) ? chi.swapped() : chi;
}

/// Hill-climbs toward colorings that dodge the pipeline's early exits: both
/// colors of the grouped host far from diameter 3, and no vertex seeing a
/// whole group in one color.
inline EdgeColoring adversarial_coloring(Rng& rng, const MultipartiteShape& shape, int steps) {
  const std::vector<int> part_group = group_parts(shape);
  std::array<VertexMask, 3> groups{};
  for (int p = 0; p < shape.part_count(); ++p) groups[part_group[p]] |= shape.part_mask(p);
  auto score = [&](const EdgeColoring& chi) {
    ColorGraph host = chi.graph();
    for (VertexMask m : groups) host.clear_inside(m);
    int value = 0;
    for (Color c : kColors) value += std::min(induced_diameter(host, c, host.all()), 4);
    for (Vertex u = 0; u < shape.vertex_count(); ++u)
      for (VertexMask m : groups)
        for (Color c : kColors)
          if (!contains(m, u) && (host.neighbors(c, u) & m) == m) value -= 2;
    return value;
  };
  EdgeColoring chi = random_coloring(rng, shape);
  int best = score(chi);
  for (int i = 0; i < steps; ++i) {
    const auto [u, v] = shape.edge(uniform(rng, 0, shape.edge_count() - 1));
    EdgeColoring next = chi;
    next.set_color(u, v, other(chi.color(u, v)));
    const int s = score(next);
    if (s >= best) {
      chi = std::move(next);
      best = s;
    }
  }
  return chi;
}

inline Hypergraph random_hypergraph(Rng& rng) {
  const int n = uniform(rng, 1, 6);
  std::vector<std::vector<int>> classes(2);
  for (int v = 0; v < n; ++v) classes[uniform(rng, 0, 1)].push_back(v);
  const int m = uniform(rng, 1, 6);
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e;
    for (const auto& c : classes)
      if (!c.empty() && uniform(rng, 0, 3) > 0) e.push_back(c[uniform(rng, 0, int(c.size()) - 1)]);
    if (e.empty()) {
      const auto& c = classes[0].empty() ? classes[1] : classes[0];
      e.push_back(c[uniform(rng, 0, int(c.size()) - 1)]);
    }
    edges.push_back(e);
  }
  return make_hypergraph(classes, edges);
}

class FuzzRun {
 public:
  FuzzRun(std::string mode, std::uint64_t seed, std::string dir)
      : dir_(std::move(dir)) {
    summary_.mode = std::move(mode);
    summary_.seed = seed;
  }

  void violation(int iteration, const Json& subject, const std::string& what) {
    ++summary_.violations;
    ++summary_.counts["violation:" + what];
    if (dir_.empty()) return;
    std::filesystem::create_directories(dir_);
    const std::string path = dir_ + "/fuzz-" + summary_.mode + "-" +
                             std::to_string(summary_.seed) + "-" + std::to_string(iteration) +
                             ".json";
    write_json_file(path, Json{{"mode", summary_.mode},
                               {"seed", summary_.seed},
                               {"iteration", iteration},
                               {"what", what},
                               {"subject", subject}});
    summary_.reproducers.push_back(path);
  }

  void count(const std::string& key) { ++summary_.counts[key]; }
  FuzzSummary finish(int iterations) {
    summary_.iterations = iterations;
    return summary_;
  }

 private:
  std::string dir_;
  FuzzSummary summary_;
};

inline void fuzz_construct(FuzzRun& run, Rng& rng, int i) {
  // Every other input is steered past the early exits of the case analysis.
  const bool steer = i % 2 == 1;
  const MultipartiteShape shape = random_shape(rng, 3, 6, steer ? 16 : 30, steer ? 2 : 1);
  const EdgeColoring chi = steer ? adversarial_coloring(rng, shape, 300) : random_coloring(rng, shape);
  try {
    const Construction c = multipartite_cover(chi);
    for (const auto& step : c.trace.cases) run.count("case:" + step.label);
    if (verify_cover(chi, c.cover, 3, 2)) run.violation(i, coloring_to_json(chi), "unverified_cover");
  } catch (const ConstructionExhausted& e) {
    run.violation(i, Json{{"coloring", coloring_to_json(chi)}, {"attempts", trace_to_json(e.attempts())}},
                  "construction_exhausted");
  } catch (const std::logic_error& e) {
    run.violation(i, coloring_to_json(chi), "internal_error");
  }
}

inline void fuzz_tc2(FuzzRun& run, Rng& rng, int i) {
  const MultipartiteShape shape = random_shape(rng, 2, 6, 30);
  const EdgeColoring chi = random_coloring(rng, shape);
  try {
    const Cover cover = tc2_cover(chi);
    if (verify_cover(chi, cover, kInfinity, 2)) run.violation(i, coloring_to_json(chi), "unverified_cover");
    run.count("subgraphs:" + std::to_string(cover.size()));
  } catch (const std::logic_error&) {
    run.violation(i, coloring_to_json(chi), "no_cover");
  }
}

/// Clone-rule soundness on G_5: every emitted certificate re-verifies, and
/// whenever the blow-up argument's hypotheses hold its candidates deliver.
inline void fuzz_prune(FuzzRun& run, Rng& rng, int i) {
  const EdgeColoring chi = random_coloring(rng, gk_shape(5));
  const ColorGraph& g = chi.graph();
  if (const auto cert = prune_with_constructions(chi, 2)) {
    run.count("certified:" + std::string(to_string(cert->rule)));
    if (verify_cover(g, cert->cover, 2, 2)) run.violation(i, coloring_to_json(chi), "unverified_certificate");
  } else {
    run.count("not_certified");
  }

  const auto& shape = chi.shape();
  for (Vertex x = 0; x < shape.vertex_count(); ++x) {
    const CloneProfile profile = clone_profile(chi, x);
    bool pairs = true;
    for (Color a : kColors)
      for (Color b : kColors) pairs = pairs && profile.at(a, b);
    if (!pairs) continue;
    for (Color c : kColors) {
      const BiLayerPartition bl = bilayer_partition(chi, x, c);
      if (bl.at(2, 3) | bl.at(3, 2) | bl.at(3, 3)) continue;
      for (Vertex y : to_vertices(bl.at(1, 3))) {
        if (contains(bl.at(2, 1), clone_of(shape, y))) continue;
        run.count("blowup_hypotheses_met");
        bool ok = false;
        for (const Cover& cover : clone_blowup_candidates(chi, bl, y))
          ok = ok || is_valid_cover(g, cover, 2, 2);
        if (!ok) run.violation(i, coloring_to_json(chi), "blowup_rule_failed");
      }
    }
  }
}

inline void fuzz_equivalence(FuzzRun& run, Rng& rng, int i) {
  if (i % 2 == 0) {
    const Hypergraph h = random_hypergraph(rng);
    try {
      verify_equivalence_chain(h);
      run.count("hypergraphs");
    } catch (const InequalityViolated&) {
      run.violation(i, hypergraph_to_json(h), "inequality_violated");
    }
    // Non-adjacent vertices of the intersection graph are disjoint edges.
    const GraphStats gs = exact_stats(hypergraph_to_graph(h));
    if (!is_matching(h, to_vertices(gs.alpha_witness)))
      run.violation(i, hypergraph_to_json(h), "independent_set_not_matching");
    return;
  }
  const MultipartiteShape shape = random_shape(rng, 2, 4, 8);
  const EdgeColoring chi = random_coloring(rng, shape);
  try {
    verify_equivalence_chain(chi);
    run.count("colorings");
  } catch (const InequalityViolated&) {
    run.violation(i, coloring_to_json(chi), "inequality_violated");
  }
  // One vertex behind each edge of a matching gives an independent set.
  const ComponentHypergraph ch = graph_to_hypergraph(chi);
  const HypergraphStats hs = exact_stats(ch.hypergraph, {2 * kExhaustiveMaxVertices, 24});
  VertexMask picked = 0;
  for (int e : hs.nu_witness)
    for (Vertex v = 0; v < chi.vertex_count(); ++v)
      if (ch.edge_of[v] == e) {
        picked |= bit(v);
        break;
      }
  if (!is_independent(chi.graph(), picked) || count(picked) != hs.nu)
    run.violation(i, coloring_to_json(chi), "matching_not_independent");
}

}  // namespace detail

inline FuzzSummary run_fuzz(const std::string& mode, std::uint64_t seed, int iterations,
                            const std::string& reproducer_dir = {}) {
  using Step = void (*)(detail::FuzzRun&, detail::Rng&, int);
  Step step = nullptr;
  if (mode == "construct") step = detail::fuzz_construct;
  else if (mode == "tc2") step = detail::fuzz_tc2;
  else if (mode == "prune") step = detail::fuzz_prune;
  else if (mode == "equivalence") step = detail::fuzz_equivalence;
  else throw InvalidParameter("fuzz mode must be construct, tc2, prune or equivalence");
  if (iterations < 0) throw InvalidParameter("iteration count must be nonnegative");

  detail::FuzzRun run(mode, seed, reproducer_dir);
  detail::Rng rng(seed);
  for (int i = 0; i < iterations; ++i) step(run, rng, i);
  return run.finish(iterations);
}

inline CommandResult cmd_fuzz(const RunConfig& cfg) {
  const FuzzSummary s = run_fuzz(cfg.mode, cfg.seed, cfg.iterations, cfg.reproducer_dir);
  Json out = fuzz_summary_to_json(s);
  out["config"] = run_config_to_json(cfg);
  return {s.violations ? kExitRefuted : kExitOk, detail::dump(out), {}};
}

/// Runs cfg.command, mapping library errors onto the exit-code contract.
inline CommandResult dispatch(const RunConfig& cfg) {
  try {
    if (cfg.command == "gen") return cmd_gen(cfg);
    if (cfg.command == "cover") return cmd_cover(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "exists") return cmd_exists(cfg);
    if (cfg.command == "compute-d") return cmd_compute_d(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "gk") return cmd_gk(cfg);
    if (cfg.command == "ryser") return cmd_ryser(cfg);
    if (cfg.command == "fuzz") return cmd_fuzz(cfg);
    return {kExitConfig, {}, "unknown command '" + cfg.command + "'\n"};
  } catch (const CapExceeded& e) {
    std::ostringstream note;
    note << "cap exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return {kExitConfig, {}, note.str()};
  } catch (const Error& e) {
    return {kExitConfig, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace mpcover

#endif  // MPCOVER_HARNESS_HPP
