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

#ifndef MPCOVER_SEARCH_HPP
#define MPCOVER_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mpcover/decide.hpp"
#include "mpcover/io.hpp"
#include "mpcover/symmetry.hpp"

namespace mpcover {

inline constexpr int kDefaultEdgeCap = 28;
inline constexpr int kCheckpointVersion = 1;
inline constexpr std::uint64_t kMaxRanges = 1024;

/// Edge cap for enumeration, overridable through MPCOVER_CAP_EDGES.
inline int edge_cap_from_env(int fallback = kDefaultEdgeCap) {
  const char* raw = std::getenv("MPCOVER_CAP_EDGES");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > kMaxKeyBits)
    throw InvalidParameter("MPCOVER_CAP_EDGES must be an integer in [0, 62]");
  return static_cast<int>(v);
}

struct SearchConfig {
  int t = 2;
  int d_max = 4;
  bool symmetry = true;
  PruneConfig prune;
  int max_edges = kDefaultEdgeCap;
  /// Record clone-property checks for classes that reach the exhaustive step.
  bool clone_property_checks = false;
};

struct RunOptions {
  int threads = 1;
  /// Empty disables checkpointing.
  std::string checkpoint_path;
  bool resume = true;
  /// Stop after examining this many keys (0 = no limit); the run is then
  /// reported incomplete and can be resumed from its checkpoint.
  std::uint64_t stop_after = 0;
};

using Counts = std::map<std::string, std::uint64_t>;

struct SearchResult {
  MultipartiteShape shape{std::vector<int>{1}};
  int t = 2;
  int d_max = 4;
  /// Max over classes of the least feasible d; d_max + 1 if some class has
  /// no cover within d_max.
  int D = 0;
  bool complete = true;
  std::optional<EdgeColoring> witness;
  std::uint64_t witness_key = 0;
  std::uint64_t classes = 0;
  Counts counts;
  double seconds = 0;

  bool exceeded() const { return D > d_max; }
};

namespace detail {

struct RangeState {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t pos = 0;
  int best_d = -1;
  std::uint64_t witness = 0;
  std::uint64_t classes = 0;
  Counts counts;

  bool done() const { return pos >= hi; }
};

inline std::vector<RangeState> split_ranges(std::uint64_t space) {
  const std::uint64_t count = std::min(space, kMaxRanges);
  std::vector<RangeState> out(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out[i].lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(space) * i) / count);
    out[i].hi =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(space) * (i + 1)) / count);
    out[i].pos = out[i].lo;
  }
  return out;
}

inline Json prune_to_json(const PruneConfig& p) {
  return Json{{"stars", p.stars},
              {"clone_rules", p.clone_rules},
              {"star_doublestar", p.star_doublestar}};
}

inline Json counts_to_json(const Counts& counts) {
  Json j = Json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

inline Counts counts_from_json(const Json& j) {
  Counts out;
  for (const auto& [k, v] : j.items()) out[k] = v.get<std::uint64_t>();
  return out;
}

inline std::string key_to_hex(std::uint64_t key) {
  std::ostringstream out;
  out << std::hex << key;
  return out.str();
}

inline std::uint64_t key_from_hex(const std::string& s) {
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(s, &used, 16);
  if (used != s.size()) throw ParseError("bad key in checkpoint");
  return v;
}

/// Folds range b into a: larger d wins, ties keep the earlier witness.
inline void merge_into(RangeState& a, const RangeState& b) {
  if (b.best_d > a.best_d) {
    a.best_d = b.best_d;
    a.witness = b.witness;
  }
  a.classes += b.classes;
  for (const auto& [k, v] : b.counts) a.counts[k] += v;
}

struct Aggregate {
  int best_d = -1;
  std::uint64_t witness = 0;
  std::uint64_t classes = 0;
  Counts counts;
};

inline Aggregate aggregate(const std::vector<RangeState>& ranges) {
  RangeState total;
  for (const auto& r : ranges) merge_into(total, r);
  return {total.best_d, total.witness, total.classes, total.counts};
}

class Evaluator {
 public:
  Evaluator(const SymmetrySpace& space, const SearchConfig& cfg) : space_(space), cfg_(cfg) {}

  void evaluate(std::uint64_t key, RangeState& st) const {
    const EdgeColoring chi = space_.coloring_of(key);
    int min_d = cfg_.d_max + 1;
    Rule rule = Rule::none;
    for (int d = 0; d <= cfg_.d_max; ++d) {
      const ExistenceResult r = cover_exists(chi, cfg_.t, d, cfg_.prune);
      if (cfg_.clone_property_checks && cfg_.t == 2 && d == 2 &&
          (r.rule == Rule::exhaustive || r.rule == Rule::none))
        record_survivor(chi, st);
      if (r.exists) {
        min_d = d;
        rule = r.rule;
        break;
      }
    }
    ++st.classes;
    ++st.counts["rule:" + std::string(to_string(rule))];
    ++st.counts["min_d:" + std::to_string(min_d)];
    if (cfg_.t == 2 && space_.shape().part_count() >= 3 && min_d > 3)
      ++st.counts["diameter3_bound_violations"];
    if (min_d > st.best_d) {
      st.best_d = min_d;
      st.witness = key;
    }
  }

 private:
  static void record_survivor(const EdgeColoring& chi, RangeState& st) {
    ++st.counts["survivors"];
    const CloneProperties p = check_clone_properties(chi);
    if (!p.all_pairs_realized) ++st.counts["property_violations:all_pairs_realized"];
    if (!p.no_far_layers) ++st.counts["property_violations:no_far_layers"];
    if (!p.clones_placed) ++st.counts["property_violations:clones_placed"];
  }

  const SymmetrySpace& space_;
  const SearchConfig& cfg_;
};

inline Json checkpoint_to_json(const MultipartiteShape& shape, const SearchConfig& cfg,
                               const std::vector<RangeState>& ranges) {
  Json cursor = Json::array();
  Json states = Json::array();
  for (const auto& r : ranges) {
    cursor.push_back(Json::array({r.lo, r.hi, r.pos}));
    states.push_back(Json{{"best_d", r.best_d},
                          {"witness", key_to_hex(r.witness)},
                          {"classes", r.classes},
                          {"counts", counts_to_json(r.counts)}});
  }
  const Aggregate total = aggregate(ranges);
  Json best{{"d", total.best_d}, {"witness_bits", nullptr}};
  if (total.best_d >= 0)
    best["witness_bits"] = bits_to_hex(SymmetrySpace(shape).coloring_of(total.witness).bits());
  return Json{{"version", kCheckpointVersion},
              {"shape", shape_to_json(shape)},
              {"t", cfg.t},
              {"d_max", cfg.d_max},
              {"symmetry", cfg.symmetry},
              {"prune", prune_to_json(cfg.prune)},
              {"clone_property_checks", cfg.clone_property_checks},
              {"cursor_ranges", std::move(cursor)},
              {"range_state", std::move(states)},
              {"best", std::move(best)},
              {"counts", counts_to_json(total.counts)}};
}

inline std::vector<RangeState> ranges_from_checkpoint(const Json& j,
                                                      const MultipartiteShape& shape,
                                                      const SearchConfig& cfg,
                                                      std::uint64_t space) {
  try {
    if (j.at("version").get<int>() != kCheckpointVersion)
      throw ParseError("checkpoint version mismatch");
    if (!(shape_from_json(j.at("shape")) == shape) || j.at("t").get<int>() != cfg.t ||
        j.at("d_max").get<int>() != cfg.d_max || j.at("symmetry").get<bool>() != cfg.symmetry ||
        j.at("prune") != prune_to_json(cfg.prune) ||
        j.at("clone_property_checks").get<bool>() != cfg.clone_property_checks)
      throw InvalidParameter("checkpoint was written by a different configuration");
    const auto& cursor = j.at("cursor_ranges");
    const auto& states = j.at("range_state");
    std::vector<RangeState> fresh = split_ranges(space);
    if (cursor.size() != fresh.size() || states.size() != fresh.size())
      throw ParseError("checkpoint range count mismatch");
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      RangeState& r = fresh[i];
      if (cursor[i].at(0).get<std::uint64_t>() != r.lo ||
          cursor[i].at(1).get<std::uint64_t>() != r.hi)
        throw ParseError("checkpoint range bounds mismatch");
      r.pos = cursor[i].at(2).get<std::uint64_t>();
      if (r.pos < r.lo || r.pos > r.hi) throw ParseError("checkpoint cursor out of range");
      r.best_d = states[i].at("best_d").get<int>();
      r.witness = key_from_hex(states[i].at("witness").get<std::string>());
      r.classes = states[i].at("classes").get<std::uint64_t>();
      r.counts = counts_from_json(states[i].at("counts"));
    }
    return fresh;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed checkpoint: ") + e.what());
  }
}

}  // namespace detail

/// Exact D over every coloring of `shape`: the largest, over colorings, of
/// the least d admitting a cover by cfg.t subgraphs of diameter <= d.
///
/// With symmetry on, only lex-min orbit representatives are evaluated. The
/// key space is cut into a fixed set of ranges independent of the thread
/// count; per-range results merge by max d, then earliest witness, so the
/// result does not depend on scheduling. Checkpoints are written after every
/// finished range and on a budget stop.
inline SearchResult compute_D(const MultipartiteShape& shape, const SearchConfig& cfg = {},
                              const RunOptions& opt = {}) {
  if (cfg.t < 1 || cfg.t > 2) throw Unsupported("only t = 1 or t = 2 is supported");
  if (cfg.d_max < 0) throw InvalidParameter("d_max must be nonnegative");
  const int edges = shape.edge_count();
  if (edges > std::min(cfg.max_edges, kMaxKeyBits)) {
    const double estimate = std::ldexp(1.0, edges) / (cfg.symmetry ? symmetry_group_order(shape) : 1.0);
    throw CapExceeded("shape has " + std::to_string(edges) + " edges, cap is " +
                          std::to_string(cfg.max_edges) + "; about " +
                          std::to_string(static_cast<long long>(estimate)) +
                          " colorings to examine",
                      estimate);
  }
  if (shape.vertex_count() > kExhaustiveMaxVertices)
    throw CapExceeded("enumeration needs the exhaustive decision, limited to 22 vertices",
                      std::ldexp(1.0, edges));

  const auto start = std::chrono::steady_clock::now();
  const SymmetrySpace space(shape);
  std::vector<detail::RangeState> ranges;
  if (!opt.checkpoint_path.empty() && opt.resume &&
      std::filesystem::exists(opt.checkpoint_path))
    ranges = detail::ranges_from_checkpoint(read_json_file(opt.checkpoint_path), shape, cfg,
                                            space.key_space());
  else
    ranges = detail::split_ranges(space.key_space());

  std::mutex mu;
  auto last_save = start;
  auto save = [&] {
    last_save = std::chrono::steady_clock::now();
    if (!opt.checkpoint_path.empty())
      write_json_file(opt.checkpoint_path, detail::checkpoint_to_json(shape, cfg, ranges));
  };

  std::atomic<std::size_t> next_range{0};
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> stop{false};
  const detail::Evaluator evaluator(space, cfg);

  auto worker = [&] {
    OrbitChecker checker(space);
    for (;;) {
      if (stop) return;
      const std::size_t i = next_range++;
      if (i >= ranges.size()) return;
      detail::RangeState st;
      {
        std::lock_guard lock(mu);
        st = ranges[i];
      }
      if (st.done()) continue;
      while (st.pos < st.hi) {
        if (opt.stop_after && examined++ >= opt.stop_after) {
          stop = true;
          break;
        }
        const std::uint64_t key = st.pos;
        if (cfg.symmetry) {
          const auto verdict = checker.check(key);
          st.pos = std::min(verdict.next, st.hi);
          if (!verdict.canonical) continue;
        } else {
          st.pos = key + 1;
        }
        evaluator.evaluate(key, st);
      }
      std::lock_guard lock(mu);
      ranges[i] = std::move(st);
      if (std::chrono::steady_clock::now() - last_save > std::chrono::seconds(1)) save();
    }
  };

  const int threads = std::max(1, opt.threads);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  save();

  SearchResult result;
  result.shape = shape;
  result.t = cfg.t;
  result.d_max = cfg.d_max;
  result.complete = std::all_of(ranges.begin(), ranges.end(),
                                [](const detail::RangeState& r) { return r.done(); });
  const detail::Aggregate total = detail::aggregate(ranges);
  result.D = std::max(total.best_d, 0);
  result.classes = total.classes;
  result.counts = total.counts;
  if (total.best_d >= 0) {
    result.witness_key = total.witness;
    result.witness = space.coloring_of(total.witness);
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

/// compute_D on G_k = K_{2,...,2} with clone rules on and clone-property
/// checks recorded for every class that survives the shortcuts.
inline SearchResult gk_survey(int k, SearchConfig cfg, const RunOptions& opt) {
  if (k < 3) throw InvalidParameter("gk survey needs k >= 3");
  if (opt.checkpoint_path.empty()) throw InvalidParameter("gk survey requires a checkpoint path");
  cfg.prune.clone_rules = true;
  cfg.clone_property_checks = true;
  return compute_D(gk_shape(k), cfg, opt);
}

inline std::string format_rule_counts(const Counts& counts) {
  std::string out;
  for (const auto& [k, v] : counts) {
    if (k.rfind("rule:", 0) != 0) continue;
    if (!out.empty()) out += ';';
    out += k.substr(5) + '=' + std::to_string(v);
  }
  return out;
}

inline std::string tsv_header(bool timing) {
  return std::string("shape\tt\tD\tclasses_enumerated\tpruned_by_rule") +
         (timing ? "\tseconds" : "");
}

/// One report row. Wall-clock time is left out unless asked for, so equal
/// configurations give byte-identical reports.
inline std::string format_tsv(const SearchResult& r, bool timing = false) {
  std::ostringstream out;
  out << r.shape.to_string() << '\t' << r.t << '\t' << r.D << '\t' << r.classes << '\t'
      << format_rule_counts(r.counts);
  if (timing) out << '\t' << r.seconds;
  return out.str();
}

inline Json search_result_to_json(const SearchResult& r, bool timing = false) {
  Json j{{"shape", shape_to_json(r.shape)},
         {"t", r.t},
         {"d_max", r.d_max},
         {"D", r.D},
         {"exceeded", r.exceeded()},
         {"complete", r.complete},
         {"classes_enumerated", r.classes},
         {"counts", detail::counts_to_json(r.counts)},
         {"witness", nullptr}};
  if (r.witness) j["witness"] = coloring_to_json(*r.witness, true);
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace mpcover

#endif  // MPCOVER_SEARCH_HPP
