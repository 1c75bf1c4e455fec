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

#ifndef MPCOVER_SYMMETRY_HPP
#define MPCOVER_SYMMETRY_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpcover/graph_core.hpp"

namespace mpcover {

inline constexpr int kMaxKeyBits = 62;

/// |Aut| of the colored-shape action: within-part permutations, swaps of
/// equal-size parts, and the global color swap.
inline double symmetry_group_order(const MultipartiteShape& shape) {
  double order = 2.0;
  for (int s : shape.part_sizes())
    for (int i = 2; i <= s; ++i) order *= i;
  for (int p = 0; p < shape.part_count(); ++p) {
    int equal_before = 0;
    for (int q = 0; q < p; ++q)
      if (shape.part_size(q) == shape.part_size(p)) ++equal_before;
    order *= equal_before + 1;
  }
  return order;
}

/// Packs colorings of a shape into 64-bit keys for enumeration.
///
/// Vertices are visited in a search order that interleaves the parts
/// round-robin (first vertex of every part, then every second vertex, ...).
/// Key positions list the edges by their later endpoint in search order, then
/// by the earlier one, so the edges among the first m search vertices form a
/// key prefix. Position 0 is the most significant bit and a set bit means
/// blue. Comparing keys as integers is comparing bitstrings
/// lexicographically.
class SymmetrySpace {
 public:
  explicit SymmetrySpace(MultipartiteShape shape) : shape_(std::move(shape)) {
    const int n = shape_.vertex_count();
    const int k = shape_.part_count();
    if (shape_.edge_count() > kMaxKeyBits)
      throw CapExceeded("coloring keys hold at most 62 edges", shape_.edge_count());
    int max_size = 0;
    for (int p = 0; p < k; ++p) max_size = std::max(max_size, shape_.part_size(p));
    for (int r = 0; r < max_size; ++r)
      for (int p = 0; p < k; ++p)
        if (r < shape_.part_size(p)) order_.push_back(shape_.part_begin(p) + r);

    index_of_.assign(n, 0);
    part_.assign(n, 0);
    members_.assign(k, 0);
    for (int m = 0; m < n; ++m) {
      index_of_[order_[m]] = m;
      part_[m] = shape_.part_of(order_[m]);
      members_[part_[m]] |= bit(m);
    }
    block_.resize(n);
    block_end_.resize(n);
    for (int m = 0; m < n; ++m) {
      for (int p = 0; p < m; ++p)
        if (part_[p] != part_[m]) {
          block_[m].push_back(p);
          positions_.emplace_back(p, m);
        }
      block_end_[m] = static_cast<int>(positions_.size());
    }
    same_size_.resize(k);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        if (shape_.part_size(p) == shape_.part_size(q)) same_size_[p].push_back(q);
  }

  const MultipartiteShape& shape() const { return shape_; }
  int vertex_count() const { return shape_.vertex_count(); }
  int key_bits() const { return static_cast<int>(positions_.size()); }
  std::uint64_t key_space() const { return std::uint64_t{1} << key_bits(); }

  double group_order() const { return symmetry_group_order(shape_); }

  std::uint64_t key_of(const EdgeColoring& chi) const {
    if (!(chi.shape() == shape_)) throw InvalidParameter("coloring has a different shape");
    std::uint64_t key = 0;
    for (auto [p, m] : positions_) {
      key <<= 1;
      if (chi.color(order_[p], order_[m]) == Color::blue) key |= 1;
    }
    return key;
  }

  EdgeColoring coloring_of(std::uint64_t key) const {
    EdgeColoring chi(shape_, Color::red);
    const int bits = key_bits();
    for (int i = 0; i < bits; ++i)
      if ((key >> (bits - 1 - i)) & 1) {
        auto [p, m] = positions_[i];
        chi.set_color(order_[p], order_[m], Color::blue);
      }
    return chi;
  }

  /// Blue adjacency rows indexed by search position.
  void blue_rows(std::uint64_t key, std::array<VertexMask, kMaxVertices>& rows) const {
    const int n = vertex_count();
    for (int m = 0; m < n; ++m) rows[m] = 0;
    const int bits = key_bits();
    while (key) {
      const int b = std::countr_zero(key);
      key &= key - 1;
      auto [p, m] = positions_[bits - 1 - b];
      rows[p] |= bit(m);
      rows[m] |= bit(p);
    }
  }

  const std::vector<Vertex>& order() const { return order_; }
  int part_at(int m) const { return part_[m]; }
  VertexMask members(int part) const { return members_[part]; }
  const std::vector<int>& block(int m) const { return block_[m]; }
  int block_end(int m) const { return block_end_[m]; }
  const std::vector<int>& same_size_parts(int part) const { return same_size_[part]; }
  std::pair<int, int> position(int i) const { return positions_[i]; }

 private:
  MultipartiteShape shape_;
  std::vector<Vertex> order_;
  std::vector<int> index_of_;
  std::vector<int> part_;
  std::vector<VertexMask> members_;
  std::vector<std::vector<int>> block_;
  std::vector<int> block_end_;
  std::vector<std::pair<int, int>> positions_;
  std::vector<std::vector<int>> same_size_;
};

/// Decides whether a key is the lexicographic minimum of its orbit by
/// backtracking over symmetries position by position, pruning every branch
/// whose partial image already exceeds the key and never branching between
/// two twin vertices (same part, same colors to everything else).
class OrbitChecker {
 public:
  explicit OrbitChecker(const SymmetrySpace& space) : space_(space) {}

  struct Verdict {
    bool canonical = true;
    /// Next key worth examining. When a smaller image only depends on a key
    /// prefix, every key sharing that prefix is skipped.
    std::uint64_t next = 0;
  };

  Verdict check(std::uint64_t key) {
    if (!find_smaller(key)) return {true, key + 1};
    const int bits = space_.key_bits();
    if (used_ == first_n(less_level_ + 1)) {
      const int tail = bits - space_.block_end(less_level_);
      return {false, ((key >> tail) + 1) << tail};
    }
    return {false, key + 1};
  }

  /// Some strictly smaller key in the orbit of `key`, if one exists.
  std::optional<std::uint64_t> smaller_image(std::uint64_t key) {
    if (!find_smaller(key)) return std::nullopt;
    const int n = space_.vertex_count();
    for (int m = less_level_ + 1; m < n; ++m) {
      const int target = space_.part_at(m);
      if (source_part_[target] < 0) {
        for (int q : space_.same_size_parts(target))
          if (!part_used(q)) {
            assign_part(target, q);
            break;
          }
      }
      const VertexMask avail = space_.members(source_part_[target]) & ~used_;
      tau_[m] = lowest(avail);
      used_ |= bit(tau_[m]);
    }
    std::uint64_t image = 0;
    for (int i = 0; i < space_.key_bits(); ++i) {
      auto [p, m] = space_.position(i);
      image = (image << 1) | (((rows_[tau_[p]] >> tau_[m]) & 1) ^ flip_);
    }
    return image;
  }

  bool is_canonical(std::uint64_t key) { return !find_smaller(key); }

 private:
  bool part_used(int q) const { return (parts_used_ >> q) & 1; }
  void assign_part(int target, int source) {
    source_part_[target] = source;
    parts_used_ |= std::uint64_t{1} << source;
  }
  void release_part(int target) {
    parts_used_ &= ~(std::uint64_t{1} << source_part_[target]);
    source_part_[target] = -1;
  }

  bool find_smaller(std::uint64_t key) {
    space_.blue_rows(key, rows_);
    for (std::uint64_t flip : {1u, 0u}) {
      flip_ = flip;
      used_ = 0;
      parts_used_ = 0;
      source_part_.assign(space_.shape().part_count(), -1);
      if (descend(0)) return true;
    }
    return false;
  }

  bool descend(int m) {
    if (m == space_.vertex_count()) return false;
    const int target = space_.part_at(m);
    if (source_part_[target] >= 0) return try_sources(m, source_part_[target]);
    for (int q : space_.same_size_parts(target)) {
      if (part_used(q)) continue;
      assign_part(target, q);
      if (try_sources(m, q)) return true;
      release_part(target);
    }
    return false;
  }

  bool try_sources(int m, int source_part) {
    std::array<VertexMask, kMaxVertices> tried;
    int tried_count = 0;
    VertexMask avail = space_.members(source_part) & ~used_;
    const auto& block = space_.block(m);
    while (avail) {
      const int src = lowest(avail);
      avail &= avail - 1;
      const VertexMask signature = rows_[src];
      bool twin = false;
      for (int i = 0; i < tried_count && !twin; ++i) twin = tried[i] == signature;
      if (twin) continue;
      tried[tried_count++] = signature;

      int cmp = 0;
      for (int p : block) {
        const std::uint64_t image_bit = ((rows_[tau_[p]] >> src) & 1) ^ flip_;
        const std::uint64_t key_bit = (rows_[p] >> m) & 1;
        if (image_bit != key_bit) {
          cmp = image_bit < key_bit ? -1 : 1;
          break;
        }
      }
      if (cmp > 0) continue;
      tau_[m] = src;
      used_ |= bit(src);
      if (cmp < 0) {
        less_level_ = m;
        return true;
      }
      if (descend(m + 1)) return true;
      used_ &= ~bit(src);
    }
    return false;
  }

  const SymmetrySpace& space_;
  std::array<VertexMask, kMaxVertices> rows_{};
  std::array<int, kMaxVertices> tau_{};
  std::vector<int> source_part_;
  VertexMask used_ = 0;
  std::uint64_t parts_used_ = 0;
  std::uint64_t flip_ = 0;
  int less_level_ = 0;
};

/// Orbit-invariant key: the lexicographically smallest key over the orbit
/// of `chi` under within-part permutations, equal-size part swaps and the
/// color swap.
struct CanonicalKey {
  std::uint64_t key = 0;
  int bits = 0;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_key(const SymmetrySpace& space, const EdgeColoring& chi) {
  OrbitChecker checker(space);
  std::uint64_t key = space.key_of(chi);
  while (auto smaller = checker.smaller_image(key)) key = *smaller;
  return {key, space.key_bits()};
}

inline CanonicalKey canonical_key(const EdgeColoring& chi) {
  return canonical_key(SymmetrySpace(chi.shape()), chi);
}

}  // namespace mpcover

#endif  // MPCOVER_SYMMETRY_HPP
