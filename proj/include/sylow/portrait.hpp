#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/perm.hpp"

namespace sylow {

/// A vertex of the rooted binary tree, addressed by level (root = 0) and
/// 1-based position counted left to right within its level.
struct Vertex {
  std::size_t level = 0;
  std::size_t position = 1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Cycle lengths mapped to their multiplicities.
using CycleType = std::map<std::size_t, std::size_t>;

/// Automorphism of the depth-k binary tree stored as its portrait: one bit per
/// internal vertex, bit 1 meaning the two subtrees below that vertex are
/// swapped.
///
/// Bits are kept dense and level-contiguous (heap order): level l occupies
/// indices [2^l - 1, 2^(l+1) - 1). Children of the vertex at 0-based position
/// j on level l are positions 2j (left, path bit 0) and 2j + 1 (right).
///
/// Portraits are immutable values; all operations below are pure.
class Portrait {
 public:
  /// Identity automorphism of depth k. Throws std::invalid_argument if k == 0.
  static Portrait identity(std::size_t depth);

  /// Builds a portrait from per-level bit vectors; level l must have 2^l bits
  /// each equal to 0 or 1.
  static Portrait from_levels(const std::vector<std::vector<std::uint8_t>>& levels);

  /// Builds a portrait from a heap-ordered bit vector of length 2^k - 1.
  static Portrait from_bits(std::size_t depth, std::vector<std::uint8_t> bits);

  std::size_t depth() const noexcept { return depth_; }

  /// Number of internal vertices, 2^k - 1.
  std::size_t size() const noexcept { return bits_.size(); }

  /// Label at 0-based position j on level l (unchecked beyond assertions).
  std::uint8_t label(std::size_t level, std::size_t index) const noexcept {
    return bits_[(std::size_t{1} << level) - 1 + index];
  }

  /// Label at a vertex; throws std::out_of_range for a vertex outside the tree.
  std::uint8_t label(const Vertex& v) const;

  /// Bits of one level, 2^l entries.
  std::span<const std::uint8_t> level_bits(std::size_t level) const;

  /// All labels in heap order.
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Portrait&, const Portrait&) = default;
  friend auto operator<=>(const Portrait&, const Portrait&) = default;

 private:
  Portrait(std::size_t depth, std::vector<std::uint8_t> bits)
      : depth_(depth), bits_(std::move(bits)) {}

  std::size_t depth_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline Portrait identity(std::size_t depth) { return Portrait::identity(depth); }

/// Product under left action: (g * h)(w) = g(h(w)).
/// Label rule: s_v(g * h) = s_v(h) xor s_{h(v)}(g).
Portrait compose(const Portrait& g, const Portrait& h);
Portrait inverse(const Portrait& g);

/// Commutator g^-1 h^-1 g h.
Portrait commutator(const Portrait& g, const Portrait& h);

/// Image of a vertex (a word of length v.level) under g.
Vertex vertex_image(const Portrait& g, const Vertex& v);

/// Images of every vertex on levels 0..k in heap order (level k = leaves),
/// as 0-based positions within their level.
std::vector<std::size_t> vertex_images(const Portrait& g);

/// Action on the 2^k leaves. Leaf with path b_1..b_k is point 1 + sum b_i 2^(k-i).
Permutation leaf_permutation(const Portrait& g);

/// Recovers the portrait of a tree automorphism from its leaf action on 2^k
/// points. Throws std::invalid_argument if p does not preserve the tree.
Portrait portrait_from_leaf_permutation(const Permutation& p);

/// Number of active labels on a level.
std::size_t level_index(const Portrait& g, std::size_t level);

/// Restriction of g to the subtree rooted at v, as a portrait of depth k - v.level.
Portrait section(const Portrait& g, const Vertex& v);

/// Largest tree distance between two active vertices; 0 with fewer than two.
std::size_t distance(const Portrait& g);

/// Cycle type of the leaf action.
CycleType leaf_cycle_type(const Portrait& g);

/// Text format: levels root-down separated by '/', e.g. "1/00/1001".
Portrait parse_portrait(std::string_view text);
std::string format_portrait(const Portrait& g);

/// Uniformly random portrait.
Portrait random_portrait(std::size_t depth, std::mt19937_64& rng);

/// Every portrait of the given depth, in increasing heap-bit order. Depth is
/// limited to 4 (2^15 elements).
std::vector<Portrait> all_portraits(std::size_t depth);

}  // namespace sylow
