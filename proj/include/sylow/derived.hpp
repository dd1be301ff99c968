#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sylow/portrait.hpp"

namespace sylow {

/// Vector over F2 of length k; coordinate l is the parity attached to level l.
class ParityVector {
 public:
  ParityVector() = default;
  explicit ParityVector(std::vector<std::uint8_t> bits);

  static ParityVector zero(std::size_t length) {
    return ParityVector(std::vector<std::uint8_t>(length, 0));
  }
  static ParityVector unit(std::size_t length, std::size_t coordinate);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  bool is_zero() const noexcept;

  /// Coordinates packed little-endian (coordinate 0 is bit 0).
  std::uint64_t to_mask() const;

  friend ParityVector operator^(const ParityVector& a, const ParityVector& b);
  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Bit string of length k, coordinate 0 first.
std::string format_parity(const ParityVector& v);

/// g in [B_k, B_k]: every level index is even.
bool in_derived_B(const Portrait& g);

/// g in [G_k, G_k]: levels 0..k-2 have even index and each half of the last
/// level has an even number of labels. Requires depth >= 2.
bool in_derived_G(const Portrait& g);

/// Phi(G_k) coincides with [G_k, G_k]; throws if g is not in G_k.
bool in_frattini_G(const Portrait& g);

/// Level parities (level_index mod 2), the abelianization B_k -> C2^k.
ParityVector abelianization_B(const Portrait& g);

/// Abelianization G_k -> C2^k: level parities for l <= k-2, then the parity of
/// the first half of the last level. Throws if g is not in G_k.
ParityVector abelianization_G(const Portrait& g);

struct SquaresReport {
  std::size_t checked = 0;
  std::size_t violations_B = 0;
  std::size_t violations_G = 0;
  bool exhaustive = false;

  bool passed() const noexcept { return violations_B == 0 && violations_G == 0; }
};

/// Checks that squares land in the derived subgroups: g^2 in B'_k for g in
/// B_k, and g^2 in G'_k for g in G_k. Exhaustive for k <= 3, otherwise
/// `samples` uniformly random portraits drawn with `seed`.
SquaresReport squares_in_derived_check(std::size_t depth, std::size_t samples = 10000,
                                       std::uint64_t seed = 1);

}  // namespace sylow
