#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylow {

/// Permutation of the points 1..n in one-line form.
///
/// Internally images are 0-based; the public interface (cycle text, image())
/// uses 1-based points. Products use left action: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// From 1-based images; throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::span<const std::size_t> images);

  /// From 0-based images (unchecked).
  static Permutation from_zero_based(std::vector<Point> images) {
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }

  /// 1-based image of a 1-based point.
  std::size_t image(std::size_t point) const;

  /// 0-based image of a 0-based point.
  Point operator[](std::size_t point) const noexcept { return images_[point]; }

  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Number of cycles counting fixed points.
  std::size_t cycle_count() const;

  /// Order of the permutation (lcm of cycle lengths). Fits in 64 bits for
  /// the degrees used here.
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

Permutation multiply(const Permutation& g, const Permutation& h);
Permutation invert(const Permutation& g);
int sign(const Permutation& g);

/// g^-1 h^-1 g h
Permutation commutator(const Permutation& g, const Permutation& h);

/// g h g^-1
Permutation conjugate(const Permutation& g, const Permutation& h);

inline Permutation operator*(const Permutation& g, const Permutation& h) {
  return multiply(g, h);
}

/// Disjoint-cycle text, e.g. "(1,5)(2,6)"; "e" or "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle text: each cycle starts at its least point, cycles ordered
/// by that point, fixed points omitted, identity printed as "e".
std::string format_cycles(const Permutation& g);

}  // namespace sylow
