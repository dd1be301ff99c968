#include "sylow/portrait.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sylow {

namespace {

constexpr std::size_t kMaxDepth = 20;

std::size_t level_offset(std::size_t level) { return (std::size_t{1} << level) - 1; }

void check_vertex(const Portrait& g, const Vertex& v) {
  if (v.level >= g.depth()) throw std::out_of_range("vertex level out of range");
  if (v.position < 1 || v.position > (std::size_t{1} << v.level))
    throw std::out_of_range("vertex position out of range");
}

}  // namespace

Portrait Portrait::identity(std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("portrait depth must be positive");
  if (depth > kMaxDepth) throw std::invalid_argument("portrait depth too large");
  return Portrait(depth, std::vector<std::uint8_t>((std::size_t{1} << depth) - 1, 0));
}

Portrait Portrait::from_levels(const std::vector<std::vector<std::uint8_t>>& levels) {
  if (levels.empty()) throw std::invalid_argument("portrait needs at least one level");
  if (levels.size() > kMaxDepth) throw std::invalid_argument("portrait depth too large");
  std::vector<std::uint8_t> bits;
  bits.reserve((std::size_t{1} << levels.size()) - 1);
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l].size() != (std::size_t{1} << l))
      throw std::invalid_argument("level " + std::to_string(l) + " must have " +
                                  std::to_string(std::size_t{1} << l) + " bits");
    for (auto b : levels[l]) {
      if (b > 1) throw std::invalid_argument("portrait labels must be 0 or 1");
      bits.push_back(b);
    }
  }
  return Portrait(levels.size(), std::move(bits));
}

Portrait Portrait::from_bits(std::size_t depth, std::vector<std::uint8_t> bits) {
  if (depth == 0) throw std::invalid_argument("portrait depth must be positive");
  if (depth > kMaxDepth) throw std::invalid_argument("portrait depth too large");
  if (bits.size() != (std::size_t{1} << depth) - 1)
    throw std::invalid_argument("portrait bit count does not match depth");
  for (auto b : bits)
    if (b > 1) throw std::invalid_argument("portrait labels must be 0 or 1");
  return Portrait(depth, std::move(bits));
}

std::uint8_t Portrait::label(const Vertex& v) const {
  check_vertex(*this, v);
  return label(v.level, v.position - 1);
}

std::span<const std::uint8_t> Portrait::level_bits(std::size_t level) const {
  if (level >= depth_) throw std::out_of_range("level out of range");
  return std::span<const std::uint8_t>(bits_).subspan(level_offset(level), std::size_t{1} << level);
}

bool Portrait::is_identity() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

std::vector<std::size_t> vertex_images(const Portrait& g) {
  // Heap order over levels 0..k, so the leaf level is included.
  const std::size_t k = g.depth();
  std::vector<std::size_t> img((std::size_t{1} << (k + 1)) - 1);
  img[0] = 0;
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t off = level_offset(l);
    const std::size_t child_off = level_offset(l + 1);
    for (std::size_t j = 0; j < (std::size_t{1} << l); ++j) {
      const std::size_t target = img[off + j];
      const std::uint8_t flip = g.label(l, j);
      img[child_off + 2 * j] = 2 * target + flip;
      img[child_off + 2 * j + 1] = 2 * target + (1 - flip);
    }
  }
  return img;
}

Portrait compose(const Portrait& g, const Portrait& h) {
  if (g.depth() != h.depth()) throw std::invalid_argument("portrait depth mismatch");
  const auto himg = vertex_images(h);
  std::vector<std::uint8_t> bits(g.size());
  for (std::size_t l = 0; l < g.depth(); ++l) {
    const std::size_t off = level_offset(l);
    for (std::size_t j = 0; j < (std::size_t{1} << l); ++j)
      bits[off + j] = h.label(l, j) ^ g.label(l, himg[off + j]);
  }
  return Portrait::from_bits(g.depth(), std::move(bits));
}

Portrait inverse(const Portrait& g) {
  const auto gimg = vertex_images(g);
  std::vector<std::uint8_t> bits(g.size());
  for (std::size_t l = 0; l < g.depth(); ++l) {
    const std::size_t off = level_offset(l);
    for (std::size_t j = 0; j < (std::size_t{1} << l); ++j)
      bits[off + gimg[off + j]] = g.label(l, j);
  }
  return Portrait::from_bits(g.depth(), std::move(bits));
}

Portrait commutator(const Portrait& g, const Portrait& h) {
  return compose(compose(inverse(g), inverse(h)), compose(g, h));
}

Vertex vertex_image(const Portrait& g, const Vertex& v) {
  check_vertex(g, v);
  // Walk the path of v from the root, flipping each step where the label at
  // the current original prefix is active.
  std::size_t original = 0;
  std::size_t image = 0;
  const std::size_t j = v.position - 1;
  for (std::size_t step = 0; step < v.level; ++step) {
    const std::size_t bit = (j >> (v.level - 1 - step)) & 1U;
    image = 2 * image + (bit ^ g.label(step, original));
    original = 2 * original + bit;
  }
  return Vertex{v.level, image + 1};
}

Permutation leaf_permutation(const Portrait& g) {
  const auto img = vertex_images(g);
  const std::size_t k = g.depth();
  const std::size_t off = level_offset(k);
  std::vector<Permutation::Point> images(std::size_t{1} << k);
  for (std::size_t j = 0; j < images.size(); ++j)
    images[j] = static_cast<Permutation::Point>(img[off + j]);
  return Permutation::from_zero_based(std::move(images));
}

Portrait portrait_from_leaf_permutation(const Permutation& p) {
  const std::size_t n = p.degree();
  if (n < 2 || !std::has_single_bit(n)) throw std::invalid_argument("degree is not a power of 2");
  const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
  std::vector<std::uint8_t> bits(Portrait::identity(k).size());
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t shift = k - l - 1;
    for (std::size_t j = 0; j < (std::size_t{1} << l); ++j) {
      // First leaf below the left child of v_{l,j}; its image decides the label.
      const std::size_t leaf = j << (shift + 1);
      bits[level_offset(l) + j] = static_cast<std::uint8_t>((p[leaf] >> shift) & 1U);
    }
  }
  auto g = Portrait::from_bits(k, std::move(bits));
  if (leaf_permutation(g) != p) throw std::invalid_argument("permutation is not a tree automorphism");
  return g;
}

std::size_t level_index(const Portrait& g, std::size_t level) {
  const auto bits = g.level_bits(level);
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

Portrait section(const Portrait& g, const Vertex& v) {
  check_vertex(g, v);
  const std::size_t depth = g.depth() - v.level;
  std::vector<std::uint8_t> bits;
  bits.reserve((std::size_t{1} << depth) - 1);
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t first = (v.position - 1) << d;
    for (std::size_t j = 0; j < (std::size_t{1} << d); ++j)
      bits.push_back(g.label(v.level + d, first + j));
  }
  return Portrait::from_bits(depth, std::move(bits));
}

std::size_t distance(const Portrait& g) {
  std::vector<std::pair<std::size_t, std::size_t>> active;
  for (std::size_t l = 0; l < g.depth(); ++l)
    for (std::size_t j = 0; j < (std::size_t{1} << l); ++j)
      if (g.label(l, j)) active.emplace_back(l, j);

  std::size_t best = 0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    for (std::size_t b = a + 1; b < active.size(); ++b) {
      auto [la, ja] = active[a];
      auto [lb, jb] = active[b];
      // Lift the deeper vertex, then both together until they meet.
      std::size_t steps = 0;
      while (la > lb) { ja >>= 1; --la; ++steps; }
      while (lb > la) { jb >>= 1; --lb; ++steps; }
      while (ja != jb) { ja >>= 1; jb >>= 1; steps += 2; }
      best = std::max(best, steps);
    }
  }
  return best;
}

CycleType leaf_cycle_type(const Portrait& g) {
  const auto p = leaf_permutation(g);
  CycleType type;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ++type[len];
  }
  return type;
}

Portrait parse_portrait(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty portrait text");
  std::vector<std::vector<std::uint8_t>> levels(1);
  for (char c : text) {
    if (c == '/') {
      levels.emplace_back();
    } else if (c == '0' || c == '1') {
      levels.back().push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      throw std::invalid_argument(std::string("invalid portrait character '") + c + "'");
    }
  }
  return Portrait::from_levels(levels);
}

std::string format_portrait(const Portrait& g) {
  std::string out;
  out.reserve(g.size() + g.depth());
  for (std::size_t l = 0; l < g.depth(); ++l) {
    if (l) out += '/';
    for (auto b : g.level_bits(l)) out += static_cast<char>('0' + b);
  }
  return out;
}

Portrait random_portrait(std::size_t depth, std::mt19937_64& rng) {
  auto g = Portrait::identity(depth);
  std::vector<std::uint8_t> bits(g.size());
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
  }
  return Portrait::from_bits(depth, std::move(bits));
}

std::vector<Portrait> all_portraits(std::size_t depth) {
  if (depth == 0 || depth > 4) throw std::invalid_argument("exhaustive enumeration supports depth 1..4");
  const std::size_t bits = (std::size_t{1} << depth) - 1;
  std::vector<Portrait> out;
  out.reserve(std::size_t{1} << bits);
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    std::vector<std::uint8_t> labels(bits);
    for (std::size_t i = 0; i < bits; ++i) labels[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    out.push_back(Portrait::from_bits(depth, std::move(labels)));
  }
  return out;
}

}  // namespace sylow
