#include "sylow/sylow2.hpp"

#include <stdexcept>

namespace sylow {

namespace {

void require_depth(const Portrait& g, std::size_t min_depth, const char* what) {
  if (g.depth() < min_depth)
    throw std::invalid_argument(std::string(what) + " requires depth >= " + std::to_string(min_depth));
}

std::size_t level_offset(std::size_t level) { return (std::size_t{1} << level) - 1; }

/// Labels active in positions [first, last) of a level.
std::size_t count_range(const Portrait& g, std::size_t level, std::size_t first, std::size_t last) {
  std::size_t n = 0;
  for (std::size_t j = first; j < last; ++j) n += g.label(level, j);
  return n;
}

bool upper_levels_clear(const Portrait& g) {
  for (std::size_t l = 0; l + 1 < g.depth(); ++l)
    if (level_index(g, l) != 0) return false;
  return true;
}

bool halves_odd(const Portrait& g) {
  const std::size_t last = g.depth() - 1;
  const std::size_t half = std::size_t{1} << (last - 1);
  return count_range(g, last, 0, half) % 2 == 1 && count_range(g, last, half, 2 * half) % 2 == 1;
}

/// Portraits with labels only on `level`, taken from each odd-size subset of
/// its positions restricted by `accept`.
template <typename Accept>
std::vector<Portrait> single_level_portraits(std::size_t depth, std::size_t level, Accept accept) {
  const std::size_t width = std::size_t{1} << level;
  if (width > 20) throw std::invalid_argument("level too wide for enumeration");
  std::vector<Portrait> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << width); ++mask) {
    std::vector<std::uint8_t> bits((std::size_t{1} << depth) - 1, 0);
    for (std::size_t j = 0; j < width; ++j) bits[level_offset(level) + j] = (mask >> j) & 1U;
    auto p = Portrait::from_bits(depth, std::move(bits));
    if (accept(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<Portrait>> diagonal_candidates_per_level(GroupKind kind) {
  const std::size_t k = kind.depth;
  std::vector<std::vector<Portrait>> choices;
  const std::size_t plain_levels = kind.tag == GroupTag::G ? k - 1 : k;
  for (std::size_t l = 0; l < plain_levels; ++l)
    choices.push_back(single_level_portraits(
        k, l, [l](const Portrait& p) { return level_index(p, l) % 2 == 1; }));
  if (kind.tag == GroupTag::G)
    choices.push_back(single_level_portraits(k, k - 1, [](const Portrait& p) { return is_type_T(p); }));
  return choices;
}

void validate_kind(GroupKind kind) {
  if (kind.tag == GroupTag::B && kind.depth < 1) throw std::invalid_argument("B requires k >= 1");
  if (kind.tag != GroupTag::B && kind.depth < 2) throw std::invalid_argument("G and W require k >= 2");
  if (kind.depth > 30) throw std::invalid_argument("depth too large");
}

}  // namespace

Portrait alpha(std::size_t depth, std::size_t level) {
  if (level >= depth) throw std::out_of_range("alpha level out of range");
  auto bits = std::vector<std::uint8_t>((std::size_t{1} << depth) - 1, 0);
  bits[level_offset(level)] = 1;
  return Portrait::from_bits(depth, std::move(bits));
}

Portrait tau_at(std::size_t depth, const std::set<std::size_t>& positions) {
  if (depth < 2) throw std::invalid_argument("tau requires depth >= 2");
  auto bits = std::vector<std::uint8_t>((std::size_t{1} << depth) - 1, 0);
  const std::size_t width = std::size_t{1} << (depth - 1);
  for (std::size_t p : positions) {
    if (p < 1 || p > width) throw std::out_of_range("tau position out of range");
    bits[level_offset(depth - 1) + p - 1] = 1;
  }
  return Portrait::from_bits(depth, std::move(bits));
}

Portrait tau(std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("tau requires depth >= 2");
  return tau_at(depth, {1, std::size_t{1} << (depth - 1)});
}

std::vector<Portrait> gen_set_B(std::size_t depth) {
  std::vector<Portrait> out;
  for (std::size_t l = 0; l < depth; ++l) out.push_back(alpha(depth, l));
  return out;
}

std::vector<Portrait> gen_set_G(std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("G requires depth >= 2");
  std::vector<Portrait> out;
  for (std::size_t l = 0; l + 1 < depth; ++l) out.push_back(alpha(depth, l));
  out.push_back(tau(depth));
  return out;
}

bool in_G(const Portrait& g) {
  require_depth(g, 2, "in_G");
  return level_index(g, g.depth() - 1) % 2 == 0;
}

namespace {

bool in_G_recursive_impl(const Portrait& g) {
  if (g.depth() == 1) return g.label(0, 0) == 0;
  const auto left = section(g, Vertex{1, 1});
  const auto right = section(g, Vertex{1, 2});
  return in_G_recursive_impl(compose(left, right));
}

}  // namespace

bool in_G_recursive(const Portrait& g) {
  require_depth(g, 2, "in_G");
  return in_G_recursive_impl(g);
}

bool in_W(const Portrait& g) {
  require_depth(g, 2, "in_W");
  return upper_levels_clear(g) && level_index(g, g.depth() - 1) % 2 == 0;
}

bool is_type_T(const Portrait& g) {
  require_depth(g, 2, "type T");
  return upper_levels_clear(g) && halves_odd(g);
}

bool is_type_C(const Portrait& g) {
  require_depth(g, 2, "type C");
  return halves_odd(g);
}

std::pair<Portrait, Portrait> split_semidirect(const Portrait& g) {
  if (!in_G(g)) throw std::invalid_argument("element is not in G_k");
  std::vector<std::uint8_t> bits(g.bits().begin(), g.bits().end());
  const std::size_t last = g.depth() - 1;
  for (std::size_t j = 0; j < (std::size_t{1} << last); ++j) bits[level_offset(last) + j] = 0;
  auto b = Portrait::from_bits(g.depth(), std::move(bits));
  auto w = compose(inverse(b), g);
  return {std::move(b), std::move(w)};
}

BigInt order_formula(GroupKind kind) {
  validate_kind(kind);
  const unsigned k = static_cast<unsigned>(kind.depth);
  switch (kind.tag) {
    case GroupTag::B: return pow2((1U << k) - 1);
    case GroupTag::G: return pow2((1U << k) - 2);
    case GroupTag::W: return pow2((1U << (k - 1)) - 1);
  }
  throw std::logic_error("unknown group kind");
}

std::vector<Permutation> leaf_permutations(const std::vector<Portrait>& gens) {
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(leaf_permutation(g));
  return out;
}

PermGroup portrait_group(const std::vector<Portrait>& gens) {
  if (gens.empty()) throw std::invalid_argument("portrait_group needs at least one generator");
  return PermGroup(std::size_t{1} << gens.front().depth(), leaf_permutations(gens));
}

std::vector<std::vector<Portrait>> enumerate_diagonal_bases(GroupKind kind) {
  validate_kind(kind);
  if (kind.tag == GroupTag::W) throw std::invalid_argument("diagonal bases are defined for B and G");
  if (kind.depth > 4) throw std::invalid_argument("diagonal-base enumeration supports k <= 4");

  const auto choices = diagonal_candidates_per_level(kind);
  const BigInt target = order_formula(kind);
  std::vector<std::vector<Portrait>> accepted;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<Portrait> candidate;
    for (std::size_t l = 0; l < choices.size(); ++l) candidate.push_back(choices[l][pick[l]]);
    if (portrait_group(candidate).order() == target) accepted.push_back(std::move(candidate));

    std::size_t l = choices.size();
    while (l > 0) {
      --l;
      if (++pick[l] < choices[l].size()) break;
      pick[l] = 0;
      if (l == 0) return accepted;
    }
  }
}

BigInt count_diagonal_candidates(GroupKind kind) {
  validate_kind(kind);
  const std::size_t k = kind.depth;
  // An odd-size subset of w positions can be chosen in 2^(w-1) ways.
  unsigned e = 0;
  if (kind.tag == GroupTag::B) {
    for (std::size_t l = 0; l < k; ++l) e += (1U << l) - 1;
  } else if (kind.tag == GroupTag::G) {
    for (std::size_t l = 0; l + 1 < k; ++l) e += (1U << l) - 1;
    e += 2 * ((1U << (k - 2)) - 1);
  } else {
    throw std::invalid_argument("diagonal bases are defined for B and G");
  }
  return pow2(e);
}

BigInt count_diagonal_bases(GroupKind kind) {
  validate_kind(kind);
  const unsigned k = static_cast<unsigned>(kind.depth);
  switch (kind.tag) {
    case GroupTag::B: return pow2((1U << k) - k - 1);
    case GroupTag::G: return pow2((1U << k) - k - 2);
    case GroupTag::W: break;
  }
  throw std::invalid_argument("diagonal bases are defined for B and G");
}

}  // namespace sylow
