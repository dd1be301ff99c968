#include "sylow/derived.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sylow/sylow2.hpp"

namespace sylow {

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("parity coordinates must be 0 or 1");
}

ParityVector ParityVector::unit(std::size_t length, std::size_t coordinate) {
  if (coordinate >= length) throw std::out_of_range("coordinate out of range");
  std::vector<std::uint8_t> bits(length, 0);
  bits[coordinate] = 1;
  return ParityVector(std::move(bits));
}

bool ParityVector::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

std::uint64_t ParityVector::to_mask() const {
  if (bits_.size() > 64) throw std::length_error("parity vector longer than 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) m |= std::uint64_t{bits_[i]} << i;
  return m;
}

ParityVector operator^(const ParityVector& a, const ParityVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("parity vector length mismatch");
  std::vector<std::uint8_t> bits(a.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a[i] ^ b[i];
  return ParityVector(std::move(bits));
}

std::string format_parity(const ParityVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += static_cast<char>('0' + v[i]);
  return out;
}

namespace {

std::size_t first_half_count(const Portrait& g) {
  const auto last = g.level_bits(g.depth() - 1);
  const auto half = last.first(last.size() / 2);
  return static_cast<std::size_t>(std::count(half.begin(), half.end(), std::uint8_t{1}));
}

}  // namespace

ParityVector abelianization_B(const Portrait& g) {
  std::vector<std::uint8_t> bits(g.depth());
  for (std::size_t l = 0; l < g.depth(); ++l) bits[l] = static_cast<std::uint8_t>(level_index(g, l) % 2);
  return ParityVector(std::move(bits));
}

ParityVector abelianization_G(const Portrait& g) {
  if (!in_G(g)) throw std::invalid_argument("element is not in G_k");
  std::vector<std::uint8_t> bits(g.depth());
  for (std::size_t l = 0; l + 1 < g.depth(); ++l)
    bits[l] = static_cast<std::uint8_t>(level_index(g, l) % 2);
  bits[g.depth() - 1] = static_cast<std::uint8_t>(first_half_count(g) % 2);
  return ParityVector(std::move(bits));
}

bool in_derived_B(const Portrait& g) { return abelianization_B(g).is_zero(); }

bool in_derived_G(const Portrait& g) {
  if (g.depth() < 2) throw std::invalid_argument("in_derived_G requires depth >= 2");
  // Outside G the last level has odd index, so one half is odd as well.
  if (!in_G(g)) return false;
  return abelianization_G(g).is_zero();
}

bool in_frattini_G(const Portrait& g) {
  if (!in_G(g)) throw std::invalid_argument("element is not in G_k");
  return in_derived_G(g);
}

SquaresReport squares_in_derived_check(std::size_t depth, std::size_t samples, std::uint64_t seed) {
  SquaresReport report;
  auto check = [&report, depth](const Portrait& g) {
    ++report.checked;
    const auto sq = compose(g, g);
    if (!in_derived_B(sq)) ++report.violations_B;
    if (depth >= 2 && in_G(g) && !in_derived_G(sq)) ++report.violations_G;
  };

  if (depth <= 3) {
    report.exhaustive = true;
    for (const auto& g : all_portraits(depth)) check(g);
    return report;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) check(random_portrait(depth, rng));
  return report;
}

}  // namespace sylow
