#include "sylow/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace sylow {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > 0xFFFF)
    throw std::invalid_argument("permutation degree out of range");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  if (images.empty() || images.size() > 0xFFFF)
    throw std::invalid_argument("permutation degree out of range");
  std::vector<Point> out(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t y = images[i];
    if (y < 1 || y > images.size() || seen[y - 1])
      throw std::invalid_argument("images do not form a bijection");
    seen[y - 1] = true;
    out[i] = static_cast<Point>(y - 1);
  }
  return Permutation(std::move(out));
}

std::size_t Permutation::image(std::size_t point) const {
  if (point < 1 || point > degree()) throw std::out_of_range("point out of range");
  return std::size_t{images_[point - 1]} + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> seen(degree(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return cycles;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation multiply(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<Permutation::Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = g[h[x]];
  return Permutation::from_zero_based(std::move(out));
}

Permutation invert(const Permutation& g) {
  std::vector<Permutation::Point> out(g.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[g[x]] = static_cast<Permutation::Point>(x);
  return Permutation::from_zero_based(std::move(out));
}

int sign(const Permutation& g) {
  return ((g.degree() - g.cycle_count()) % 2 == 0) ? 1 : -1;
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return invert(g) * invert(h) * g * h;
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return g * h * invert(g);
}

namespace {

struct CycleParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("malformed cycle text: expected '") + c + "'");
    ++pos;
  }
  std::size_t number() {
    skip_ws();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (value > 0xFFFF) throw std::invalid_argument("point out of range");
      ++pos;
      ++digits;
    }
    if (digits == 0) throw std::invalid_argument("malformed cycle text: expected a point");
    return value;
  }
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  auto result = Permutation::identity(degree);
  std::vector<Permutation::Point> images(result.images().begin(), result.images().end());
  std::vector<bool> used(degree, false);

  CycleParser p{text};
  if (p.peek() == 'e') {
    ++p.pos;
    if (!p.at_end()) throw std::invalid_argument("malformed cycle text: trailing input");
    return result;
  }
  if (p.at_end()) throw std::invalid_argument("empty cycle text");

  while (!p.at_end()) {
    p.expect('(');
    if (p.peek() == ')') {
      ++p.pos;
      continue;
    }
    std::vector<std::size_t> cycle;
    for (;;) {
      const std::size_t x = p.number();
      if (x < 1 || x > degree) throw std::invalid_argument("point exceeds degree");
      if (used[x - 1]) throw std::invalid_argument("repeated point in cycle text");
      used[x - 1] = true;
      cycle.push_back(x - 1);
      if (p.peek() == ',') {
        ++p.pos;
        continue;
      }
      p.expect(')');
      break;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Permutation::Point>(cycle[(i + 1) % cycle.size()]);
  }
  return Permutation::from_zero_based(std::move(images));
}

std::string format_cycles(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i] || g[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace sylow
