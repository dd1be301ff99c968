#include "sylow/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylow {

PermGroup::PermGroup(std::size_t degree) : degree_(degree), levels_(degree) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  const auto id = Permutation::identity(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    auto& lv = levels_[i];
    lv.transversal.assign(degree, std::nullopt);
    lv.inverse_transversal.assign(degree, std::nullopt);
    lv.transversal[i] = id;
    lv.inverse_transversal[i] = id;
    lv.orbit.push_back(i);
  }
}

PermGroup::PermGroup(std::size_t degree, const std::vector<Permutation>& gens) : PermGroup(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    extend(g);
  }
}

bool PermGroup::sift_from(std::size_t level, Permutation g) const {
  for (std::size_t i = level; i < degree_; ++i) {
    const std::size_t x = g[i];
    const auto& inv = levels_[i].inverse_transversal[x];
    if (!inv) return false;
    g = *inv * g;
  }
  return true;
}

void PermGroup::update(std::size_t level, const Permutation& g) {
  auto& lv = levels_[level];
  const std::size_t x = g[level];
  if (lv.transversal[x]) {
    Permutation h = *lv.inverse_transversal[x] * g;
    if (!sift_from(level + 1, h)) add_at(level + 1, h);
    return;
  }
  lv.transversal[x] = g;
  lv.inverse_transversal[x] = invert(g);
  lv.orbit.push_back(x);
  // gens at this level cannot grow while we recurse: additions only go deeper.
  for (std::size_t i = 0; i < levels_[level].gens.size(); ++i) {
    const Permutation next = levels_[level].gens[i] * g;
    update(level, next);
  }
}

void PermGroup::add_at(std::size_t level, const Permutation& g) {
  levels_[level].gens.push_back(g);
  const std::vector<std::size_t> snapshot = levels_[level].orbit;
  for (std::size_t x : snapshot) {
    const Permutation t = *levels_[level].transversal[x];
    update(level, g * t);
  }
}

bool PermGroup::extend(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  if (sift_from(0, g)) return false;
  gens_.push_back(g);
  add_at(0, g);
  return true;
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& lv : levels_) result *= lv.orbit.size();
  return result;
}

bool PermGroup::is_trivial() const {
  return std::all_of(levels_.begin(), levels_.end(), [](const Level& lv) { return lv.orbit.size() == 1; });
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  return sift_from(0, g);
}

std::vector<std::size_t> PermGroup::orbit(std::size_t point) const {
  if (point < 1 || point > degree_) throw std::out_of_range("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<std::size_t> queue{point - 1};
  seen[point - 1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& s : gens_) {
      const std::size_t y = s[queue[i]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  for (auto& x : queue) ++x;
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) return PermGroup(1);
  return PermGroup(gens.front().degree(), gens);
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds) {
  PermGroup closure(group.degree());
  for (const auto& s : seeds) {
    if (s.degree() != group.degree()) throw std::invalid_argument("seed degree mismatch");
    closure.extend(s);
  }
  // closure.gens_ grows as conjugates are added; walk it as a work queue.
  for (std::size_t i = 0; i < closure.gens_.size(); ++i) {
    for (const auto& g : group.generators()) {
      const Permutation c = conjugate(g, closure.gens_[i]);
      closure.extend(c);
    }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
  const auto& gens = group.generators();
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  return normal_closure(group, seeds);
}

PermGroup frattini_of_2group(const PermGroup& group) {
  if (log2_exact(group.order()) < 0) throw std::invalid_argument("group order is not a power of 2");
  const auto& gens = group.generators();
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(gens[i] * gens[i]);
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(group, seeds);
}

std::size_t rank_of_2group(const PermGroup& group) {
  const auto phi = frattini_of_2group(group);
  const long e = log2_exact(group.order() / phi.order());
  if (e < 0) throw std::logic_error("Frattini index is not a power of 2");
  return static_cast<std::size_t>(e);
}

std::vector<Permutation> enumerate_elements(const PermGroup& group, std::size_t cap) {
  if (group.order() > cap) throw std::length_error("group order exceeds enumeration cap");
  std::vector<Permutation> elements{Permutation::identity(group.degree())};
  for (std::size_t level = group.degree(); level-- > 0;) {
    const auto& lv = group.levels_[level];
    if (lv.orbit.size() == 1) continue;
    std::vector<Permutation> next;
    next.reserve(elements.size() * lv.orbit.size());
    for (std::size_t x : lv.orbit)
      for (const auto& e : elements) next.push_back(*lv.transversal[x] * e);
    elements = std::move(next);
  }
  return elements;
}

}  // namespace sylow
