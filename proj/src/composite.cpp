#include "sylow/composite.hpp"

#include <bit>
#include <stdexcept>

#include "sylow/sylow2.hpp"

namespace sylow {

BinaryDecomposition decompose(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  BinaryDecomposition d{n, {}};
  for (std::size_t e = 0; (n >> e) != 0; ++e)
    if ((n >> e) & 1U) d.exponents.push_back(e);
  return d;
}

std::size_t binary_digit_sum(std::size_t n) { return static_cast<std::size_t>(std::popcount(n)); }

std::size_t legendre_2(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t p = 2; p <= n; p *= 2) total += n / p;
  return total;
}

std::size_t two_adic_valuation(std::size_t n) {
  if (n == 0) throw std::invalid_argument("valuation of 0 is undefined");
  return static_cast<std::size_t>(std::countr_zero(n));
}

std::size_t order_syl2_S_log2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  return n - binary_digit_sum(n);
}

std::size_t order_syl2_A_log2(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  return n < 2 ? 0 : n - binary_digit_sum(n) - 1;
}

BigInt order_syl2_S(std::size_t n) { return pow2(static_cast<unsigned>(order_syl2_S_log2(n))); }
BigInt order_syl2_A(std::size_t n) { return pow2(static_cast<unsigned>(order_syl2_A_log2(n))); }

std::size_t rank_syl2_A(std::size_t n) {
  if (n < 4) return 0;
  const auto d = decompose(n % 2 ? n - 1 : n);
  if (d.exponents.size() == 1) return d.exponents.front();
  std::size_t sum = 0;
  for (auto k : d.exponents) sum += k;
  return sum - 1;
}

std::size_t rank_syl2_S(std::size_t n) {
  if (n < 2) return 0;
  std::size_t sum = 0;
  for (auto k : decompose(n).exponents) sum += k;
  return sum;
}

BlockLayout block_layout(std::size_t n) {
  const auto d = decompose(n);
  BlockLayout layout{n, {}};
  std::size_t next = 1;
  for (auto it = d.exponents.rbegin(); it != d.exponents.rend(); ++it) {
    layout.blocks.push_back(Block{*it, next});
    next += std::size_t{1} << *it;
  }
  return layout;
}

namespace {

std::vector<const Block*> portrait_blocks(const BlockLayout& layout) {
  std::vector<const Block*> out;
  for (const auto& b : layout.blocks)
    if (b.exponent > 0) out.push_back(&b);
  return out;
}

/// Labels at v_{level,1} and v_{k-1,1}; only the latter when level == k-1.
Portrait odd_structure(std::size_t depth, std::size_t level) {
  if (level + 1 == depth) return alpha(depth, level);
  return compose(alpha(depth, level), alpha(depth, depth - 1));
}

}  // namespace

SubdirectElement subdirect_identity(const BlockLayout& layout) {
  SubdirectElement e;
  for (const auto* b : portrait_blocks(layout)) e.factors.push_back(Portrait::identity(b->exponent));
  return e;
}

SubdirectElement compose(const SubdirectElement& a, const SubdirectElement& b) {
  if (a.factors.size() != b.factors.size()) throw std::invalid_argument("tuple length mismatch");
  SubdirectElement out;
  for (std::size_t i = 0; i < a.factors.size(); ++i) out.factors.push_back(compose(a.factors[i], b.factors[i]));
  return out;
}

void validate_tuple(const BlockLayout& layout, const SubdirectElement& e) {
  const auto blocks = portrait_blocks(layout);
  if (blocks.size() != e.factors.size()) throw std::invalid_argument("tuple length does not match layout");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (e.factors[i].depth() != blocks[i]->exponent)
      throw std::invalid_argument("tuple factor depth does not match layout");
}

bool check_congruence(const BlockLayout& layout, const SubdirectElement& e) {
  validate_tuple(layout, e);
  std::size_t total = 0;
  for (const auto& f : e.factors) total += level_index(f, f.depth() - 1);
  return total % 2 == 0;
}

Permutation to_permutation(const BlockLayout& layout, const SubdirectElement& e) {
  validate_tuple(layout, e);
  const auto blocks = portrait_blocks(layout);
  auto id = Permutation::identity(layout.n);
  std::vector<Permutation::Point> images(id.images().begin(), id.images().end());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto local = leaf_permutation(e.factors[i]);
    const std::size_t base = blocks[i]->first_point - 1;
    for (std::size_t x = 0; x < local.degree(); ++x)
      images[base + x] = static_cast<Permutation::Point>(base + local[x]);
  }
  return Permutation::from_zero_based(std::move(images));
}

std::vector<SubdirectElement> build_tuples_S(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const auto layout = block_layout(n);
  const auto blocks = portrait_blocks(layout);
  std::vector<SubdirectElement> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i]->exponent; ++j) {
      auto e = subdirect_identity(layout);
      e.factors[i] = alpha(blocks[i]->exponent, j);
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<SubdirectElement> build_tuples_A(std::size_t n) {
  if (n < 4) return {};
  const auto layout = block_layout(n);
  const auto blocks = portrait_blocks(layout);
  std::vector<SubdirectElement> out;

  const std::size_t top = blocks.front()->exponent;
  if (blocks.size() == 1) {
    for (auto& g : gen_set_G(top)) {
      auto e = subdirect_identity(layout);
      e.factors[0] = std::move(g);
      out.push_back(std::move(e));
    }
    return out;
  }

  // Smaller factors pair their odd-structure generators with the top factor's
  // last-level generator; smaller factors go in increasing size.
  for (std::size_t i = blocks.size(); i-- > 1;) {
    const std::size_t k = blocks[i]->exponent;
    for (std::size_t j = 0; j < k; ++j) {
      auto e = subdirect_identity(layout);
      e.factors[0] = alpha(top, top - 1);
      e.factors[i] = odd_structure(k, j);
      out.push_back(std::move(e));
    }
  }
  for (std::size_t j = 0; j + 1 < top; ++j) {
    auto e = subdirect_identity(layout);
    e.factors[0] = alpha(top, j);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Permutation> build_gens_S(std::size_t n) {
  const auto layout = block_layout(n);
  std::vector<Permutation> out;
  for (const auto& e : build_tuples_S(n)) out.push_back(to_permutation(layout, e));
  return out;
}

std::vector<Permutation> build_gens_A(std::size_t n) {
  if (n < 4) return {};
  const auto layout = block_layout(n);
  std::vector<Permutation> out;
  for (const auto& e : build_tuples_A(n)) out.push_back(to_permutation(layout, e));
  return out;
}

Permutation iso_4k2(const Permutation& sigma) {
  const std::size_t d = sigma.degree();
  if (d == 0 || d % 4 != 0) throw std::invalid_argument("degree must be a positive multiple of 4");
  std::vector<Permutation::Point> images(sigma.images().begin(), sigma.images().end());
  images.push_back(static_cast<Permutation::Point>(d));
  images.push_back(static_cast<Permutation::Point>(d + 1));
  if (sign(sigma) < 0) std::swap(images[d], images[d + 1]);
  return Permutation::from_zero_based(std::move(images));
}

std::size_t fixed_points_odd(std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  return n;
}

BigInt count_sylow2_of_S(std::size_t r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (r > 16) throw std::invalid_argument("r too large");
  const std::size_t n = std::size_t{1} << r;
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  return factorial / pow2(static_cast<unsigned>(n - 1));
}

namespace {

BigInt boxtimes_node(const std::vector<BigInt>& orders, const BoxtimesNode& node) {
  if (node.children.empty()) {
    if (node.leaf >= orders.size()) throw std::out_of_range("box-product leaf index out of range");
    return orders[node.leaf];
  }
  BigInt product = 1;
  for (const auto& c : node.children) product *= boxtimes_node(orders, c);
  if (node.children.size() == 1) return product;
  if (product % 2 != 0) throw std::domain_error("box-product of groups with odd total order");
  return product / 2;
}

}  // namespace

BigInt boxtimes_order(const std::vector<BigInt>& orders, const BoxtimesNode& grouping) {
  if (orders.empty()) throw std::invalid_argument("empty order list");
  return boxtimes_node(orders, grouping);
}

BigInt boxtimes_order(const std::vector<BigInt>& orders) {
  if (orders.empty()) throw std::invalid_argument("empty order list");
  std::vector<BoxtimesNode> leaves;
  for (std::size_t i = 0; i < orders.size(); ++i) leaves.push_back(BoxtimesNode::of(i));
  return boxtimes_order(orders, BoxtimesNode::node(std::move(leaves)));
}

}  // namespace sylow
