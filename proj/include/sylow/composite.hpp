#pragma once

#include <cstddef>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm.hpp"
#include "sylow/portrait.hpp"

namespace sylow {

/// n = sum 2^(k_i) with k_0 < k_1 < ... < k_m.
struct BinaryDecomposition {
  std::size_t n = 0;
  std::vector<std::size_t> exponents;

  /// m, the index of the largest exponent.
  std::size_t m() const noexcept { return exponents.empty() ? 0 : exponents.size() - 1; }
};

BinaryDecomposition decompose(std::size_t n);

/// Number of ones in the binary expansion of n.
std::size_t binary_digit_sum(std::size_t n);

/// Exponent of 2 in n!, summed directly as floor(n/2) + floor(n/4) + ...
std::size_t legendre_2(std::size_t n);

/// Largest e with 2^e dividing n (n > 0).
std::size_t two_adic_valuation(std::size_t n);

BigInt order_syl2_S(std::size_t n);
/// Order of a Sylow 2-subgroup of A_n; 1 for n < 2.
BigInt order_syl2_A(std::size_t n);

std::size_t order_syl2_S_log2(std::size_t n);
std::size_t order_syl2_A_log2(std::size_t n);

/// Minimal number of generators of a Sylow 2-subgroup of A_n (0 when trivial).
std::size_t rank_syl2_A(std::size_t n);
std::size_t rank_syl2_S(std::size_t n);

/// Placement of the factor blocks inside 1..n: one contiguous block per
/// exponent, ordered by decreasing exponent starting at point 1.
struct Block {
  std::size_t exponent;
  std::size_t first_point;  // 1-based
  std::size_t size() const noexcept { return std::size_t{1} << exponent; }
};

struct BlockLayout {
  std::size_t n = 0;
  std::vector<Block> blocks;
};

BlockLayout block_layout(std::size_t n);

/// One portrait per block of a layout, aligned with BlockLayout::blocks.
/// Blocks of exponent 0 (a single fixed point) carry no portrait and are
/// skipped: factors[i] belongs to the i-th block with positive exponent.
struct SubdirectElement {
  std::vector<Portrait> factors;
};

/// Identity tuple for a layout.
SubdirectElement subdirect_identity(const BlockLayout& layout);

/// Factorwise product.
SubdirectElement compose(const SubdirectElement& a, const SubdirectElement& b);

/// Throws std::invalid_argument if the factor depths do not match the layout.
void validate_tuple(const BlockLayout& layout, const SubdirectElement& e);

/// True iff the last-level indexes summed over all factors are even.
bool check_congruence(const BlockLayout& layout, const SubdirectElement& e);

/// The block-diagonal permutation of 1..n realised by a tuple.
Permutation to_permutation(const BlockLayout& layout, const SubdirectElement& e);

/// Generators of a Sylow 2-subgroup of S_n as tuples: alpha_0..alpha_{k-1} per
/// block, blocks in layout order.
std::vector<SubdirectElement> build_tuples_S(std::size_t n);

/// Minimal generating tuples of a Sylow 2-subgroup of A_n. Odd n is handled
/// on n-1 points; n < 4 yields an empty list.
std::vector<SubdirectElement> build_tuples_A(std::size_t n);

std::vector<Permutation> build_gens_S(std::size_t n);
std::vector<Permutation> build_gens_A(std::size_t n);

/// phi(sigma) = sigma * (4k+1, 4k+2)^chi(sigma), chi the parity of sigma.
/// Throws if the degree is not a positive multiple of 4.
Permutation iso_4k2(const Permutation& sigma);

/// The point fixed by the Sylow 2-subgroups built for odd n, namely n.
std::size_t fixed_points_odd(std::size_t n);

/// Number of Sylow 2-subgroups of S_{2^r}: (2^r)! / 2^(2^r - 1).
BigInt count_sylow2_of_S(std::size_t r);

/// Grouping of box-products: a leaf refers to an entry of the order list, an
/// inner node applies the even subdirect product to its children.
struct BoxtimesNode {
  std::size_t leaf = 0;
  std::vector<BoxtimesNode> children;

  static BoxtimesNode of(std::size_t index) { return BoxtimesNode{index, {}}; }
  static BoxtimesNode node(std::vector<BoxtimesNode> kids) { return BoxtimesNode{0, std::move(kids)}; }
};

/// Order of a nested box-product. Each inner node with two or more children
/// divides the product of its children's orders by 2.
BigInt boxtimes_order(const std::vector<BigInt>& orders, const BoxtimesNode& grouping);

/// Flat grouping over all orders.
BigInt boxtimes_order(const std::vector<BigInt>& orders);

}  // namespace sylow
