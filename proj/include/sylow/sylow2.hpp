#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm.hpp"
#include "sylow/perm_group.hpp"
#include "sylow/portrait.hpp"

namespace sylow {

/// The concrete groups inside Aut X^[k]:
///  B - the full iterated wreath power C2 wr ... wr C2 (Sylow 2-subgroup of S_{2^k}),
///  G - its even part B_{k-1} x| W_{k-1} (Sylow 2-subgroup of A_{2^k}),
///  W - automorphisms with an even number of labels, all on the last level.
enum class GroupTag { B, G, W };

struct GroupKind {
  GroupTag tag;
  std::size_t depth;
};

/// Single active label at v_{l,1}.
Portrait alpha(std::size_t depth, std::size_t level);

/// Labels at last-level positions 1 and 2^(k-1).
Portrait tau(std::size_t depth);

/// Labels exactly at the given 1-based last-level positions.
Portrait tau_at(std::size_t depth, const std::set<std::size_t>& positions);

/// {alpha_0, ..., alpha_{k-1}}; generates B_k.
std::vector<Portrait> gen_set_B(std::size_t depth);

/// {alpha_0, ..., alpha_{k-2}, tau}; a minimal generating set of G_k.
std::vector<Portrait> gen_set_G(std::size_t depth);

/// Membership in G_k by the last-level parity.
bool in_G(const Portrait& g);

/// Membership in G_k via sections: the product of the two level-1 sections
/// must lie in G_{k-1}.
bool in_G_recursive(const Portrait& g);

bool in_W(const Portrait& g);

/// Labels only on the last level, odd count in each half of it.
bool is_type_T(const Portrait& g);

/// Odd count in each half of the last level; upper labels unconstrained.
bool is_type_C(const Portrait& g);

/// g = b * w with b in B_{k-1} (last level clear) and w in W_{k-1}.
std::pair<Portrait, Portrait> split_semidirect(const Portrait& g);

BigInt order_formula(GroupKind kind);

/// Candidate diagonal generating sets that generate the full group (verified
/// with the permutation oracle). Supported for k <= 4.
///
/// B: one generator per level l < k with an odd number of labels, all on level l.
/// G: the same for levels l < k-1, plus a type-T generator for the last level.
std::vector<std::vector<Portrait>> enumerate_diagonal_bases(GroupKind kind);

/// Number of candidate diagonal sets before oracle filtering.
BigInt count_diagonal_candidates(GroupKind kind);

/// Closed-form count of diagonal bases: 2^(2^k - k - 1) for B and
/// 2^(2^k - k - 2) for G. Confirmed against enumerate_diagonal_bases.
BigInt count_diagonal_bases(GroupKind kind);

/// Leaf permutations of a list of portraits.
std::vector<Permutation> leaf_permutations(const std::vector<Portrait>& gens);

/// Permutation group on 2^k points generated by the leaf actions of gens.
PermGroup portrait_group(const std::vector<Portrait>& gens);

}  // namespace sylow
