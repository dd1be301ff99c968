#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sylow/bigint.hpp"
#include "sylow/perm.hpp"

namespace sylow {

/// Permutation group with a stabilizer chain built by deterministic
/// Schreier-Sims.
///
/// The base is the complete point list 1..n, so level i is the stabilizer of
/// points 1..i and its basic orbit is the orbit of point i+1. Transversals are
/// stored explicitly (degrees here stay well below 100). After construction a
/// PermGroup is immutable and safe to query concurrently.
class PermGroup {
 public:
  /// Trivial group on n points.
  explicit PermGroup(std::size_t degree);

  /// Group generated by gens. An empty list gives the trivial group of the
  /// given degree. Throws std::invalid_argument on degree mismatch.
  PermGroup(std::size_t degree, const std::vector<Permutation>& gens);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  BigInt order() const;
  bool is_trivial() const;

  /// Membership by sifting through the chain.
  bool contains(const Permutation& g) const;

  /// Orbit of a 1-based point under the whole group, sorted.
  std::vector<std::size_t> orbit(std::size_t point) const;

  /// Sizes of the basic orbits, one per base point.
  std::vector<std::size_t> basic_orbit_lengths() const;

  bool is_abelian() const;

 private:
  friend PermGroup normal_closure(const PermGroup&, const std::vector<Permutation>&);
  friend std::vector<Permutation> enumerate_elements(const PermGroup&, std::size_t);

  struct Level {
    std::vector<Permutation> gens;
    // transversal[x] maps the base point to x; inverse_transversal holds inverses.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse_transversal;
    std::vector<std::size_t> orbit;
  };

  /// Adds a generator and restores the chain. Returns false if g was already a
  /// member.
  bool extend(const Permutation& g);

  void add_at(std::size_t level, const Permutation& g);
  void update(std::size_t level, const Permutation& g);
  bool sift_from(std::size_t level, Permutation g) const;

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

PermGroup group_from_generators(const std::vector<Permutation>& gens);

inline bool contains(const PermGroup& g, const Permutation& x) { return g.contains(x); }

/// Smallest subgroup containing seeds that is normalized by G.
PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds);

/// [G, G], as the normal closure of generator commutators.
PermGroup derived_subgroup(const PermGroup& group);

/// G^2 [G, G] for a 2-group, as the normal closure of generator squares and
/// commutators. Throws std::invalid_argument if |G| is not a power of 2.
PermGroup frattini_of_2group(const PermGroup& group);

/// log2 |G / Phi(G)|, i.e. the size of every minimal generating set of the
/// 2-group G. The trivial group yields 0. Throws for non-2-groups.
std::size_t rank_of_2group(const PermGroup& group);

/// All elements, each exactly once. Throws std::length_error if the order
/// exceeds cap.
std::vector<Permutation> enumerate_elements(const PermGroup& group, std::size_t cap);

}  // namespace sylow
