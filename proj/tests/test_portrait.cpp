#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "sylow/portrait.hpp"
#include "sylow/sylow2.hpp"

using namespace sylow;

namespace {

constexpr std::size_t kRandomCases = 500;

Portrait P(const char* text) { return parse_portrait(text); }

Permutation cycles(const char* text, std::size_t degree) { return parse_cycles(text, degree); }

}  // namespace

TEST(Portrait, IdentityFormatsAsZeros) {
  EXPECT_EQ(format_portrait(identity(2)), "0/00");
  EXPECT_TRUE(leaf_permutation(identity(2)).is_identity());
  EXPECT_THROW(identity(0), std::invalid_argument);
}

TEST(Portrait, IdentityIsNeutral) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_portrait(3, rng);
    EXPECT_EQ(compose(identity(3), g), g);
    EXPECT_EQ(compose(g, identity(3)), g);
  }
}

TEST(Portrait, ComposeExample) {
  // Frozen from the leaf-map oracle.
  EXPECT_EQ(format_portrait(oracle::compose_via_leaves(P("1/00"), P("0/10"))), "1/10");
  EXPECT_EQ(format_portrait(compose(P("1/00"), P("0/10"))), "1/10");
}

TEST(Portrait, ComposeAgreesWithLeafOracleExhaustivelyAtDepthThree) {
  const auto all = all_portraits(3);
  for (const auto& g : all)
    for (const auto& h : all) ASSERT_EQ(compose(g, h), oracle::compose_via_leaves(g, h));
}

TEST(Portrait, TauIsAnInvolution) { EXPECT_EQ(compose(tau(3), tau(3)), identity(3)); }

TEST(Portrait, ComposeRejectsDepthMismatch) {
  EXPECT_THROW(compose(identity(2), identity(3)), std::invalid_argument);
}

TEST(Portrait, InverseExamples) {
  EXPECT_EQ(inverse(P("1/00")), P("1/00"));
  EXPECT_EQ(inverse(identity(4)), identity(4));

  // Brute force over the 8 depth-2 portraits.
  std::vector<Portrait> solutions;
  for (const auto& x : all_portraits(2))
    if (oracle::compose_via_leaves(x, P("1/10")) == identity(2)) solutions.push_back(x);
  ASSERT_EQ(solutions.size(), 1U);
  EXPECT_EQ(format_portrait(solutions[0]), "1/01");
  EXPECT_EQ(format_portrait(inverse(P("1/10"))), "1/01");
}

TEST(Portrait, InverseLawRandomized) {
  std::mt19937_64 rng(11);
  for (std::size_t i = 0; i < kRandomCases; ++i) {
    const auto g = random_portrait(1 + i % 8, rng);
    EXPECT_EQ(compose(g, inverse(g)), identity(g.depth()));
    EXPECT_EQ(compose(inverse(g), g), identity(g.depth()));
  }
}

TEST(Portrait, VertexImage) {
  const auto a0 = alpha(3, 0);
  // The root swap sends the leftmost level-2 vertex (path 00) to path 10.
  EXPECT_EQ(vertex_image(a0, Vertex{2, 1}), (Vertex{2, 3}));
  EXPECT_EQ(leaf_permutation(a0).image(1), 5U);
  EXPECT_EQ(vertex_image(identity(3), Vertex{2, 4}), (Vertex{2, 4}));
  EXPECT_EQ(vertex_image(tau(3), Vertex{1, 2}), (Vertex{1, 2}));
  EXPECT_THROW(vertex_image(a0, Vertex{3, 1}), std::out_of_range);
  EXPECT_THROW(vertex_image(a0, Vertex{1, 3}), std::out_of_range);
}

TEST(Portrait, VertexImageMatchesLeafOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_portrait(5, rng);
    const auto m = oracle::leaf_map(g);
    for (std::size_t level = 0; level < 5; ++level)
      for (std::size_t p = 1; p <= (std::size_t{1} << level); ++p) {
        const std::size_t leaf = (p - 1) << (5 - level);
        EXPECT_EQ(vertex_image(g, Vertex{level, p}).position, (m[leaf] >> (5 - level)) + 1);
      }
  }
}

TEST(Portrait, LeafPermutationExamples) {
  EXPECT_EQ(leaf_permutation(alpha(3, 0)), cycles("(1,5)(2,6)(3,7)(4,8)", 8));
  EXPECT_EQ(leaf_permutation(tau(3)), cycles("(1,2)(7,8)", 8));
  EXPECT_EQ(oracle::leaf_perm(tau(3)), cycles("(1,2)(7,8)", 8));
}

TEST(Portrait, LevelIndex) {
  for (std::size_t k = 2; k <= 6; ++k) EXPECT_EQ(level_index(tau(k), k - 1), 2U);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(level_index(alpha(4, i), l), i == l ? 1U : 0U);
  EXPECT_EQ(level_index(identity(3), 1), 0U);
  EXPECT_THROW(level_index(identity(3), 3), std::out_of_range);
}

TEST(Portrait, Section) {
  EXPECT_EQ(section(alpha(3, 0), Vertex{1, 1}), identity(2));
  EXPECT_EQ(format_portrait(section(tau(3), Vertex{1, 1})), "0/10");
  EXPECT_EQ(format_portrait(section(tau(3), Vertex{1, 2})), "0/01");
  std::mt19937_64 rng(5);
  const auto g = random_portrait(4, rng);
  EXPECT_EQ(section(g, Vertex{0, 1}), g);
  EXPECT_THROW(section(g, Vertex{4, 1}), std::out_of_range);
}

TEST(Portrait, SectionRuleHoldsOnLeaves) {
  // g(v x) = g(v) g_(v)(x) for level-1 vertices.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_portrait(4, rng);
    const auto m = oracle::leaf_map(g);
    for (std::size_t side = 0; side < 2; ++side) {
      const auto sub = oracle::leaf_map(section(g, Vertex{1, side + 1}));
      const std::size_t target = vertex_image(g, Vertex{1, side + 1}).position - 1;
      for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(m[side * 8 + x], target * 8 + sub[x]);
    }
  }
}

TEST(Portrait, Distance) {
  for (std::size_t k = 2; k <= 8; ++k) EXPECT_EQ(distance(tau(k)), 2 * (k - 1));
  EXPECT_EQ(distance(identity(4)), 0U);
  EXPECT_EQ(distance(P("0/11")), 2U);
  EXPECT_EQ(distance(alpha(5, 3)), 0U);
  EXPECT_EQ(distance(P("1/00/0001")), 2U);
}

TEST(Portrait, ParseAndFormat) {
  EXPECT_EQ(P("1/00"), alpha(2, 0));
  EXPECT_EQ(format_portrait(tau(3)), "0/00/1001");
  EXPECT_THROW(P("1/0"), std::invalid_argument);
  EXPECT_THROW(P(""), std::invalid_argument);
  EXPECT_THROW(P("1/0a"), std::invalid_argument);
  EXPECT_THROW(P("1//00"), std::invalid_argument);
  EXPECT_EQ(P("1").depth(), 1U);
}

TEST(Portrait, FormatParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (std::size_t i = 0; i < kRandomCases; ++i) {
    const auto g = random_portrait(1 + i % 8, rng);
    EXPECT_EQ(parse_portrait(format_portrait(g)), g);
  }
}

TEST(Portrait, RecoverFromLeafPermutation) {
  std::mt19937_64 rng(17);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto g = random_portrait(1 + i % 7, rng);
    EXPECT_EQ(portrait_from_leaf_permutation(leaf_permutation(g)), g);
  }
  EXPECT_THROW(portrait_from_leaf_permutation(cycles("(1,2,3)", 4)), std::invalid_argument);
  EXPECT_THROW(portrait_from_leaf_permutation(cycles("(1,2)", 6)), std::invalid_argument);
}

// Properties

TEST(PortraitProperty, Associativity) {
  std::mt19937_64 rng(21);
  for (std::size_t i = 0; i < kRandomCases; ++i) {
    const std::size_t k = 2 + i % 7;
    const auto a = random_portrait(k, rng), b = random_portrait(k, rng), c = random_portrait(k, rng);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(PortraitProperty, LeafActionIsAHomomorphism) {
  for (const auto& g : all_portraits(2))
    for (const auto& h : all_portraits(2))
      ASSERT_EQ(leaf_permutation(compose(g, h)), leaf_permutation(g) * leaf_permutation(h));
  std::mt19937_64 rng(23);
  for (std::size_t i = 0; i < kRandomCases; ++i) {
    const std::size_t k = 1 + i % 8;
    const auto g = random_portrait(k, rng), h = random_portrait(k, rng);
    ASSERT_EQ(leaf_permutation(compose(g, h)), leaf_permutation(g) * leaf_permutation(h));
  }
}

TEST(PortraitProperty, SignFollowsLastLevelIndex) {
  auto check = [](const Portrait& g) {
    const int expected = level_index(g, g.depth() - 1) % 2 == 0 ? 1 : -1;
    ASSERT_EQ(oracle::parity_by_inversions(oracle::leaf_perm(g)), expected) << format_portrait(g);
    ASSERT_EQ(sign(leaf_permutation(g)), expected) << format_portrait(g);
  };
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& g : all_portraits(k)) check(g);
  std::mt19937_64 rng(29);
  for (std::size_t i = 0; i < 200; ++i) check(random_portrait(8, rng));
}

TEST(PortraitProperty, SingleLabelCycleType) {
  // One active label at level l swaps two subtrees of 2^(k-l-1) leaves each.
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < (std::size_t{1} << l); ++j) {
        std::vector<std::uint8_t> bits((std::size_t{1} << k) - 1, 0);
        bits[(std::size_t{1} << l) - 1 + j] = 1;
        const auto g = Portrait::from_bits(k, bits);
        CycleType expected;
        const std::size_t fixed = (std::size_t{1} << k) - (std::size_t{1} << (k - l));
        if (fixed) expected[1] = fixed;
        expected[2] = std::size_t{1} << (k - l - 1);
        ASSERT_EQ(leaf_cycle_type(g), expected) << format_portrait(g);
      }
}

TEST(PortraitProperty, ConjugationByHigherLabelsKeepsDistance) {
  std::mt19937_64 rng(31);
  for (std::size_t i = 0; i < kRandomCases; ++i) {
    const std::size_t k = 2 + i % 5;
    const std::size_t level = 1 + rng() % (k - 1);
    std::vector<std::uint8_t> gbits((std::size_t{1} << k) - 1, 0), abits(gbits.size(), 0);
    for (std::size_t j = 0; j < (std::size_t{1} << level); ++j)
      gbits[(std::size_t{1} << level) - 1 + j] = rng() & 1U;
    for (std::size_t v = 0; v + 1 < (std::size_t{1} << level); ++v) abits[v] = rng() & 1U;
    const auto g = Portrait::from_bits(k, gbits);
    const auto a = Portrait::from_bits(k, abits);
    ASSERT_EQ(distance(compose(a, compose(g, inverse(a)))), distance(g))
        << format_portrait(g) << " by " << format_portrait(a);
  }
}
