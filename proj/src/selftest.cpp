#include "sylow/selftest.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "sylow/composite.hpp"
#include "sylow/derived.hpp"
#include "sylow/perm_group.hpp"
#include "sylow/sylow2.hpp"

namespace sylow {

Portrait faulty_compose(const Portrait& g, const Portrait& h) {
  if (g.depth() != h.depth()) throw std::invalid_argument("portrait depth mismatch");
  std::vector<std::uint8_t> bits(g.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = g.bits()[i] ^ h.bits()[i];
  return Portrait::from_bits(g.depth(), std::move(bits));
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  /// Records one case; keeps the first failure message.
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }
  bool failed() const { return !result_.passed; }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string fmt(const Portrait& g) { return format_portrait(g); }

struct Context {
  ComposeFn mul;
  std::mt19937_64 rng;
  std::size_t random_cases;

  std::size_t random_depth(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  Portrait random(std::size_t depth) { return random_portrait(depth, rng); }
};

SuiteResult homomorphism(Context& ctx) {
  Suite s("portrait.homomorphism");
  auto check = [&](const Portrait& g, const Portrait& h) {
    s.expect(leaf_permutation(ctx.mul(g, h)) == leaf_permutation(g) * leaf_permutation(h),
             [&] { return "leaf action of " + fmt(g) + " * " + fmt(h) + " is not the composite"; });
  };
  for (const auto& g : all_portraits(2))
    for (const auto& h : all_portraits(2)) check(g, h);
  for (std::size_t i = 0; i < ctx.random_cases && !s.failed(); ++i) {
    const auto k = ctx.random_depth(1, 8);
    check(ctx.random(k), ctx.random(k));
  }
  return s.done();
}

SuiteResult associativity(Context& ctx) {
  Suite s("portrait.associativity");
  for (std::size_t i = 0; i < ctx.random_cases && !s.failed(); ++i) {
    const auto k = ctx.random_depth(2, 8);
    const auto a = ctx.random(k), b = ctx.random(k), c = ctx.random(k);
    s.expect(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)),
             [&] { return "(ab)c != a(bc) for " + fmt(a) + ", " + fmt(b) + ", " + fmt(c); });
  }
  return s.done();
}

SuiteResult inverse_law(Context& ctx) {
  Suite s("portrait.inverse");
  for (std::size_t i = 0; i < ctx.random_cases && !s.failed(); ++i) {
    const auto g = ctx.random(ctx.random_depth(1, 8));
    const auto id = Portrait::identity(g.depth());
    s.expect(ctx.mul(g, inverse(g)) == id && ctx.mul(inverse(g), g) == id,
             [&] { return "inverse fails for " + fmt(g); });
  }
  return s.done();
}

SuiteResult sign_law(Context& ctx) {
  Suite s("portrait.sign_law");
  auto check = [&](const Portrait& g) {
    const int expected = level_index(g, g.depth() - 1) % 2 == 0 ? 1 : -1;
    s.expect(sign(leaf_permutation(g)) == expected, [&] { return "sign mismatch for " + fmt(g); });
  };
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& g : all_portraits(k)) check(g);
  for (std::size_t i = 0; i < ctx.random_cases; ++i) check(ctx.random(8));
  return s.done();
}

SuiteResult single_label_cycle_type(Context&) {
  Suite s("portrait.single_label_cycle_type");
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < (std::size_t{1} << l); ++j) {
        std::vector<std::uint8_t> bits((std::size_t{1} << k) - 1, 0);
        bits[(std::size_t{1} << l) - 1 + j] = 1;
        const auto g = Portrait::from_bits(k, std::move(bits));
        CycleType expected;
        const std::size_t moved = std::size_t{1} << (k - l);
        if ((std::size_t{1} << k) > moved) expected[1] = (std::size_t{1} << k) - moved;
        expected[2] = moved / 2;
        s.expect(leaf_cycle_type(g) == expected, [&] { return "cycle type mismatch for " + fmt(g); });
      }
  return s.done();
}

SuiteResult in_G_agreement(Context& ctx) {
  Suite s("sylow2.in_G_flat_vs_recursive");
  auto check = [&](const Portrait& g) {
    s.expect(in_G(g) == in_G_recursive(g), [&] { return "in_G disagreement for " + fmt(g); });
  };
  for (const auto& g : all_portraits(3)) check(g);
  for (std::size_t i = 0; i < ctx.random_cases; ++i) check(ctx.random(ctx.random_depth(2, 8)));
  return s.done();
}

SuiteResult in_G_is_even(Context&) {
  Suite s("sylow2.in_G_iff_even");
  for (std::size_t k = 2; k <= 3; ++k)
    for (const auto& g : all_portraits(k))
      s.expect(in_G(g) == (sign(leaf_permutation(g)) == 1), [&] { return "parity mismatch for " + fmt(g); });
  return s.done();
}

SuiteResult G_is_even_part(Context&) {
  Suite s("sylow2.generated_G_equals_even_B");
  const auto group = portrait_group(gen_set_G(3));
  std::set<Portrait> generated;
  for (const auto& p : enumerate_elements(group, 1024)) generated.insert(portrait_from_leaf_permutation(p));
  std::set<Portrait> even;
  for (const auto& g : all_portraits(3))
    if (in_G(g)) even.insert(g);
  s.expect(generated == even, [&] {
    return "generated " + std::to_string(generated.size()) + " elements, predicate " + std::to_string(even.size());
  });
  return s.done();
}

SuiteResult tau_reachability(Context&) {
  Suite s("sylow2.tau_pairs_reachable");
  for (std::size_t k = 3; k <= 4; ++k) {
    const auto group = portrait_group(gen_set_G(k));
    const std::size_t width = std::size_t{1} << (k - 1);
    for (std::size_t i = 1; i <= width; ++i)
      for (std::size_t j = i + 1; j <= width; ++j) {
        const auto t = tau_at(k, {i, j});
        s.expect(group.contains(leaf_permutation(t)), [&] { return "tau_at missing: " + fmt(t); });
      }
  }
  return s.done();
}

SuiteResult non_closure(Context& ctx) {
  Suite s("sylow2.type_T_C_not_closed");
  std::vector<Portrait> types_t, types_c;
  for (const auto& g : all_portraits(3)) {
    if (is_type_T(g)) types_t.push_back(g);
    if (is_type_C(g)) types_c.push_back(g);
  }
  for (const auto& a : types_t)
    for (const auto& b : types_t) {
      const auto p = ctx.mul(a, b);
      s.expect(!is_type_C(p), [&] { return fmt(a) + " * " + fmt(b) + " is of type C"; });
    }
  for (const auto& c : types_c) {
    const auto p = ctx.mul(c, c);
    s.expect(!is_type_C(p), [&] { return "square of " + fmt(c) + " is of type C"; });
  }
  return s.done();
}

SuiteResult abelianization_homomorphism(Context& ctx) {
  Suite s("derived.abelianization_homomorphism");
  auto check = [&](const Portrait& g, const Portrait& h) {
    const auto gh = ctx.mul(g, h);
    s.expect(abelianization_B(gh) == (abelianization_B(g) ^ abelianization_B(h)),
             [&] { return "B-abelianization not additive on " + fmt(g) + ", " + fmt(h); });
    if (g.depth() >= 2 && in_G(g) && in_G(h))
      s.expect(in_G(gh) && abelianization_G(gh) == (abelianization_G(g) ^ abelianization_G(h)),
               [&] { return "G-abelianization not additive on " + fmt(g) + ", " + fmt(h); });
  };
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto all = all_portraits(k);
    for (const auto& g : all)
      for (const auto& h : all) check(g, h);
  }
  for (std::size_t i = 0; i < ctx.random_cases; ++i) {
    const auto k = ctx.random_depth(2, 8);
    check(ctx.random(k), ctx.random(k));
  }
  return s.done();
}

SuiteResult derived_oracle(Context&) {
  Suite s("derived.predicates_match_oracle");
  for (std::size_t k = 2; k <= 3; ++k) {
    for (bool alternating : {false, true}) {
      const auto group = portrait_group(alternating ? gen_set_G(k) : gen_set_B(k));
      std::set<Portrait> oracle;
      for (const auto& p : enumerate_elements(derived_subgroup(group), 1024))
        oracle.insert(portrait_from_leaf_permutation(p));
      std::set<Portrait> predicate;
      for (const auto& g : all_portraits(k)) {
        const bool member = alternating ? (in_G(g) && in_derived_G(g)) : in_derived_B(g);
        if (member) predicate.insert(g);
      }
      s.expect(oracle == predicate, [&] {
        return std::string(alternating ? "G" : "B") + std::to_string(k) + ": oracle " +
               std::to_string(oracle.size()) + " vs predicate " + std::to_string(predicate.size());
      });
    }
  }
  return s.done();
}

SuiteResult squares(Context& ctx) {
  Suite s("derived.squares_in_derived");
  auto check = [&](const Portrait& g) {
    const auto sq = ctx.mul(g, g);
    s.expect(in_derived_B(sq), [&] { return "square of " + fmt(g) + " not in B'"; });
    if (g.depth() >= 2 && in_G(g))
      s.expect(in_G(sq) && in_derived_G(sq), [&] { return "square of " + fmt(g) + " not in G'"; });
  };
  for (const auto& g : all_portraits(3)) check(g);
  for (std::size_t i = 0; i < ctx.random_cases; ++i) check(ctx.random(6));
  return s.done();
}

SuiteResult composite_orders(Context&) {
  Suite s("composite.orders_and_ranks");
  for (std::size_t n = 4; n <= 32; ++n) {
    const PermGroup a(n, build_gens_A(n));
    s.expect(a.order() == order_syl2_A(n), [&] { return "order of Syl2(A_" + std::to_string(n) + ")"; });
    const PermGroup sym(n, build_gens_S(n));
    s.expect(sym.order() == order_syl2_S(n), [&] { return "order of Syl2(S_" + std::to_string(n) + ")"; });
  }
  for (std::size_t n : {6, 8, 12, 14, 16}) {
    const PermGroup a(n, build_gens_A(n));
    s.expect(rank_of_2group(a) == rank_syl2_A(n), [&] { return "rank of Syl2(A_" + std::to_string(n) + ")"; });
  }
  return s.done();
}

SuiteResult iso_check(Context&) {
  Suite s("composite.iso_4k2_homomorphism");
  const PermGroup syl(4, build_gens_S(4));
  const auto elements = enumerate_elements(syl, 64);
  std::set<Permutation> images;
  for (const auto& a : elements) {
    images.insert(iso_4k2(a));
    for (const auto& b : elements)
      s.expect(iso_4k2(a * b) == iso_4k2(a) * iso_4k2(b),
               [&] { return "phi not multiplicative on " + format_cycles(a) + ", " + format_cycles(b); });
  }
  s.expect(images.size() == elements.size(), [] { return "phi not injective"; });
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  Context ctx{options.compose ? options.compose : ComposeFn([](const Portrait& g, const Portrait& h) {
                return compose(g, h);
              }),
              std::mt19937_64(options.seed), options.random_cases};
  using SuiteFn = SuiteResult (*)(Context&);
  const SuiteFn suites[] = {homomorphism,     associativity,       inverse_law,    sign_law,
                            single_label_cycle_type, in_G_agreement, in_G_is_even, G_is_even_part,
                            tau_reachability, non_closure,         abelianization_homomorphism,
                            derived_oracle,   squares,             composite_orders, iso_check};
  std::vector<SuiteResult> results;
  for (auto suite : suites) results.push_back(suite(ctx));
  return results;
}

}  // namespace sylow
