#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sylow/portrait.hpp"

namespace sylow {

using ComposeFn = std::function<Portrait(const Portrait&, const Portrait&)>;

inline constexpr std::uint64_t kDefaultSeed = 20240101;

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;  // first counterexample, empty on success
};

struct SelftestOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_cases = 2000;
  /// Replaces the portrait product used by the suites; lets callers confirm
  /// that a broken label rule is caught.
  ComposeFn compose;
};

/// Exhaustive k <= 3 suites and randomized k <= 8 property suites over the
/// portrait, sylow2, derived and composite modules, in a fixed order.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

/// A deliberately wrong product (labels xor-ed without moving them), for
/// falsifiability checks.
Portrait faulty_compose(const Portrait& g, const Portrait& h);

}  // namespace sylow
