#include "sylow/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "sylow/composite.hpp"
#include "sylow/derived.hpp"
#include "sylow/perm_group.hpp"
#include "sylow/portrait.hpp"

namespace sylow {

namespace {

constexpr std::size_t kEnumerationCap = std::size_t{1} << 16;

std::string pow2_text(long e) { return e < 0 ? "not a power of 2" : "2^" + std::to_string(e); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

class ClaimRunner {
 public:
  explicit ClaimRunner(nlohmann::json params) : params_(std::move(params)) {}

  void run(const std::string& id, const std::string& expected, const std::string& provenance,
           const std::function<std::string()>& compute) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string computed;
    try {
      computed = compute();
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    claims_.push_back(ClaimRecord{id, params_, expected, provenance, computed, expected == computed,
                                  std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  std::vector<ClaimRecord> take() {
    std::sort(claims_.begin(), claims_.end(),
              [](const ClaimRecord& a, const ClaimRecord& b) { return a.claim < b.claim; });
    return std::move(claims_);
  }

 private:
  nlohmann::json params_;
  std::vector<ClaimRecord> claims_;
};

BigInt two_part_of_factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  BigInt p = 1;
  while (f % 2 == 0) {
    f /= 2;
    p *= 2;
  }
  return p;
}

/// Elementwise comparison of a level-parity predicate with an oracle subgroup
/// inside an enumerable tree group.
std::string compare_derived_elementwise(const PermGroup& group, const PermGroup& derived, bool alternating) {
  const auto members = enumerate_elements(derived, kEnumerationCap);
  for (const auto& p : members) {
    const auto g = portrait_from_leaf_permutation(p);
    const bool ok = alternating ? in_derived_G(g) : in_derived_B(g);
    if (!ok) return "oracle element " + format_portrait(g) + " rejected by predicate";
  }
  std::size_t accepted = 0;
  for (const auto& p : enumerate_elements(group, kEnumerationCap)) {
    const auto g = portrait_from_leaf_permutation(p);
    if (alternating ? in_derived_G(g) : in_derived_B(g)) ++accepted;
  }
  if (accepted != members.size())
    return "predicate accepts " + std::to_string(accepted) + " elements, oracle has " +
           std::to_string(members.size());
  return "match";
}

}  // namespace

std::string to_string(SymmetricKind kind) { return kind == SymmetricKind::S ? "S" : "A"; }
std::string to_string(VerifyLevel level) { return level == VerifyLevel::Quick ? "quick" : "full"; }

VerificationReport verify_group(SymmetricKind kind, std::size_t n, VerifyLevel level) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > kOracleDegreeLimit)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the oracle limit of " +
                                std::to_string(kOracleDegreeLimit) + "; use order/rank/gens for formula output");

  const bool alternating = kind == SymmetricKind::A;
  VerificationReport report;
  report.kind = kind;
  report.n = n;
  report.level = level;
  report.decomposition = decompose(n).exponents;
  report.expected_order_log2 = alternating ? order_syl2_A_log2(n) : order_syl2_S_log2(n);
  report.expected_rank = alternating ? rank_syl2_A(n) : rank_syl2_S(n);

  const auto gens = alternating ? build_gens_A(n) : build_gens_S(n);
  const PermGroup group(n, gens);
  const long order_log2 = log2_exact(group.order());
  report.oracle_order_log2 = order_log2 < 0 ? 0 : static_cast<std::size_t>(order_log2);
  report.oracle_rank = order_log2 < 0 ? 0 : rank_of_2group(group);
  report.all_even = std::all_of(gens.begin(), gens.end(), [](const Permutation& g) { return sign(g) == 1; });
  for (std::size_t x = 1; x <= n; ++x)
    if (group.orbit(x).size() == 1) report.fixed_points.push_back(x);

  ClaimRunner runner({{"kind", to_string(kind)}, {"n", n}});

  runner.run("generators.count", std::to_string(report.expected_rank), "formula",
             [&] { return std::to_string(gens.size()); });
  runner.run("order.log2", pow2_text(static_cast<long>(report.expected_order_log2)), "formula",
             [&] { return pow2_text(order_log2); });
  runner.run("order.two_part_of_factorial", pow2_text(log2_exact(two_part_of_factorial(n) / (alternating ? 2 : 1))),
             "derived", [&] { return pow2_text(order_log2); });
  runner.run("rank.frattini", std::to_string(report.expected_rank), "formula",
             [&] { return std::to_string(report.oracle_rank); });
  runner.run("generators.minimal", "true", "oracle",
             [&] { return bool_text(gens.size() == report.oracle_rank); });
  if (alternating)
    runner.run("generators.even", "true", "oracle", [&] { return bool_text(report.all_even); });
  if (n % 2 == 1)
    runner.run("fixed_point", std::to_string(fixed_points_odd(n)), "oracle", [&] {
      std::string s;
      for (auto x : report.fixed_points) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    });

  if (level == VerifyLevel::Full) {
    if (group.order() <= kEnumerationCap)
      runner.run("order.enumeration", pow2_text(static_cast<long>(report.expected_order_log2)), "exhaustive",
                 [&] { return pow2_text(log2_exact(BigInt(enumerate_elements(group, kEnumerationCap).size()))); });

    const bool power_of_two = (n & (n - 1)) == 0;
    const std::size_t k = decompose(n).exponents.back();
    if (power_of_two && (!alternating || k >= 2)) {
      const auto derived = derived_subgroup(group);
      const auto phi = frattini_of_2group(group);
      const long top = static_cast<long>(report.expected_order_log2);
      runner.run("derived.order", pow2_text(top - static_cast<long>(k)), "formula",
                 [&] { return pow2_text(log2_exact(derived.order())); });
      runner.run("frattini.quotient", pow2_text(static_cast<long>(k)), "formula",
                 [&] { return pow2_text(log2_exact(group.order() / phi.order())); });
      runner.run("frattini.equals_derived", "true", "oracle",
                 [&] { return bool_text(phi.order() == derived.order()); });
      if (group.order() <= kEnumerationCap)
        runner.run("derived.predicate", "match", "exhaustive",
                   [&] { return compare_derived_elementwise(group, derived, alternating); });
    }
  }

  report.claims = runner.take();
  report.pass = std::all_of(report.claims.begin(), report.claims.end(), [](const ClaimRecord& c) { return c.pass; });
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : report.claims)
    claims.push_back({{"claim", c.claim},
                      {"params", c.params},
                      {"expected", c.expected},
                      {"provenance", c.provenance},
                      {"computed", c.computed},
                      {"pass", c.pass},
                      {"wall_ms", c.wall_ms}});
  return {{"kind", to_string(report.kind)},
          {"n", report.n},
          {"level", to_string(report.level)},
          {"decomposition", report.decomposition},
          {"expected_order_log2", report.expected_order_log2},
          {"oracle_order_log2", report.oracle_order_log2},
          {"expected_rank", report.expected_rank},
          {"oracle_rank", report.oracle_rank},
          {"all_even", report.all_even},
          {"fixed_points", report.fixed_points},
          {"pass", report.pass},
          {"claims", claims}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "S" && kind != "A") throw std::invalid_argument("report kind must be S or A");
  r.kind = kind == "S" ? SymmetricKind::S : SymmetricKind::A;
  const auto level = j.at("level").get<std::string>();
  if (level != "quick" && level != "full") throw std::invalid_argument("report level must be quick or full");
  r.level = level == "quick" ? VerifyLevel::Quick : VerifyLevel::Full;
  r.n = j.at("n").get<std::size_t>();
  r.decomposition = j.at("decomposition").get<std::vector<std::size_t>>();
  r.expected_order_log2 = j.at("expected_order_log2").get<std::size_t>();
  r.oracle_order_log2 = j.at("oracle_order_log2").get<std::size_t>();
  r.expected_rank = j.at("expected_rank").get<std::size_t>();
  r.oracle_rank = j.at("oracle_rank").get<std::size_t>();
  r.all_even = j.at("all_even").get<bool>();
  r.fixed_points = j.at("fixed_points").get<std::vector<std::size_t>>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& c : j.at("claims"))
    r.claims.push_back(ClaimRecord{c.at("claim").get<std::string>(), c.at("params"),
                                   c.at("expected").get<std::string>(), c.at("provenance").get<std::string>(),
                                   c.at("computed").get<std::string>(), c.at("pass").get<bool>(),
                                   c.at("wall_ms").get<double>()});
  return r;
}

std::vector<std::string> replay_report(const VerificationReport& stored) {
  const auto fresh = verify_group(stored.kind, stored.n, stored.level);
  std::vector<std::string> differing;
  std::set<std::string> seen;
  for (const auto& c : stored.claims) {
    seen.insert(c.claim);
    auto it = std::find_if(fresh.claims.begin(), fresh.claims.end(),
                           [&](const ClaimRecord& f) { return f.claim == c.claim; });
    if (it == fresh.claims.end() || it->computed != c.computed || it->expected != c.expected)
      differing.push_back(c.claim);
  }
  for (const auto& f : fresh.claims)
    if (!seen.count(f.claim)) differing.push_back(f.claim);
  return differing;
}

}  // namespace sylow
