#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace sylow {

enum class SymmetricKind { S, A };
enum class VerifyLevel { Quick, Full };

/// Largest degree accepted by oracle-backed commands.
inline constexpr std::size_t kOracleDegreeLimit = 32;

/// One checked claim. pass is true exactly when expected == computed.
struct ClaimRecord {
  std::string claim;
  nlohmann::json params;
  std::string expected;
  std::string provenance;  // "formula", "derived", "oracle", ...
  std::string computed;
  bool pass = false;
  double wall_ms = 0.0;
};

/// Verification of the Sylow 2-subgroup of S_n or A_n built by this library.
struct VerificationReport {
  SymmetricKind kind = SymmetricKind::A;
  std::size_t n = 0;
  VerifyLevel level = VerifyLevel::Quick;
  std::vector<std::size_t> decomposition;
  std::size_t expected_order_log2 = 0;
  std::size_t oracle_order_log2 = 0;
  std::size_t expected_rank = 0;
  std::size_t oracle_rank = 0;
  bool all_even = false;
  std::vector<std::size_t> fixed_points;
  bool pass = false;
  std::vector<ClaimRecord> claims;  // sorted by claim id
};

/// Runs every claim for (kind, n). Throws std::invalid_argument for n < 2 or
/// n above kOracleDegreeLimit.
VerificationReport verify_group(SymmetricKind kind, std::size_t n, VerifyLevel level);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// Re-runs the claims of a stored report and compares computed values
/// (timings excluded). Returns the ids of claims whose values differ.
std::vector<std::string> replay_report(const VerificationReport& stored);

std::string to_string(SymmetricKind kind);
std::string to_string(VerifyLevel level);

}  // namespace sylow
