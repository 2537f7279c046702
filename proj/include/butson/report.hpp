#pragma once

#include <string>
#include <vector>

namespace butson {

enum class ClaimStatus { confirmed, refuted, discrepancy_documented };

std::string to_string(ClaimStatus status);

struct ClaimRecord {
  std::string id;
  std::string claim;
  /// What was computed, in one line.
  std::string result;
  ClaimStatus status = ClaimStatus::confirmed;
  /// The computed value that contradicts the claim; empty when confirmed.
  std::string counter_value;
};

/// Evaluates claims C1..C11 plus the supplementary audit rows S1 (standard
/// forms from dephasing) and S2 (the printed second symmetric form).
std::vector<ClaimRecord> evaluate_claims();

std::string render_markdown(const std::vector<ClaimRecord>& claims);
/// Deterministic JSON: fixed key order and float formatting.
std::string render_json(const std::vector<ClaimRecord>& claims);

bool any_refuted(const std::vector<ClaimRecord>& claims);

}  // namespace butson
