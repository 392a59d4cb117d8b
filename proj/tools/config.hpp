#pragma once

// Run configuration: one JSON file with field, code, decoder, topology,
// error-model and simulation sections.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "tiercode/codes.hpp"
#include "tiercode/decoders.hpp"
#include "tiercode/lemmas.hpp"
#include "tiercode/sim.hpp"
#include "tiercode/union_code.hpp"

namespace tiercode::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public SpecError {
 public:
  using SpecError::SpecError;
};

struct RunConfig {
  std::string name;
  FieldPtr field;
  CodeSpec spec;
  LemmaOptions lemma;
  std::uint64_t message_budget = kDefaultMessageBudget;
  std::uint64_t union_budget = kDefaultUnionBudget;
  TwoTierConfig decoder;
  std::optional<sim::Topology> topology;
  sim::SimConfig sim;
  /// The parsed file, echoed into every report.
  nlohmann::json echo;
};

[[nodiscard]] RunConfig parse_config(const nlohmann::json& doc);
[[nodiscard]] RunConfig parse_config_text(const std::string& text);
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Comma-separated field elements ("g^3,g^4" or digit strings). A single
/// digit stands for the corresponding prime-field constant.
[[nodiscard]] std::vector<FieldElement> parse_elements(const FieldContext& field, const std::string& text);

[[nodiscard]] Tier1Mode parse_tier1_mode(const std::string& s);
[[nodiscard]] SubspaceMetric parse_metric(const std::string& s);

}  // namespace tiercode::cli
