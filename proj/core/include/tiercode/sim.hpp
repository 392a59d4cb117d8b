#pragma once

// Seeded random-linear-network-coding simulator over a DAG, comparing
// tier-2-only decoding, two-tier decoding, and two-tier decoding with
// tier-1 filtering at intermediate nodes.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiercode/codes.hpp"
#include "tiercode/decoders.hpp"
#include "tiercode/union_code.hpp"

namespace tiercode::sim {

enum class Role { source, intermediate, sink };

struct Node {
  std::string id;
  Role role = Role::intermediate;
};

struct Edge {
  std::string from;
  std::string to;
  std::size_t capacity = 1;  // packets per trial
};

/// A validated DAG with exactly one source.
class Topology {
 public:
  Topology(std::vector<Node> nodes, std::vector<Edge> edges);

  /// s -> a, s -> b, a -> t, b -> t.
  static Topology diamond(std::size_t capacity = 1);

  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<std::size_t>& order() const noexcept { return order_; }
  [[nodiscard]] std::size_t source() const noexcept { return source_; }
  [[nodiscard]] std::vector<std::size_t> sinks() const;
  [[nodiscard]] std::size_t index_of(const std::string& id) const;
  [[nodiscard]] std::vector<std::size_t> in_edges(std::size_t node) const;
  [[nodiscard]] std::vector<std::size_t> out_edges(std::size_t node) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> order_;  // topological
  std::size_t source_ = 0;
};

struct ErrorModel {
  double bit_flip_prob = 0.0;
  std::optional<std::size_t> fixed_flips;
  double corrupt_packet_prob = 1.0;
  std::size_t injected_packets = 0;
  std::string injection_node;

  void validate(std::size_t packet_len) const;
  [[nodiscard]] bool error_free() const noexcept;
};

enum class Strategy { tier2_only, two_tier, two_tier_node_filter };
inline constexpr std::array<Strategy, 3> kAllStrategies{Strategy::tier2_only, Strategy::two_tier,
                                                        Strategy::two_tier_node_filter};
[[nodiscard]] const char* to_string(Strategy s);

struct SimConfig {
  ErrorModel errors;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  TwoTierConfig decoder;
  /// Tier-1 behavior at intermediate nodes under two_tier_node_filter.
  Tier1Mode node_filter_mode = Tier1Mode::detect_only;
  /// Re-draw a trial whose sinks lost rank (logged in the report).
  bool retry_rank_deficient = false;
  std::size_t max_attempts = 64;
};

struct VerdictCounts {
  std::size_t valid = 0, corrected = 0, erased = 0, rejected = 0;
  void add(const PacketVerdict& v);
  VerdictCounts& operator+=(const VerdictCounts& o);
  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

struct SinkOutcome {
  std::string sink;
  bool success = false;
  bool rank_deficient = false;  // sink span lost part of the sent subspace
  std::size_t received = 0;     // packets arriving at the sink
  std::optional<std::size_t> chosen;
  std::size_t metric_value = 0;
  VerdictCounts verdicts;
  friend bool operator==(const SinkOutcome&, const SinkOutcome&) = default;
};

/// Per-node packet accounting for one trial.
struct NodeAudit {
  std::size_t arrived = 0;   // edge deliveries plus injected packets
  std::size_t injected = 0;
  std::size_t filtered = 0;  // dropped by intermediate tier-1
  std::size_t forwarded = 0; // packets entering mixing
  friend bool operator==(const NodeAudit&, const NodeAudit&) = default;
};

struct TrialOutcome {
  std::size_t message_index = 0;
  std::vector<SinkOutcome> sinks;
  std::vector<NodeAudit> nodes;  // indexed like Topology::nodes()
  [[nodiscard]] bool success() const;
  [[nodiscard]] bool rank_deficient() const;
  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

/// Everything a trial needs besides the per-trial seed.
struct Scenario {
  const Topology* topology = nullptr;
  const Codebook* book = nullptr;
  const UnionCode* union_code = nullptr;
  SimConfig config;
};

/// Seed of the named random stream for (trial, attempt, key, purpose).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t attempt,
                                        std::uint64_t key, std::uint64_t purpose);

/// Runs one realization. All draws come from streams derived from
/// (base seed, trial, attempt); the strategy changes no draw.
[[nodiscard]] TrialOutcome run_trial(const Scenario& sc, std::size_t message_index, Strategy strategy,
                                     std::uint64_t trial, std::uint64_t attempt = 0);

struct StrategyStats {
  Strategy strategy = Strategy::tier2_only;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t rank_deficient = 0;
  VerdictCounts verdicts;
  double mean_metric = 0.0;
  std::size_t filtered_drops = 0;
  std::size_t sink_packets = 0;
};

struct SimReport {
  std::vector<StrategyStats> strategies;
  /// Trials where two-tier succeeded and tier-2-only failed, and vice versa.
  std::size_t two_tier_only_wins = 0;
  std::size_t tier2_only_wins = 0;
  std::size_t retried_trials = 0;
  std::size_t retry_attempts = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  [[nodiscard]] const StrategyStats& stats(Strategy s) const;
};

/// Paired experiment: every strategy sees the same message, mixing and
/// channel draws in each trial. Throws SpecError for Gabidulin codebooks
/// and std::invalid_argument for zero trials.
[[nodiscard]] SimReport run_experiment(const Scenario& sc);

}  // namespace tiercode::sim
