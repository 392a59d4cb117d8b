#pragma once

// Tier-1 (packet-level Hamming) and tier-2 (codeword-level subspace / rank)
// decoding, and the combined two-tier pipeline.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tiercode/codes.hpp"
#include "tiercode/metrics.hpp"
#include "tiercode/union_code.hpp"

namespace tiercode {

enum class Tier1Mode { detect_only, correct, correct_or_erase };
enum class Outcome { valid, corrected, erased, rejected };
enum class SubspaceMetric { injection, subspace };

[[nodiscard]] const char* to_string(Tier1Mode m);
[[nodiscard]] const char* to_string(Outcome o);
[[nodiscard]] const char* to_string(SubspaceMetric m);

struct PacketVerdict {
  Outcome outcome = Outcome::rejected;
  std::optional<BaseVector> vector;  // absent for erased / rejected
  std::size_t flips = 0;
  std::size_t candidates = 0;  // equally near union vectors when erased
};

struct Tier1Options {
  /// Lets `correct` modes use a radius above floor((d - 1) / 2).
  bool allow_radius_override = false;
};

/// Decodes one packet against the union. Throws std::invalid_argument on a
/// length mismatch and SpecError when the radius exceeds the guaranteed
/// correction radius without an override.
[[nodiscard]] PacketVerdict tier1_decode(const BaseVector& packet, const UnionCode& u, std::size_t radius,
                                         Tier1Mode mode, const Tier1Options& options = {});

struct DecodeResult {
  std::optional<std::size_t> chosen;  // codeword index; nullopt = failure
  std::size_t metric_value = 0;
  bool tie = false;
  std::vector<std::size_t> ties;  // all minimizers, ascending
  std::optional<std::vector<std::size_t>> list;

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// Minimum-distance decoding of the row space of `packets` over a KK / MV
/// codebook. Ties go to the lowest index.
[[nodiscard]] DecodeResult tier2_subspace_decode(const BaseMatrix& packets, const Codebook& book,
                                                 SubspaceMetric metric = SubspaceMetric::injection);

/// Nearest Gabidulin codeword in rank distance. Positions flagged in
/// `erased` are left out of the comparison.
[[nodiscard]] DecodeResult tier2_rank_decode(std::span<const FieldElement> word, const Codebook& book,
                                             const std::vector<bool>& erased = {});

/// Every codeword within `radius` of the received row space, ordered by
/// distance then index.
[[nodiscard]] DecodeResult tier2_list_decode(const BaseMatrix& packets, const Codebook& book, std::size_t radius,
                                             SubspaceMetric metric = SubspaceMetric::injection);

struct TwoTierConfig {
  bool tier1_enabled = true;
  Tier1Mode mode = Tier1Mode::correct;
  /// nullopt: use the union's guaranteed correction radius.
  std::optional<std::size_t> radius;
  Tier1Options tier1;
  SubspaceMetric metric = SubspaceMetric::injection;
  bool feedback = false;
  std::size_t list_radius = 1;
};

struct FeedbackAudit {
  std::vector<std::size_t> list;
  std::size_t restricted_min_distance = 0;
  std::size_t restricted_radius = 0;
  std::vector<PacketVerdict> verdicts;
  DecodeResult first_pass;
};

struct TwoTierResult {
  DecodeResult result;
  std::vector<PacketVerdict> verdicts;
  std::size_t radius = 0;
  std::size_t kept = 0;
  std::size_t erased = 0;
  std::size_t rejected = 0;
  std::optional<FeedbackAudit> feedback;
};

/// Tier-1 on every packet, then tier-2 on the surviving packets; with
/// feedback, the tier-2 list restricts the union and both tiers run again.
/// For Gabidulin codebooks the packets are the n symbol rows in order.
[[nodiscard]] TwoTierResult two_tier_decode(const BaseMatrix& packets, const UnionCode& u, const Codebook& book,
                                            const TwoTierConfig& config = {});

}  // namespace tiercode
