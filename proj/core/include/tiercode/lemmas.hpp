#pragma once

// Executable checks of the Hamming-distance and cardinality properties of
// union codes built from Gabidulin, KK and MV codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiercode/codes.hpp"
#include "tiercode/union_code.hpp"

namespace tiercode {

enum class Relation { equal, at_most, less_than };

struct LemmaCheck {
  std::string id;     // e.g. "kk.union_count"
  std::string claim;  // human-readable statement
  Relation relation = Relation::equal;
  std::uint64_t bound = 0;
  std::uint64_t measured = 0;
  bool pass = false;
  /// Informational checks are reported but do not fail a run.
  bool informational = false;
  std::string note;
};

struct LemmaReport {
  CodeKind kind = CodeKind::gabidulin;
  std::optional<MvLayout> layout;
  std::vector<LemmaCheck> checks;

  /// True when every non-informational check passed.
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] const LemmaCheck* find(const std::string& id) const;
};

struct LemmaOptions {
  /// The alphas were taken from a Reed-Solomon generator matrix; the
  /// C_0 distance must then meet its upper bound with equality.
  bool rs_construction = false;
  /// Above this codebook size the MRD check uses min rank weight (the code is
  /// linear over the extension field) instead of all pairs.
  std::size_t mrd_pairwise_limit = 4096;
};

[[nodiscard]] LemmaReport verify_lemmas(const Codebook& book, const UnionCode& u,
                                        const LemmaOptions& options = {});

/// Exhaustive minimum rank distance over all pairs of distinct codewords.
[[nodiscard]] std::size_t min_rank_distance(const Codebook& book);

}  // namespace tiercode
