#pragma once

// JSON and CSV renderings of lemma reports, distance tables, decode results
// and simulation reports.

#include <string>
#include <vector>

#include "config.hpp"

namespace tiercode::cli {

[[nodiscard]] const char* tool_version();

[[nodiscard]] std::string digits(const BaseVector& v);
[[nodiscard]] std::string format_message(const FieldContext& field, const std::vector<FieldElement>& u);

/// Wraps a command body with the tool name, version, command and config echo.
[[nodiscard]] nlohmann::json envelope(const std::string& command, const RunConfig& rc, nlohmann::json body);

[[nodiscard]] nlohmann::json distances_json(const Codebook& book, const UnionCode& u);
[[nodiscard]] std::string distances_csv(const Codebook& book, const UnionCode& u);

[[nodiscard]] nlohmann::json lemma_json(const LemmaReport& r);
[[nodiscard]] std::string lemma_csv(const LemmaReport& r);
/// One line per union vector: packet digits and the containing components.
[[nodiscard]] std::string union_csv(const UnionCode& u);

[[nodiscard]] nlohmann::json codeword_json(const Codebook& book, std::size_t index);
[[nodiscard]] std::string codewords_csv(const Codebook& book, const std::vector<std::size_t>& indices);

[[nodiscard]] nlohmann::json decode_json(const Codebook& book, const BaseMatrix& packets, const TwoTierResult& r);
[[nodiscard]] std::string decode_csv(const BaseMatrix& packets, const TwoTierResult& r);

[[nodiscard]] nlohmann::json sim_json(const sim::SimReport& r);
[[nodiscard]] std::string sim_csv(const sim::SimReport& r);

}  // namespace tiercode::cli
