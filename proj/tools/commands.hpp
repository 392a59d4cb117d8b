#pragma once

// Subcommands of the tiercode tool. Each returns a process exit code:
// 0 success, 1 lemma-check failure, 2 config or usage error, 3 budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tiercode::cli {

enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitLemmaFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;

struct CommandOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;  // empty: write to the output stream
  Format format = Format::json;

  // verify-lemmas
  std::string union_out;
  // encode
  std::optional<std::string> message;
  std::optional<std::uint64_t> message_index;
  bool all_codewords = false;
  std::string rows_out;
  // decode
  std::string packets_path;
  // simulate
  std::optional<std::size_t> trials;
};

int cmd_verify_lemmas(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_encode(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_decode(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_analyze_distances(const CommandOptions& opt, std::ostream& out, std::ostream& err);

/// Dispatches by command name; unknown names are usage errors.
int run_command(const std::string& name, const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace tiercode::cli
