#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "report.hpp"

int main(int argc, char** argv) {
  using namespace tiercode::cli;
  CLI::App app{"Two-tier decoding and union-code analysis for network codes"};
  app.set_version_flag("--version", std::string("tiercode ") + tool_version());
  app.require_subcommand(1);

  CommandOptions opt;
  std::string format = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", opt.config_path, "Run configuration (JSON)")->required();
    sub->add_option("--seed", opt.seed, "Override sim.seed");
    sub->add_option("-o,--out", opt.out, "Write the report here instead of stdout");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* verify = app.add_subcommand("verify-lemmas", "Check the distance and cardinality properties of the union code");
  common(verify);
  verify->add_option("--union-out", opt.union_out, "Also dump the union code as CSV");

  auto* encode = app.add_subcommand("encode", "Encode messages into packet bases");
  common(encode);
  encode->add_option("-m,--message", opt.message, "Comma-separated message symbols (g^k or digit strings)");
  encode->add_option("-i,--index", opt.message_index, "Message by lexicographic index");
  encode->add_flag("--all", opt.all_codewords, "Export the whole codebook");
  encode->add_option("--rows-out", opt.rows_out, "Write the packets one per line (decode input format)");

  auto* decode = app.add_subcommand("decode", "Two-tier decode a packet file");
  common(decode);
  decode->add_option("-p,--packets", opt.packets_path, "One packet per line as base-p digits")->required();

  auto* simulate = app.add_subcommand("simulate", "Paired network-coding experiment");
  common(simulate);
  simulate->add_option("--trials", opt.trials, "Override sim.trials");

  auto* analyze = app.add_subcommand("analyze-distances", "Component and union Hamming distances");
  common(analyze);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }
  opt.format = format == "csv" ? Format::csv : Format::json;
  for (auto* sub : app.get_subcommands()) return run_command(sub->get_name(), opt, std::cout, std::cerr);
  return kExitConfig;
}
