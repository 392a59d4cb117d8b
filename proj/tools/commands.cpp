#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "config.hpp"
#include "report.hpp"

namespace tiercode::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

void emit(const CommandOptions& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty())
    out << text;
  else
    write_text(opt.out, text);
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

RunConfig load(const CommandOptions& opt) {
  if (opt.config_path.empty()) throw UsageError("--config is required");
  auto rc = load_config(opt.config_path);
  if (opt.seed) rc.sim.seed = *opt.seed;
  if (opt.trials) {
    if (*opt.trials == 0) throw UsageError("--trials must be at least 1");
    rc.sim.trials = *opt.trials;
  }
  return rc;
}

struct Built {
  Codebook book;
  UnionCode u;
};

Built build(const RunConfig& rc) {
  Built b{build_codebook(rc.spec, rc.message_budget), {}};
  b.u = build_union(b.book, rc.union_budget);
  return b;
}

BaseMatrix read_packets(const std::string& path, std::size_t len, unsigned p) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read packet file '" + path + "'");
  BaseMatrix packets;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::erase_if(line, [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; });
    if (line.empty()) continue;
    if (line.size() != len)
      throw UsageError("packet '" + line + "' has " + std::to_string(line.size()) + " digits, expected " +
                       std::to_string(len));
    BaseVector v;
    for (char c : line) {
      if (c < '0' || c > '9' || static_cast<unsigned>(c - '0') >= p)
        throw UsageError("bad digit in packet '" + line + "'");
      v.push_back(static_cast<Digit>(c - '0'));
    }
    packets.push_back(std::move(v));
  }
  if (packets.empty()) throw UsageError("packet file '" + path + "' holds no packets");
  return packets;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace

int cmd_verify_lemmas(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto rc = load(opt);
        const auto b = build(rc);
        const auto rep = verify_lemmas(b.book, b.u, rc.lemma);
        if (!opt.union_out.empty()) write_text(opt.union_out, union_csv(b.u));
        if (opt.format == Format::csv) {
          emit(opt, out, lemma_csv(rep));
        } else {
          auto body = lemma_json(rep);
          body["code"] = distances_json(b.book, b.u);
          emit(opt, out, render(envelope("verify-lemmas", rc, std::move(body))));
        }
        for (const auto& c : rep.checks)
          if (!c.pass && !c.informational) err << "check " << c.id << " failed: " << c.claim << '\n';
        return rep.all_pass() ? kExitOk : kExitLemmaFailure;
      },
      err);
}

int cmd_encode(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto rc = load(opt);
        const auto book = build_codebook(rc.spec, rc.message_budget);
        std::vector<std::size_t> indices;
        if (opt.all_codewords) {
          if (opt.message || opt.message_index) throw UsageError("--all excludes --message and --index");
          for (std::size_t i = 0; i < book.words.size(); ++i) indices.push_back(i);
        } else if (opt.message) {
          if (opt.message_index) throw UsageError("--message excludes --index");
          const auto u = parse_elements(*rc.field, *opt.message);
          indices.push_back(message_index(rc.spec, u));
        } else if (opt.message_index) {
          if (*opt.message_index >= book.words.size()) throw UsageError("--index outside the codebook");
          indices.push_back(*opt.message_index);
        } else {
          throw UsageError("encode needs --message, --index or --all");
        }
        if (!opt.rows_out.empty()) {
          std::string rows;
          for (auto i : indices)
            for (const auto& r : book.words[i].generator) rows += digits(r) + "\n";
          write_text(opt.rows_out, rows);
        }
        if (opt.format == Format::csv) {
          emit(opt, out, codewords_csv(book, indices));
        } else {
          json words = json::array();
          for (auto i : indices) words.push_back(codeword_json(book, i));
          json body{{"ambient_length", book.ambient_len}, {"codewords", std::move(words)}};
          emit(opt, out, render(envelope("encode", rc, std::move(body))));
        }
        return kExitOk;
      },
      err);
}

int cmd_decode(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (opt.packets_path.empty()) throw UsageError("decode needs --packets");
        const auto rc = load(opt);
        const auto b = build(rc);
        const auto packets = read_packets(opt.packets_path, b.book.ambient_len, b.book.p);
        const auto r = two_tier_decode(packets, b.u, b.book, rc.decoder);
        if (opt.format == Format::csv)
          emit(opt, out, decode_csv(packets, r));
        else
          emit(opt, out, render(envelope("decode", rc, decode_json(b.book, packets, r))));
        return kExitOk;
      },
      err);
}

int cmd_simulate(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto rc = load(opt);
        if (!rc.topology) throw ConfigError("simulate needs a 'topology' section");
        const auto b = build(rc);
        sim::Scenario sc{&*rc.topology, &b.book, &b.u, rc.sim};
        const auto rep = sim::run_experiment(sc);
        if (opt.format == Format::csv)
          emit(opt, out, sim_csv(rep));
        else
          emit(opt, out, render(envelope("simulate", rc, sim_json(rep))));
        return kExitOk;
      },
      err);
}

int cmd_analyze_distances(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const auto rc = load(opt);
        const auto b = build(rc);
        if (opt.format == Format::csv)
          emit(opt, out, distances_csv(b.book, b.u));
        else
          emit(opt, out, render(envelope("analyze-distances", rc, distances_json(b.book, b.u))));
        return kExitOk;
      },
      err);
}

int run_command(const std::string& name, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  if (name == "verify-lemmas") return cmd_verify_lemmas(opt, out, err);
  if (name == "encode") return cmd_encode(opt, out, err);
  if (name == "decode") return cmd_decode(opt, out, err);
  if (name == "simulate") return cmd_simulate(opt, out, err);
  if (name == "analyze-distances") return cmd_analyze_distances(opt, out, err);
  err << "unknown command '" << name << "'\n";
  return kExitConfig;
}

}  // namespace tiercode::cli
