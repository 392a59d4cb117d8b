#include "report.hpp"

#include <sstream>

namespace tiercode::cli {

using nlohmann::json;

namespace {

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::equal: return "==";
    case Relation::at_most: return "<=";
    case Relation::less_than: return "<";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json distance_value(const Distance& d) { return d ? json(*d) : json(nullptr); }

json verdict_counts(const sim::VerdictCounts& v) {
  return {{"valid", v.valid}, {"corrected", v.corrected}, {"erased", v.erased}, {"rejected", v.rejected}};
}

json result_json(const DecodeResult& r) {
  json j;
  j["chosen"] = r.chosen ? json(*r.chosen) : json(nullptr);
  j["metric_value"] = r.metric_value;
  j["tie"] = r.tie;
  j["ties"] = r.ties;
  j["list"] = r.list ? json(*r.list) : json(nullptr);
  return j;
}

json verdicts_json(const BaseMatrix& packets, const std::vector<PacketVerdict>& verdicts) {
  json arr = json::array();
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    arr.push_back({{"packet", i < packets.size() ? digits(packets[i]) : std::string()},
                   {"outcome", to_string(v.outcome)},
                   {"vector", v.vector ? json(digits(*v.vector)) : json(nullptr)},
                   {"flips", v.flips},
                   {"candidates", v.candidates}});
  }
  return arr;
}

}  // namespace

const char* tool_version() { return TIERCODE_VERSION; }

std::string digits(const BaseVector& v) {
  std::string s;
  s.reserve(v.size());
  for (auto d : v) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::string format_message(const FieldContext& field, const std::vector<FieldElement>& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + field.format(u[i]);
  return s;
}

json envelope(const std::string& command, const RunConfig& rc, json body) {
  json j;
  j["tool"] = {{"name", "tiercode"}, {"version", tool_version()}};
  j["command"] = command;
  j["config"] = rc.echo;
  j["result"] = std::move(body);
  return j;
}

json distances_json(const Codebook& book, const UnionCode& u) {
  json comps = json::array();
  for (const auto& [idx, d] : component_min_distances(u)) {
    comps.push_back({{"index", idx},
                     {"message", format_message(field_of(book.spec), book.words[idx].message)},
                     {"dimension", u.component(idx).dimension},
                     {"min_distance", distance_value(d)}});
  }
  return {{"kind", to_string(kind_of(book.spec))},
          {"ambient_length", u.ambient_len()},
          {"codewords", book.words.size()},
          {"union_size", u.size()},
          {"union_min_distance", distance_value(u.min_distance())},
          {"correction_radius", u.correction_radius()},
          {"components", std::move(comps)}};
}

std::string distances_csv(const Codebook& book, const UnionCode& u) {
  std::ostringstream os;
  os << "component,message,dimension,min_distance\n";
  for (const auto& [idx, d] : component_min_distances(u)) {
    os << idx << ',' << csv_field(format_message(field_of(book.spec), book.words[idx].message)) << ','
       << u.component(idx).dimension << ',' << (d ? std::to_string(*d) : "inf") << '\n';
  }
  os << "union," << "," << "," << (u.min_distance() ? std::to_string(*u.min_distance()) : "inf") << '\n';
  return os.str();
}

json lemma_json(const LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"claim", c.claim},
                      {"relation", relation_text(c.relation)},
                      {"bound", c.bound},
                      {"measured", c.measured},
                      {"pass", c.pass},
                      {"informational", c.informational},
                      {"note", c.note}});
  }
  json j{{"kind", to_string(r.kind)}, {"checks", std::move(checks)}, {"all_pass", r.all_pass()}};
  j["layout"] = r.layout ? json(to_string(*r.layout)) : json(nullptr);
  return j;
}

std::string lemma_csv(const LemmaReport& r) {
  std::ostringstream os;
  os << "id,claim,relation,bound,measured,pass,informational,note\n";
  for (const auto& c : r.checks)
    os << c.id << ',' << csv_field(c.claim) << ',' << relation_text(c.relation) << ',' << c.bound << ','
       << c.measured << ',' << (c.pass ? "true" : "false") << ',' << (c.informational ? "true" : "false") << ','
       << csv_field(c.note) << '\n';
  return os.str();
}

std::string union_csv(const UnionCode& u) {
  std::ostringstream os;
  os << "packet,components\n";
  for (const auto& v : u.sorted_vectors()) {
    std::string comps;
    for (auto c : u.provenance(v)) comps += (comps.empty() ? "" : " ") + std::to_string(c);
    os << digits(v) << ',' << comps << '\n';
  }
  return os.str();
}

json codeword_json(const Codebook& book, std::size_t index) {
  const auto& field = field_of(book.spec);
  const auto& w = book.words.at(index);
  json rows = json::array();
  for (const auto& r : w.generator) rows.push_back(digits(r));
  json j{{"index", index}, {"message", format_message(field, w.message)}, {"packets", std::move(rows)}};
  if (!w.symbols.empty()) j["symbols"] = format_message(field, w.symbols);
  return j;
}

std::string codewords_csv(const Codebook& book, const std::vector<std::size_t>& indices) {
  const auto& field = field_of(book.spec);
  std::ostringstream os;
  os << "index,message,row,packet\n";
  for (auto i : indices) {
    const auto& w = book.words.at(i);
    for (std::size_t r = 0; r < w.generator.size(); ++r)
      os << i << ',' << csv_field(format_message(field, w.message)) << ',' << r << ',' << digits(w.generator[r])
         << '\n';
  }
  return os.str();
}

json decode_json(const Codebook& book, const BaseMatrix& packets, const TwoTierResult& r) {
  json j = result_json(r.result);
  j["message"] = r.result.chosen ? json(format_message(field_of(book.spec), book.words[*r.result.chosen].message))
                                 : json(nullptr);
  j["verdicts"] = verdicts_json(packets, r.verdicts);
  json audit{{"radius", r.radius}, {"kept", r.kept}, {"erased", r.erased}, {"rejected", r.rejected}};
  if (r.feedback) {
    const auto& fb = *r.feedback;
    audit["feedback"] = {{"list", fb.list},
                         {"restricted_min_distance", fb.restricted_min_distance},
                         {"restricted_radius", fb.restricted_radius},
                         {"verdicts", verdicts_json(packets, fb.verdicts)},
                         {"first_pass", result_json(fb.first_pass)}};
  } else {
    audit["feedback"] = nullptr;
  }
  j["audit"] = std::move(audit);
  return j;
}

std::string decode_csv(const BaseMatrix& packets, const TwoTierResult& r) {
  std::ostringstream os;
  os << "packet,outcome,vector,flips,candidates,chosen,metric_value\n";
  const std::string chosen = r.result.chosen ? std::to_string(*r.result.chosen) : "";
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    const auto& v = r.verdicts[i];
    os << digits(packets[i]) << ',' << to_string(v.outcome) << ',' << (v.vector ? digits(*v.vector) : "") << ','
       << v.flips << ',' << v.candidates << ',' << chosen << ',' << r.result.metric_value << '\n';
  }
  if (r.verdicts.empty()) os << ",,,,," << chosen << ',' << r.result.metric_value << '\n';
  return os.str();
}

json sim_json(const sim::SimReport& r) {
  json strategies = json::array();
  for (const auto& s : r.strategies) {
    strategies.push_back({{"strategy", sim::to_string(s.strategy)},
                          {"trials", s.trials},
                          {"successes", s.successes},
                          {"rank_deficient", s.rank_deficient},
                          {"verdicts", verdict_counts(s.verdicts)},
                          {"mean_metric", s.mean_metric},
                          {"filtered_drops", s.filtered_drops},
                          {"sink_packets", s.sink_packets}});
  }
  return {{"strategies", std::move(strategies)},
          {"paired", {{"two_tier_only_wins", r.two_tier_only_wins}, {"tier2_only_wins", r.tier2_only_wins}}},
          {"retries", {{"trials", r.retried_trials}, {"attempts", r.retry_attempts}}},
          {"seeds",
           {{"base", r.seed},
            {"rule", "splitmix64 chain over (base, trial, attempt, key, purpose); key = edge or node index"}}},
          {"trials", r.trials}};
}

std::string sim_csv(const sim::SimReport& r) {
  std::ostringstream os;
  os << "strategy,trials,successes,rank_deficient,valid,corrected,erased,rejected,mean_metric,filtered_drops,"
        "sink_packets,seed\n";
  for (const auto& s : r.strategies)
    os << sim::to_string(s.strategy) << ',' << s.trials << ',' << s.successes << ',' << s.rank_deficient << ','
       << s.verdicts.valid << ',' << s.verdicts.corrected << ',' << s.verdicts.erased << ',' << s.verdicts.rejected
       << ',' << s.mean_metric << ',' << s.filtered_drops << ',' << s.sink_packets << ',' << r.seed << '\n';
  return os.str();
}

}  // namespace tiercode::cli
