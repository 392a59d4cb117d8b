#include "config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace tiercode::cli {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& section, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("section '" + section + "' must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("unknown key '" + key + "' in section '" + section + "'");
  }
}

template <class T>
T get(const json& obj, const std::string& section, const char* key, std::optional<T> fallback = std::nullopt) {
  if (!obj.contains(key) || obj.at(key).is_null()) {
    if (fallback) return *fallback;
    throw ConfigError("missing key '" + std::string(key) + "' in section '" + section + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("key '" + std::string(key) + "' in section '" + section + "' has the wrong type");
  }
}

unsigned get_unsigned(const json& obj, const std::string& section, const char* key,
                      std::optional<unsigned> fallback = std::nullopt) {
  if (obj.contains(key) && obj.at(key).is_number_integer() && obj.at(key).get<long long>() < 0)
    throw ConfigError("key '" + std::string(key) + "' in section '" + section + "' must be nonnegative");
  return get<unsigned>(obj, section, key, fallback);
}

FieldPtr parse_field(const json& f) {
  check_keys(f, "field", {"p", "n", "modulus", "basis"});
  const unsigned p = get_unsigned(f, "field", "p");
  const unsigned n = get_unsigned(f, "field", "n");
  BaseVector modulus;
  if (f.contains("modulus")) {
    for (auto c : get<std::vector<int>>(f, "field", "modulus")) {
      if (c < 0) throw ConfigError("modulus coefficients must be nonnegative");
      modulus.push_back(static_cast<Digit>(c));
    }
    if (modulus.size() != n + 1) throw ConfigError("modulus must list n + 1 coefficients, lowest first");
  } else {
    auto builtin = FieldContext::builtin_modulus(p, n);
    if (!builtin) throw ConfigError("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
    modulus = *builtin;
  }
  std::optional<BaseMatrix> basis;
  if (f.contains("basis")) {
    basis.emplace();
    for (const auto& row : get<std::vector<std::vector<int>>>(f, "field", "basis")) {
      BaseVector r;
      for (auto c : row) r.push_back(static_cast<Digit>(c));
      basis->push_back(std::move(r));
    }
  }
  return FieldContext::create(p, std::move(modulus), std::move(basis));
}

std::vector<FieldElement> parse_list(const FieldContext& field, const json& code, const char* key) {
  std::vector<FieldElement> out;
  for (const auto& s : get<std::vector<std::string>>(code, "code", key)) out.push_back(field.parse(s));
  return out;
}

CodeSpec parse_code(const json& c, const FieldPtr& field, LemmaOptions& lemma) {
  const auto kind = get<std::string>(c, "code", "kind");
  lemma.rs_construction = get<bool>(c, "code", "rs_construction", false);
  if (kind == "gabidulin") {
    check_keys(c, "code", {"kind", "q", "m", "n", "k", "generators", "rs_construction"});
    GabidulinSpec s;
    s.field = field;
    s.q = get_unsigned(c, "code", "q");
    s.m = get_unsigned(c, "code", "m");
    s.n = get_unsigned(c, "code", "n");
    s.k = get_unsigned(c, "code", "k");
    s.generators = parse_list(*field, c, "generators");
    return s;
  }
  if (kind == "kk") {
    check_keys(c, "code", {"kind", "q", "m", "l", "k", "alphas", "rs_construction"});
    KKSpec s;
    s.field = field;
    s.q = get_unsigned(c, "code", "q");
    s.m = get_unsigned(c, "code", "m");
    s.l = get_unsigned(c, "code", "l");
    s.k = get_unsigned(c, "code", "k");
    s.alphas = parse_list(*field, c, "alphas");
    return s;
  }
  if (kind == "mv") {
    check_keys(c, "code", {"kind", "q", "m", "l", "L", "k", "alphas", "layout", "rs_construction"});
    MVSpec s;
    s.field = field;
    s.q = get_unsigned(c, "code", "q");
    s.m = get_unsigned(c, "code", "m");
    s.l = get_unsigned(c, "code", "l");
    s.L = get_unsigned(c, "code", "L");
    s.k = get_unsigned(c, "code", "k");
    s.alphas = parse_list(*field, c, "alphas");
    const auto layout = get<std::string>(c, "code", "layout", std::string("uncompressed"));
    if (layout == "uncompressed")
      s.layout = MvLayout::uncompressed;
    else if (layout == "compressed")
      s.layout = MvLayout::compressed;
    else
      throw ConfigError("layout must be 'compressed' or 'uncompressed'");
    return s;
  }
  throw ConfigError("code kind must be 'gabidulin', 'kk' or 'mv'");
}

sim::Role parse_role(const std::string& s) {
  if (s == "source") return sim::Role::source;
  if (s == "intermediate") return sim::Role::intermediate;
  if (s == "sink") return sim::Role::sink;
  throw ConfigError("node role must be source, intermediate or sink");
}

sim::Topology parse_topology(const json& t) {
  check_keys(t, "topology", {"diamond", "nodes", "edges"});
  if (t.contains("diamond")) {
    if (t.contains("nodes") || t.contains("edges")) throw ConfigError("topology: 'diamond' excludes nodes/edges");
    return sim::Topology::diamond(get_unsigned(t, "topology", "diamond"));
  }
  std::vector<sim::Node> nodes;
  for (const auto& n : t.at("nodes")) {
    check_keys(n, "topology.nodes", {"id", "role"});
    nodes.push_back({get<std::string>(n, "topology.nodes", "id"),
                     parse_role(get<std::string>(n, "topology.nodes", "role", std::string("intermediate")))});
  }
  std::vector<sim::Edge> edges;
  for (const auto& e : t.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw ConfigError("edges are [from, to] or [from, to, capacity]");
    sim::Edge edge;
    try {
      edge.from = e[0].get<std::string>();
      edge.to = e[1].get<std::string>();
      if (e.size() == 3) edge.capacity = e[2].get<std::size_t>();
    } catch (const json::exception&) {
      throw ConfigError("malformed edge " + e.dump());
    }
    edges.push_back(std::move(edge));
  }
  return sim::Topology(std::move(nodes), std::move(edges));
}

}  // namespace

Tier1Mode parse_tier1_mode(const std::string& s) {
  if (s == "detect-only") return Tier1Mode::detect_only;
  if (s == "correct") return Tier1Mode::correct;
  if (s == "correct-or-erase") return Tier1Mode::correct_or_erase;
  throw ConfigError("tier-1 mode must be detect-only, correct or correct-or-erase");
}

SubspaceMetric parse_metric(const std::string& s) {
  if (s == "injection") return SubspaceMetric::injection;
  if (s == "subspace") return SubspaceMetric::subspace;
  throw ConfigError("metric must be injection or subspace");
}

std::vector<FieldElement> parse_elements(const FieldContext& field, const std::string& text) {
  std::vector<FieldElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::erase_if(item, [](char ch) { return ch == ' ' || ch == '\t'; });
    if (item.empty()) continue;
    if (item.size() == 1 && field.degree() > 1 && item[0] >= '0' && item[0] <= '9') {
      const unsigned c = static_cast<unsigned>(item[0] - '0');
      if (c >= field.characteristic()) throw FieldError("digit " + item + " outside GF(p)");
      out.push_back(field.constant(c));
    } else {
      out.push_back(field.parse(item));
    }
  }
  return out;
}

RunConfig parse_config(const json& doc) {
  check_keys(doc, "<root>", {"name", "field", "code", "union", "tier1", "tier2", "topology", "errors", "sim"});
  RunConfig rc;
  rc.echo = doc;
  rc.name = get<std::string>(doc, "<root>", "name", std::string());
  if (!doc.contains("field")) throw ConfigError("missing section 'field'");
  if (!doc.contains("code")) throw ConfigError("missing section 'code'");
  rc.field = parse_field(doc.at("field"));
  rc.spec = parse_code(doc.at("code"), rc.field, rc.lemma);
  validate(rc.spec);

  if (doc.contains("union")) {
    const auto& u = doc.at("union");
    check_keys(u, "union", {"budget", "message_budget"});
    rc.union_budget = get<std::uint64_t>(u, "union", "budget", kDefaultUnionBudget);
    rc.message_budget = get<std::uint64_t>(u, "union", "message_budget", kDefaultMessageBudget);
  }
  if (doc.contains("tier1")) {
    const auto& t = doc.at("tier1");
    check_keys(t, "tier1", {"enabled", "mode", "radius", "override"});
    rc.decoder.tier1_enabled = get<bool>(t, "tier1", "enabled", true);
    rc.decoder.mode = parse_tier1_mode(get<std::string>(t, "tier1", "mode", std::string("correct")));
    if (t.contains("radius") && !t.at("radius").is_null()) rc.decoder.radius = get_unsigned(t, "tier1", "radius");
    rc.decoder.tier1.allow_radius_override = get<bool>(t, "tier1", "override", false);
  }
  if (doc.contains("tier2")) {
    const auto& t = doc.at("tier2");
    check_keys(t, "tier2", {"metric", "list_radius", "feedback"});
    rc.decoder.metric = parse_metric(get<std::string>(t, "tier2", "metric", std::string("injection")));
    rc.decoder.list_radius = get_unsigned(t, "tier2", "list_radius", 1u);
    rc.decoder.feedback = get<bool>(t, "tier2", "feedback", false);
  }
  if (doc.contains("topology")) rc.topology = parse_topology(doc.at("topology"));
  if (doc.contains("errors")) {
    const auto& e = doc.at("errors");
    check_keys(e, "errors", {"bit_flip_prob", "fixed_flips", "corrupt_packet_prob", "injected_packets",
                             "injection_node"});
    auto& em = rc.sim.errors;
    em.bit_flip_prob = get<double>(e, "errors", "bit_flip_prob", 0.0);
    if (e.contains("fixed_flips") && !e.at("fixed_flips").is_null())
      em.fixed_flips = get_unsigned(e, "errors", "fixed_flips");
    em.corrupt_packet_prob = get<double>(e, "errors", "corrupt_packet_prob", 1.0);
    em.injected_packets = get_unsigned(e, "errors", "injected_packets", 0u);
    em.injection_node = get<std::string>(e, "errors", "injection_node", std::string());
    em.validate(ambient_length(packet_layout(rc.spec)));
    if (em.injected_packets > 0) {
      if (!rc.topology) throw ConfigError("injected packets need a topology");
      (void)rc.topology->index_of(em.injection_node);
    }
  }
  if (doc.contains("sim")) {
    const auto& s = doc.at("sim");
    check_keys(s, "sim", {"trials", "seed", "node_filter_mode", "retry_rank_deficient", "max_attempts"});
    rc.sim.trials = get<std::size_t>(s, "sim", "trials", 100);
    rc.sim.seed = get<std::uint64_t>(s, "sim", "seed", 1);
    rc.sim.node_filter_mode =
        parse_tier1_mode(get<std::string>(s, "sim", "node_filter_mode", std::string("detect-only")));
    rc.sim.retry_rank_deficient = get<bool>(s, "sim", "retry_rank_deficient", false);
    rc.sim.max_attempts = get<std::size_t>(s, "sim", "max_attempts", 64);
    if (rc.sim.trials == 0) throw ConfigError("sim.trials must be at least 1");
    if (rc.sim.max_attempts == 0) throw ConfigError("sim.max_attempts must be at least 1");
  }
  rc.sim.decoder = rc.decoder;
  return rc;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace tiercode::cli
