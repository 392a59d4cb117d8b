#include "tiercode/sim.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tiercode/linalg.hpp"

namespace tiercode::sim {

namespace {

enum Purpose : std::uint64_t { kMessage = 1, kMix = 2, kChannel = 3, kInject = 4 };

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t attempt, std::uint64_t key,
                          std::uint64_t purpose) {
  std::uint64_t h = splitmix(base);
  for (auto part : {trial, attempt, key, purpose}) h = splitmix(h ^ part);
  return h;
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::tier2_only: return "tier2-only";
    case Strategy::two_tier: return "two-tier";
    case Strategy::two_tier_node_filter: return "two-tier+node-filter";
  }
  return "?";
}

// ------------------------------------------------------------------ Topology

Topology::Topology(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.empty()) throw SpecError("topology has no nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (nodes_[i].id == nodes_[j].id) throw SpecError("duplicate node id '" + nodes_[i].id + "'");

  std::size_t sources = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].role == Role::source) {
      ++sources;
      source_ = i;
    }
  if (sources != 1) throw SpecError("topology needs exactly one source");

  std::vector<std::size_t> indeg(nodes_.size(), 0);
  for (const auto& e : edges_) {
    const auto a = index_of(e.from);
    const auto b = index_of(e.to);
    if (a == b) throw SpecError("self loop at '" + e.from + "'");
    if (e.capacity == 0) throw SpecError("edge capacity must be positive");
    ++indeg[b];
  }
  if (indeg[source_] != 0) throw SpecError("source must not have incoming edges");

  // Kahn's algorithm, lowest node index first.
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    const auto n = ready.back();
    ready.pop_back();
    order_.push_back(n);
    for (const auto& e : edges_)
      if (index_of(e.from) == n && --indeg[index_of(e.to)] == 0) ready.push_back(index_of(e.to));
  }
  if (order_.size() != nodes_.size()) throw SpecError("topology has a cycle");

  std::vector<bool> seen(nodes_.size(), false);
  std::deque<std::size_t> q{source_};
  seen[source_] = true;
  while (!q.empty()) {
    const auto n = q.front();
    q.pop_front();
    for (auto e : out_edges(n)) {
      const auto t = index_of(edges_[e].to);
      if (!seen[t]) {
        seen[t] = true;
        q.push_back(t);
      }
    }
  }
  const auto s = sinks();
  if (s.empty()) throw SpecError("topology has no sink");
  for (auto t : s)
    if (!seen[t]) throw SpecError("sink '" + nodes_[t].id + "' is unreachable from the source");
}

Topology Topology::diamond(std::size_t capacity) {
  return Topology({{"s", Role::source}, {"a", Role::intermediate}, {"b", Role::intermediate}, {"t", Role::sink}},
                  {{"s", "a", capacity}, {"s", "b", capacity}, {"a", "t", capacity}, {"b", "t", capacity}});
}

std::vector<std::size_t> Topology::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].role == Role::sink) out.push_back(i);
  return out;
}

std::size_t Topology::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return i;
  throw SpecError("unknown node '" + id + "'");
}

std::vector<std::size_t> Topology::in_edges(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].to == nodes_[node].id) out.push_back(e);
  return out;
}

std::vector<std::size_t> Topology::out_edges(std::size_t node) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].from == nodes_[node].id) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- ErrorModel

void ErrorModel::validate(std::size_t packet_len) const {
  if (!(bit_flip_prob >= 0.0 && bit_flip_prob <= 1.0)) throw SpecError("bit_flip_prob must lie in [0, 1]");
  if (!(corrupt_packet_prob >= 0.0 && corrupt_packet_prob <= 1.0))
    throw SpecError("corrupt_packet_prob must lie in [0, 1]");
  if (fixed_flips && *fixed_flips > packet_len) throw SpecError("fixed_flips exceeds the packet length");
}

bool ErrorModel::error_free() const noexcept {
  const bool flips = fixed_flips ? *fixed_flips > 0 : bit_flip_prob > 0.0;
  return injected_packets == 0 && (!flips || corrupt_packet_prob == 0.0);
}

void VerdictCounts::add(const PacketVerdict& v) {
  switch (v.outcome) {
    case Outcome::valid: ++valid; break;
    case Outcome::corrected: ++corrected; break;
    case Outcome::erased: ++erased; break;
    case Outcome::rejected: ++rejected; break;
  }
}

VerdictCounts& VerdictCounts::operator+=(const VerdictCounts& o) {
  valid += o.valid;
  corrected += o.corrected;
  erased += o.erased;
  rejected += o.rejected;
  return *this;
}

bool TrialOutcome::success() const {
  return std::all_of(sinks.begin(), sinks.end(), [](const SinkOutcome& s) { return s.success; });
}

bool TrialOutcome::rank_deficient() const {
  return std::any_of(sinks.begin(), sinks.end(), [](const SinkOutcome& s) { return s.rank_deficient; });
}

const StrategyStats& SimReport::stats(Strategy s) const {
  for (const auto& st : strategies)
    if (st.strategy == s) return st;
  throw std::out_of_range("strategy not in report");
}

// ------------------------------------------------------------------- trials

namespace {

using Rng = std::mt19937_64;

void corrupt(BaseVector& pkt, const ErrorModel& em, unsigned p, Rng& rng) {
  std::bernoulli_distribution bad(em.corrupt_packet_prob);
  std::uniform_int_distribution<unsigned> offset(1, p - 1);
  if (!bad(rng)) return;
  if (em.fixed_flips) {
    std::vector<std::size_t> pos(pkt.size());
    std::iota(pos.begin(), pos.end(), 0);
    for (std::size_t i = 0; i < *em.fixed_flips; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pos.size() - 1);
      std::swap(pos[i], pos[pick(rng)]);
      pkt[pos[i]] = static_cast<Digit>((pkt[pos[i]] + offset(rng)) % p);
    }
    return;
  }
  std::bernoulli_distribution flip(em.bit_flip_prob);
  for (auto& d : pkt)
    if (flip(rng)) d = static_cast<Digit>((d + offset(rng)) % p);
}

bool has_rank_loss(const BaseMatrix& received, const Subspace& sent) {
  if (received.empty()) return sent.dimension() > 0;
  const auto r = Subspace::span(received, sent.ambient_len(), sent.characteristic());
  return intersection_dimension(r, sent) < sent.dimension();
}

}  // namespace

TrialOutcome run_trial(const Scenario& sc, std::size_t message_index, Strategy strategy, std::uint64_t trial,
                       std::uint64_t attempt) {
  if (!sc.topology || !sc.book || !sc.union_code) throw std::invalid_argument("incomplete scenario");
  const auto& topo = *sc.topology;
  const auto& book = *sc.book;
  const auto& u = *sc.union_code;
  const auto& cfg = sc.config;
  if (kind_of(book.spec) == CodeKind::gabidulin) throw SpecError("network simulation needs a KK or MV code");
  if (message_index >= book.words.size()) throw std::out_of_range("message index outside codebook");
  cfg.errors.validate(book.ambient_len);

  const unsigned p = book.p;
  const std::size_t len = book.ambient_len;
  const std::uint64_t seed = cfg.seed;

  TrialOutcome out;
  out.message_index = message_index;
  out.nodes.assign(topo.nodes().size(), {});
  std::vector<BaseMatrix> inbox(topo.nodes().size());
  inbox[topo.source()] = book.words[message_index].generator;

  const bool filter = strategy == Strategy::two_tier_node_filter;
  const std::size_t filter_radius = cfg.node_filter_mode == Tier1Mode::detect_only ? 0 : u.correction_radius();

  for (const auto n : topo.order()) {
    auto& audit = out.nodes[n];
    auto& packets = inbox[n];
    if (cfg.errors.injected_packets > 0 && topo.nodes()[n].id == cfg.errors.injection_node) {
      Rng rng(derive_seed(seed, trial, attempt, n, kInject));
      std::uniform_int_distribution<unsigned> digit(0, p - 1);
      for (std::size_t i = 0; i < cfg.errors.injected_packets; ++i) {
        BaseVector v(len);
        for (auto& d : v) d = static_cast<Digit>(digit(rng));
        packets.push_back(std::move(v));
      }
      audit.injected = cfg.errors.injected_packets;
    }
    audit.arrived = packets.size();

    // Active packets keep their arrival slot so mixing draws stay aligned
    // across strategies.
    std::vector<std::optional<BaseVector>> active(packets.begin(), packets.end());
    if (filter && topo.nodes()[n].role == Role::intermediate) {
      for (auto& slot : active) {
        auto v = tier1_decode(*slot, u, filter_radius, cfg.node_filter_mode);
        if (v.vector)
          slot = std::move(v.vector);
        else {
          slot.reset();
          ++audit.filtered;
        }
      }
    }
    audit.forwarded = static_cast<std::size_t>(std::count_if(active.begin(), active.end(),
                                                             [](const auto& s) { return s.has_value(); }));

    for (const auto e : topo.out_edges(n)) {
      const auto& edge = topo.edges()[e];
      const auto to = topo.index_of(edge.to);
      Rng mix(derive_seed(seed, trial, attempt, e, kMix));
      Rng chan(derive_seed(seed, trial, attempt, e, kChannel));
      std::uniform_int_distribution<unsigned> coeff(0, p - 1);
      for (std::size_t c = 0; c < edge.capacity; ++c) {
        BaseVector out_pkt(len, 0);
        for (const auto& slot : active) {
          const unsigned a = coeff(mix);
          if (slot) linalg::axpy(out_pkt, a, *slot, p);
        }
        corrupt(out_pkt, cfg.errors, p, chan);
        if (audit.forwarded > 0) inbox[to].push_back(std::move(out_pkt));
      }
    }

    if (topo.nodes()[n].role != Role::sink) continue;
    SinkOutcome so;
    so.sink = topo.nodes()[n].id;
    so.received = packets.size();
    so.rank_deficient = has_rank_loss(packets, book.spaces[message_index]);
    if (!packets.empty()) {
      DecodeResult r;
      if (strategy == Strategy::tier2_only) {
        r = tier2_subspace_decode(packets, book, cfg.decoder.metric);
      } else {
        auto tt = two_tier_decode(packets, u, book, cfg.decoder);
        for (const auto& v : tt.verdicts) so.verdicts.add(v);
        r = tt.result;
      }
      so.chosen = r.chosen;
      so.metric_value = r.metric_value;
      so.success = r.chosen && *r.chosen == message_index;
    }
    out.sinks.push_back(std::move(so));
  }
  return out;
}

SimReport run_experiment(const Scenario& sc) {
  if (!sc.topology || !sc.book || !sc.union_code) throw std::invalid_argument("incomplete scenario");
  if (kind_of(sc.book->spec) == CodeKind::gabidulin) throw SpecError("network simulation needs a KK or MV code");
  if (sc.config.trials == 0) throw std::invalid_argument("trials must be at least 1");

  SimReport rep;
  rep.seed = sc.config.seed;
  rep.trials = sc.config.trials;
  std::vector<double> metric_sum(kAllStrategies.size(), 0.0);
  std::vector<std::size_t> sink_count(kAllStrategies.size(), 0);
  for (auto s : kAllStrategies) {
    StrategyStats st;
    st.strategy = s;
    rep.strategies.push_back(st);
  }

  for (std::size_t t = 0; t < sc.config.trials; ++t) {
    Rng msg_rng(derive_seed(sc.config.seed, t, 0, 0, kMessage));
    std::uniform_int_distribution<std::size_t> pick(0, sc.book->words.size() - 1);
    const std::size_t msg = pick(msg_rng);

    std::vector<TrialOutcome> outcomes;
    std::uint64_t attempt = 0;
    for (;;) {
      outcomes.clear();
      for (auto s : kAllStrategies) outcomes.push_back(run_trial(sc, msg, s, t, attempt));
      const bool deficient = std::any_of(outcomes.begin(), outcomes.end(),
                                         [](const TrialOutcome& o) { return o.rank_deficient(); });
      if (!deficient || !sc.config.retry_rank_deficient || attempt + 1 >= sc.config.max_attempts) break;
      if (attempt == 0) ++rep.retried_trials;
      ++attempt;
      ++rep.retry_attempts;
    }

    for (std::size_t i = 0; i < kAllStrategies.size(); ++i) {
      auto& st = rep.strategies[i];
      const auto& o = outcomes[i];
      ++st.trials;
      st.successes += o.success();
      st.rank_deficient += o.rank_deficient();
      for (const auto& so : o.sinks) {
        st.verdicts += so.verdicts;
        metric_sum[i] += static_cast<double>(so.metric_value);
        ++sink_count[i];
        st.sink_packets += so.received;
      }
      for (const auto& na : o.nodes) st.filtered_drops += na.filtered;
    }
    const bool two = outcomes[1].success();
    const bool only2 = outcomes[0].success();
    rep.two_tier_only_wins += two && !only2;
    rep.tier2_only_wins += only2 && !two;
  }
  for (std::size_t i = 0; i < kAllStrategies.size(); ++i)
    rep.strategies[i].mean_metric = sink_count[i] ? metric_sum[i] / static_cast<double>(sink_count[i]) : 0.0;
  return rep;
}

}  // namespace tiercode::sim
