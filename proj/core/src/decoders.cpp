#include "tiercode/decoders.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tiercode {

const char* to_string(Tier1Mode m) {
  switch (m) {
    case Tier1Mode::detect_only: return "detect-only";
    case Tier1Mode::correct: return "correct";
    case Tier1Mode::correct_or_erase: return "correct-or-erase";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::valid: return "valid";
    case Outcome::corrected: return "corrected";
    case Outcome::erased: return "erased";
    case Outcome::rejected: return "rejected";
  }
  return "?";
}

const char* to_string(SubspaceMetric m) { return m == SubspaceMetric::injection ? "injection" : "subspace"; }

PacketVerdict tier1_decode(const BaseVector& packet, const UnionCode& u, std::size_t radius, Tier1Mode mode,
                           const Tier1Options& options) {
  if (packet.size() != u.ambient_len())
    throw std::invalid_argument("packet length " + std::to_string(packet.size()) + " differs from ambient length " +
                                std::to_string(u.ambient_len()));
  PacketVerdict v;
  if (u.contains(packet)) {
    v.outcome = Outcome::valid;
    v.vector = packet;
    return v;
  }
  if (mode == Tier1Mode::detect_only) return v;  // rejected
  if (!options.allow_radius_override && radius > u.correction_radius())
    throw SpecError("tier-1 radius " + std::to_string(radius) + " exceeds the guaranteed correction radius " +
                    std::to_string(u.correction_radius()));

  const unsigned p = u.characteristic();
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<BaseVector> hits;
    for_each_at_distance(packet, r, p, [&](const BaseVector& y) {
      if (u.contains(y)) hits.push_back(y);
      return true;
    });
    if (hits.empty()) continue;
    if (hits.size() == 1) {
      v.outcome = Outcome::corrected;
      v.vector = std::move(hits.front());
      v.flips = r;
      return v;
    }
    v.candidates = hits.size();
    v.outcome = mode == Tier1Mode::correct_or_erase ? Outcome::erased : Outcome::rejected;
    return v;
  }
  v.outcome = mode == Tier1Mode::correct_or_erase ? Outcome::erased : Outcome::rejected;
  return v;
}

namespace {

void require_subspace_book(const Codebook& book) {
  if (kind_of(book.spec) == CodeKind::gabidulin)
    throw SpecError("subspace decoding needs a KK or MV codebook");
}

std::size_t subspace_metric(const Subspace& a, const Subspace& b, SubspaceMetric metric) {
  return metric == SubspaceMetric::injection ? injection_distance(a, b) : subspace_distance(a, b);
}

DecodeResult pick_min(const std::vector<std::pair<std::size_t, std::size_t>>& scored) {
  DecodeResult r;
  if (scored.empty()) return r;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [_, d] : scored) best = std::min(best, d);
  for (const auto& [idx, d] : scored)
    if (d == best) r.ties.push_back(idx);
  std::sort(r.ties.begin(), r.ties.end());
  r.chosen = r.ties.front();
  r.metric_value = best;
  r.tie = r.ties.size() > 1;
  return r;
}

DecodeResult decode_among(const BaseMatrix& packets, const Codebook& book, SubspaceMetric metric,
                          std::span<const std::size_t> candidates) {
  const auto received = Subspace::span(packets, book.ambient_len, book.p);
  std::vector<std::pair<std::size_t, std::size_t>> scored;
  scored.reserve(candidates.size());
  for (auto idx : candidates) scored.emplace_back(idx, subspace_metric(received, book.spaces.at(idx), metric));
  return pick_min(scored);
}

std::vector<std::size_t> all_indices(const Codebook& book) {
  std::vector<std::size_t> idx(book.words.size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

void check_packets(const BaseMatrix& packets, std::size_t len) {
  for (const auto& p : packets)
    if (p.size() != len)
      throw std::invalid_argument("packet length " + std::to_string(p.size()) + " differs from ambient length " +
                                  std::to_string(len));
}

}  // namespace

DecodeResult tier2_subspace_decode(const BaseMatrix& packets, const Codebook& book, SubspaceMetric metric) {
  require_subspace_book(book);
  if (packets.empty()) throw std::invalid_argument("tier-2 decoding needs at least one packet");
  check_packets(packets, book.ambient_len);
  return decode_among(packets, book, metric, all_indices(book));
}

DecodeResult tier2_rank_decode(std::span<const FieldElement> word, const Codebook& book,
                               const std::vector<bool>& erased) {
  if (kind_of(book.spec) != CodeKind::gabidulin) throw SpecError("rank decoding needs a Gabidulin codebook");
  const auto& spec = std::get<GabidulinSpec>(book.spec);
  if (word.size() != spec.n)
    throw std::invalid_argument("word has " + std::to_string(word.size()) + " symbols, expected " +
                                std::to_string(spec.n));
  if (!erased.empty() && erased.size() != spec.n) throw std::invalid_argument("erasure mask has wrong length");
  std::vector<std::pair<std::size_t, std::size_t>> scored;
  scored.reserve(book.words.size());
  std::vector<FieldElement> diff;
  for (std::size_t i = 0; i < book.words.size(); ++i) {
    diff.clear();
    for (std::size_t s = 0; s < spec.n; ++s)
      if (erased.empty() || !erased[s]) diff.push_back(word[s] - book.words[i].symbols[s]);
    scored.emplace_back(i, rank_over_base(diff));
  }
  return pick_min(scored);
}

DecodeResult tier2_list_decode(const BaseMatrix& packets, const Codebook& book, std::size_t radius,
                               SubspaceMetric metric) {
  require_subspace_book(book);
  check_packets(packets, book.ambient_len);
  const auto received = Subspace::span(packets, book.ambient_len, book.p);
  std::vector<std::pair<std::size_t, std::size_t>> scored;
  for (std::size_t i = 0; i < book.spaces.size(); ++i)
    scored.emplace_back(i, subspace_metric(received, book.spaces[i], metric));
  auto r = pick_min(scored);
  std::vector<std::pair<std::size_t, std::size_t>> within;
  for (const auto& [idx, d] : scored)
    if (d <= radius) within.emplace_back(d, idx);
  std::sort(within.begin(), within.end());
  r.list.emplace();
  for (const auto& [_, idx] : within) r.list->push_back(idx);
  return r;
}

namespace {

struct Tier1Pass {
  std::vector<PacketVerdict> verdicts;
  BaseMatrix kept;
  std::size_t erased = 0;
  std::size_t rejected = 0;
};

Tier1Pass run_tier1(const BaseMatrix& packets, const UnionCode& u, std::size_t radius, const TwoTierConfig& cfg) {
  Tier1Pass pass;
  pass.verdicts.reserve(packets.size());
  for (const auto& pkt : packets) {
    auto v = tier1_decode(pkt, u, radius, cfg.mode, cfg.tier1);
    if (v.outcome == Outcome::valid || v.outcome == Outcome::corrected) pass.kept.push_back(*v.vector);
    if (v.outcome == Outcome::erased) ++pass.erased;
    if (v.outcome == Outcome::rejected) ++pass.rejected;
    pass.verdicts.push_back(std::move(v));
  }
  return pass;
}

TwoTierResult two_tier_rank(const BaseMatrix& packets, const UnionCode& u, const Codebook& book,
                            const TwoTierConfig& cfg) {
  const auto& spec = std::get<GabidulinSpec>(book.spec);
  if (packets.size() != spec.n)
    throw std::invalid_argument("Gabidulin decoding needs exactly n symbol packets");
  check_packets(packets, book.ambient_len);
  const auto& field = *spec.field;
  TwoTierResult out;
  std::vector<bool> erased(spec.n, false);
  std::vector<FieldElement> word;
  word.reserve(spec.n);
  if (!cfg.tier1_enabled) {
    for (const auto& p : packets) word.push_back(field.from_vector(p));
    out.kept = packets.size();
    out.result = tier2_rank_decode(word, book);
    return out;
  }
  out.radius = cfg.radius.value_or(u.correction_radius());
  auto pass = run_tier1(packets, u, out.radius, cfg);
  for (std::size_t s = 0; s < spec.n; ++s) {
    const auto& v = pass.verdicts[s];
    if (v.vector) {
      word.push_back(field.from_vector(*v.vector));
    } else {
      word.push_back(field.zero());
      erased[s] = true;
    }
  }
  out.kept = pass.kept.size();
  out.erased = pass.erased;
  out.rejected = pass.rejected;
  out.verdicts = std::move(pass.verdicts);
  if (out.kept == 0) return out;  // failure marker
  out.result = tier2_rank_decode(word, book, erased);
  return out;
}

}  // namespace

TwoTierResult two_tier_decode(const BaseMatrix& packets, const UnionCode& u, const Codebook& book,
                              const TwoTierConfig& cfg) {
  if (u.ambient_len() != book.ambient_len) throw std::invalid_argument("union and codebook ambient lengths differ");
  if (kind_of(book.spec) == CodeKind::gabidulin) return two_tier_rank(packets, u, book, cfg);
  check_packets(packets, book.ambient_len);

  TwoTierResult out;
  if (!cfg.tier1_enabled) {
    out.kept = packets.size();
    if (!packets.empty()) out.result = tier2_subspace_decode(packets, book, cfg.metric);
    return out;
  }

  out.radius = cfg.radius.value_or(u.correction_radius());
  auto pass = run_tier1(packets, u, out.radius, cfg);
  out.kept = pass.kept.size();
  out.erased = pass.erased;
  out.rejected = pass.rejected;
  if (!pass.kept.empty()) out.result = tier2_subspace_decode(pass.kept, book, cfg.metric);

  if (cfg.feedback && !packets.empty()) {
    const BaseMatrix& basis = pass.kept.empty() ? packets : pass.kept;
    auto listed = tier2_list_decode(basis, book, cfg.list_radius, cfg.metric);
    if (listed.list && !listed.list->empty() && listed.list->size() < book.words.size()) {
      FeedbackAudit fb;
      fb.first_pass = out.result;
      fb.list = *listed.list;
      const auto narrowed = restrict(u, fb.list);
      fb.restricted_min_distance = narrowed.min_distance().value_or(0);
      fb.restricted_radius = narrowed.correction_radius();
      auto second = run_tier1(packets, narrowed, fb.restricted_radius, cfg);
      fb.verdicts = second.verdicts;
      if (!second.kept.empty()) {
        auto candidates = fb.list;
        std::sort(candidates.begin(), candidates.end());
        out.result = decode_among(second.kept, book, cfg.metric, candidates);
      }
      out.feedback = std::move(fb);
    }
  }
  out.verdicts = std::move(pass.verdicts);
  return out;
}

}  // namespace tiercode
