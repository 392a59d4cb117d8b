#include "tiercode/lemmas.hpp"

#include <algorithm>
#include <limits>

namespace tiercode {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

bool holds(Relation rel, std::uint64_t measured, std::uint64_t bound) {
  switch (rel) {
    case Relation::equal: return measured == bound;
    case Relation::at_most: return measured <= bound;
    case Relation::less_than: return measured < bound;
  }
  return false;
}

LemmaCheck check(std::string id, std::string claim, Relation rel, std::uint64_t measured, std::uint64_t bound,
                 std::string note = {}) {
  LemmaCheck c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.relation = rel;
  c.bound = bound;
  c.measured = measured;
  c.pass = holds(rel, measured, bound);
  c.note = std::move(note);
  if (bound == kSaturated) c.note += (c.note.empty() ? "" : "; ") + std::string("bound saturated at 2^64-1");
  return c;
}

struct ComponentDistances {
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;  // (component, d) for dim >= 1
  std::optional<std::size_t> c0;
  std::size_t max_other = 0;
  std::size_t min_other = std::numeric_limits<std::size_t>::max();
};

ComponentDistances collect(const UnionCode& u) {
  ComponentDistances cd;
  for (const auto& [idx, d] : component_min_distances(u)) {
    if (!d) continue;
    cd.nonzero.emplace_back(idx, *d);
    if (idx == 0) {
      cd.c0 = *d;
    } else {
      cd.max_other = std::max(cd.max_other, *d);
      cd.min_other = std::min(cd.min_other, *d);
    }
  }
  return cd;
}

std::string count_note(std::size_t n) { return "components checked: " + std::to_string(n); }

void c0_checks(LemmaReport& r, const ComponentDistances& cd, const std::string& prefix, std::uint64_t c0_bound,
               const std::string& bound_text, const LemmaOptions& options) {
  const std::size_t c0 = cd.c0.value_or(0);
  const std::size_t others = cd.nonzero.size() - (cd.c0 ? 1 : 0);
  if (others > 0)
    r.checks.push_back(check(prefix + ".c0_smallest", "d_H(C_0) <= d_H(C) for every component C", Relation::at_most,
                             c0, cd.min_other, count_note(others)));
  r.checks.push_back(check(prefix + ".c0_bound", "d_H(C_0) <= " + bound_text, Relation::at_most, c0, c0_bound));
  if (options.rs_construction)
    r.checks.push_back(check(prefix + ".c0_rs_equality", "d_H(C_0) = " + bound_text + " for Reed-Solomon alphas",
                             Relation::equal, c0, c0_bound));
}

void gabidulin_checks(LemmaReport& r, const GabidulinSpec& s, const Codebook& book, const UnionCode& u,
                      const LemmaOptions& options) {
  r.checks.push_back(check("gabidulin.union_distance", "union code minimum Hamming distance is 1", Relation::equal,
                           union_min_distance(u), 1));
  const auto cd = collect(u);
  std::size_t worst = 0;
  for (const auto& [_, d] : cd.nonzero) worst = std::max(worst, d);
  r.checks.push_back(check("gabidulin.component_bound", "d_H(C) <= m - n + k for every component", Relation::at_most, worst,
                           s.m - s.n + s.k, count_note(cd.nonzero.size())));

  std::size_t worst_mono = 0, mono = 0;
  for (const auto& [idx, d] : cd.nonzero) {
    const auto& msg = book.words[idx].message;
    const auto nz = std::count_if(msg.begin(), msg.end(), [](const FieldElement& e) { return !e.is_zero(); });
    if (nz != 1) continue;
    ++mono;
    worst_mono = std::max(worst_mono, d);
  }
  r.checks.push_back(check("gabidulin.monomial_bound", "d_H(C_j) <= m - n + 1 for monomial messages u_i x^[i]", Relation::at_most,
                           worst_mono, s.m - s.n + 1, count_note(mono)));

  std::string note = "exhaustive over all codeword pairs";
  std::size_t dr = 0;
  if (book.words.size() <= options.mrd_pairwise_limit) {
    dr = min_rank_distance(book);
  } else {
    note = "minimum rank weight of nonzero codewords (linear code)";
    dr = std::numeric_limits<std::size_t>::max();
    for (const auto& w : book.words) {
      const auto rk = rank_over_base(w.symbols);
      if (rk != 0) dr = std::min(dr, rk);
    }
  }
  r.checks.push_back(check("gabidulin.mrd", "minimum rank distance equals n - k + 1", Relation::equal, dr, s.n - s.k + 1, note));
}

void kk_checks(LemmaReport& r, const KKSpec& s, const UnionCode& u, const LemmaOptions& options) {
  r.checks.push_back(check("kk.union_distance", "union code minimum Hamming distance is 1", Relation::equal,
                           union_min_distance(u), 1));
  const auto cd = collect(u);
  c0_checks(r, cd, "kk", s.m - s.l + 1, "m - l + 1", options);
  std::size_t worst = 0;
  for (const auto& [_, d] : cd.nonzero) worst = std::max(worst, d);
  r.checks.push_back(check("kk.singleton", "d_H(C) <= 2m - l + 1 for every component", Relation::at_most, worst,
                           2 * s.m - s.l + 1, count_note(cd.nonzero.size())));
  const std::uint64_t q = s.q;
  const std::uint64_t count = (ipow(q, s.l) - 1) * ipow(q, s.m) + 1;
  r.checks.push_back(check("kk.union_count", "|C_U| = (q^l - 1) q^m + 1", Relation::equal, u.size(), count));
  r.checks.push_back(check("kk.union_below_ambient", "|C_U| < q^(l+m)", Relation::less_than, u.size(), ipow(q, s.l + s.m)));
  r.checks.push_back(check("kk.union_below_packet_space", "|C_U| < q^(2m), the packet space", Relation::less_than, u.size(),
                           ipow(q, 2 * s.m)));
}

void mv_checks(LemmaReport& r, const MVSpec& s, const UnionCode& u, const LemmaOptions& options) {
  const auto cd = collect(u);
  c0_checks(r, cd, "mv", std::uint64_t{s.m} * s.l - s.l + 1, "ml - l + 1", options);

  const bool poly_basis = s.field->uses_polynomial_basis();
  const std::size_t du = union_min_distance(u);
  LemmaCheck l8 = s.l == 1 ? check("mv.union_distance_bound", "l = 1: d_H(C_U) <= m", Relation::at_most, du, s.m)
                           : check("mv.union_distance_bound", "l > 1: d_H(C_U) <= min{ml - l + 1, L}", Relation::at_most, du,
                                   std::min<std::uint64_t>(std::uint64_t{s.m} * s.l - s.l + 1, s.L));
  if (!poly_basis) {
    l8.informational = true;
    l8.note = "bound assumes polynomial-basis coordinates; field uses a custom representation basis";
  }
  l8.note += (l8.note.empty() ? "" : "; ") + std::string("layout ") + to_string(s.layout);
  r.checks.push_back(std::move(l8));

  const std::uint64_t q = s.q;
  const std::uint64_t upper = (ipow(q, s.l) - 1) * ipow(q, std::uint64_t{s.L} * s.m) + 1;
  r.checks.push_back(check("mv.union_count_bound", "|C_U| <= (q^l - 1) q^(Lm) + 1", Relation::at_most, u.size(), upper));
  r.checks.push_back(check("mv.union_below_ambient", "|C_U| < q^(l+Lm)", Relation::less_than, u.size(),
                           ipow(q, s.l + std::uint64_t{s.L} * s.m)));
  r.checks.push_back(check("mv.union_below_packet_space", "|C_U| < q^(packet length)", Relation::less_than, u.size(),
                           ipow(q, u.ambient_len())));
}

}  // namespace

bool LemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass || c.informational; });
}

const LemmaCheck* LemmaReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::size_t min_rank_distance(const Codebook& book) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < book.words.size(); ++i)
    for (std::size_t j = i + 1; j < book.words.size(); ++j)
      best = std::min(best, rank_distance(book.words[i].symbols, book.words[j].symbols));
  return best;
}

LemmaReport verify_lemmas(const Codebook& book, const UnionCode& u, const LemmaOptions& options) {
  LemmaReport r;
  r.kind = kind_of(book.spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GabidulinSpec>) {
          gabidulin_checks(r, s, book, u, options);
        } else if constexpr (std::is_same_v<T, KKSpec>) {
          kk_checks(r, s, u, options);
        } else {
          r.layout = s.layout;
          mv_checks(r, s, u, options);
        }
      },
      book.spec);
  return r;
}

}  // namespace tiercode
