#include <gtest/gtest.h>

#include "support.hpp"
#include "tiercode/decoders.hpp"
#include "tiercode/linalg.hpp"

using namespace tiercode;
using namespace tiercode::testing;

namespace {

struct MV1Fixture : ::testing::Test {
  FieldPtr f = gf8();
  Codebook book = build_codebook(mv1(f));
  UnionCode u = build_union(book);
};

BaseVector flipped(BaseVector v, std::initializer_list<std::size_t> positions) {
  for (auto i : positions) v[i] ^= 1;
  return v;
}

}  // namespace

TEST_F(MV1Fixture, MemberPacketIsValidAndUnchanged) {
  for (const auto& v : u.sorted_vectors()) {
    const auto r = tier1_decode(v, u, 1, Tier1Mode::correct);
    EXPECT_EQ(r.outcome, Outcome::valid);
    EXPECT_EQ(r.vector, v);
    EXPECT_EQ(r.flips, 0u);
  }
}

TEST_F(MV1Fixture, EverySingleFlipIsCorrected) {
  std::size_t checked = 0;
  for (const auto& v : u.sorted_vectors()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto r = tier1_decode(flipped(v, {i}), u, 1, Tier1Mode::correct);
      ASSERT_EQ(r.outcome, Outcome::corrected);
      ASSERT_EQ(r.vector, v);
      ASSERT_EQ(r.flips, 1u);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 27u);
}

TEST_F(MV1Fixture, DetectOnlyRejectsNonMembers) {
  const auto r = tier1_decode(BaseVector{1, 0, 0, 0, 0, 0, 0, 0, 0}, u, 0, Tier1Mode::detect_only);
  EXPECT_EQ(r.outcome, Outcome::rejected);
  EXPECT_FALSE(r.vector.has_value());
}

TEST_F(MV1Fixture, RadiusAboveGuaranteeNeedsOverride) {
  const BaseVector pkt{1, 0, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_THROW((void)tier1_decode(pkt, u, 2, Tier1Mode::correct), SpecError);
  Tier1Options opt;
  opt.allow_radius_override = true;
  EXPECT_EQ(tier1_decode(pkt, u, 2, Tier1Mode::correct, opt).outcome, Outcome::corrected);
  EXPECT_THROW((void)tier1_decode(BaseVector(4, 0), u, 1, Tier1Mode::correct), std::invalid_argument);
}

TEST_F(MV1Fixture, SubspaceDecodeOfSecondComponent) {
  const auto r = tier2_subspace_decode({BaseVector(9, 1)}, book);
  EXPECT_EQ(r.chosen, std::optional<std::size_t>(1));
  EXPECT_EQ(r.metric_value, 0u);
  EXPECT_FALSE(r.tie);
  EXPECT_THROW((void)tier2_subspace_decode({}, book), std::invalid_argument);
}

TEST_F(MV1Fixture, ListDecodeRadii) {
  const BaseMatrix pkts{BaseVector(9, 1)};
  EXPECT_EQ(tier2_list_decode(pkts, book, 0).list, (std::vector<std::size_t>{1}));
  // The two components are at injection distance 1 from each other.
  EXPECT_EQ(tier2_list_decode(pkts, book, 1).list, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(tier2_list_decode(pkts, book, 9).list->size(), book.words.size());
}

TEST_F(MV1Fixture, SingleFlipInOnePacketTwoTierRecovers) {
  for (std::size_t msg = 0; msg < 2; ++msg) {
    const auto& v = book.words[msg].generator[0];
    for (std::size_t i = 0; i < 9; ++i) {
      const BaseMatrix pkts{flipped(v, {i})};
      const auto tt = two_tier_decode(pkts, u, book);
      EXPECT_EQ(tt.result.chosen, std::optional<std::size_t>(msg));
      EXPECT_EQ(tt.result.metric_value, 0u);
    }
  }
}

TEST_F(MV1Fixture, DisabledTierOneMatchesTierTwo) {
  TwoTierConfig cfg;
  cfg.tier1_enabled = false;
  const BaseMatrix pkts{flipped(BaseVector(9, 1), {0}), BaseVector(9, 0)};
  EXPECT_EQ(two_tier_decode(pkts, u, book, cfg).result, tier2_subspace_decode(pkts, book));
  const BaseMatrix clean{BaseVector(9, 1)};
  EXPECT_EQ(two_tier_decode(clean, u, book).result, tier2_subspace_decode(clean, book));
}

TEST_F(MV1Fixture, AllRejectedGivesFailureMarker) {
  TwoTierConfig cfg;
  cfg.mode = Tier1Mode::detect_only;
  const auto tt = two_tier_decode({BaseVector{1, 0, 0, 0, 0, 0, 0, 0, 0}}, u, book, cfg);
  EXPECT_FALSE(tt.result.chosen.has_value());
  EXPECT_EQ(tt.rejected, 1u);
}

TEST_F(MV1Fixture, FeedbackRecoversHeavilyCorruptedPacket) {
  const BaseVector sent(9, 1);
  const auto noisy = flipped(sent, {3, 4, 6, 8});
  EXPECT_EQ(tier1_decode(noisy, u, 1, Tier1Mode::correct).outcome, Outcome::rejected);

  TwoTierConfig cfg;
  cfg.feedback = true;
  cfg.list_radius = 0;
  const auto tt = two_tier_decode({sent, noisy}, u, book, cfg);
  ASSERT_TRUE(tt.feedback.has_value());
  EXPECT_EQ(tt.feedback->list, (std::vector<std::size_t>{1}));
  EXPECT_EQ(tt.feedback->restricted_min_distance, 9u);
  EXPECT_EQ(tt.feedback->restricted_radius, 4u);
  ASSERT_EQ(tt.feedback->verdicts.size(), 2u);
  EXPECT_EQ(tt.feedback->verdicts[1].outcome, Outcome::corrected);
  EXPECT_EQ(tt.feedback->verdicts[1].flips, 4u);
  EXPECT_EQ(tt.feedback->verdicts[1].vector, sent);
  EXPECT_EQ(tt.result.chosen, std::optional<std::size_t>(1));
  EXPECT_EQ(tt.verdicts[1].outcome, Outcome::rejected);
}

TEST(Decoders, KKRadiusZeroRejectsNonMember) {
  auto f = gf8();
  const auto book = build_codebook(kk_example(f));
  const auto u = build_union(book);
  std::size_t rejected = 0;
  for (unsigned bits = 0; bits < 64; ++bits) {
    BaseVector v(6);
    for (unsigned i = 0; i < 6; ++i) v[i] = (bits >> i) & 1;
    const auto r = tier1_decode(v, u, 0, Tier1Mode::correct);
    EXPECT_EQ(r.outcome == Outcome::valid, u.contains(v));
    rejected += r.outcome == Outcome::rejected;
  }
  EXPECT_EQ(rejected, 64u - 25u);
}

TEST(Decoders, CorrectOrEraseMarksTies) {
  auto f = gf8();
  const auto book = build_codebook(kk_example(f));
  const auto u = build_union(book);
  Tier1Options opt;
  opt.allow_radius_override = true;
  std::size_t erased = 0;
  for (unsigned bits = 0; bits < 64; ++bits) {
    BaseVector v(6);
    for (unsigned i = 0; i < 6; ++i) v[i] = (bits >> i) & 1;
    if (u.contains(v)) continue;
    std::size_t near = 0;
    for (const auto& w : u.sorted_vectors()) near += hamming_distance(v, w) == 1;
    const auto r = tier1_decode(v, u, 1, Tier1Mode::correct_or_erase, opt);
    const auto strict = tier1_decode(v, u, 1, Tier1Mode::correct, opt);
    if (near >= 2) {
      EXPECT_EQ(r.outcome, Outcome::erased);
      EXPECT_EQ(r.candidates, near);
      EXPECT_EQ(strict.outcome, Outcome::rejected);
      ++erased;
    } else if (near == 1) {
      EXPECT_EQ(r.outcome, Outcome::corrected);
    }
  }
  EXPECT_GT(erased, 0u);
}

TEST(Decoders, TierTwoInjectionDistanceWithExtraPacket) {
  auto f = gf8();
  const auto book = build_codebook(kk_example(f));
  const auto& basis = book.words[3].generator;
  auto pkts = basis;
  const auto r0 = tier2_subspace_decode(pkts, book);
  EXPECT_EQ(r0.chosen, std::optional<std::size_t>(3));
  EXPECT_EQ(r0.metric_value, 0u);
  for (unsigned bits = 1; bits < 64; ++bits) {
    BaseVector v(6);
    for (unsigned i = 0; i < 6; ++i) v[i] = (bits >> i) & 1;
    if (book.spaces[3].contains(v)) continue;
    pkts.push_back(v);
    break;
  }
  const auto received = Subspace::span(pkts, 6, 2);
  EXPECT_EQ(received.dimension(), 3u);
  EXPECT_EQ(injection_distance(received, book.spaces[3]), 1u);
  EXPECT_EQ(tier2_subspace_decode(pkts, book).metric_value, 1u);
}

TEST(Decoders, GabidulinRankDecodingCorrectsRankOneErrors) {
  auto f = gf8();
  const auto book = build_codebook(gabidulin(f, 3, 1));
  std::vector<std::vector<FieldElement>> rank_one;
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c) {
        std::vector<FieldElement> e{f->from_packed(a), f->from_packed(b), f->from_packed(c)};
        if (rank_over_base(e) == 1) rank_one.push_back(e);
      }
  EXPECT_EQ(rank_one.size(), 49u);  // (2^3 - 1)(2^3 - 1) rank-one 3x3 binary matrices
  for (std::size_t i = 0; i < book.words.size(); ++i) {
    for (const auto& e : rank_one) {
      std::vector<FieldElement> w;
      for (std::size_t s = 0; s < 3; ++s) w.push_back(book.words[i].symbols[s] + e[s]);
      const auto r = tier2_rank_decode(w, book);
      ASSERT_EQ(r.chosen, std::optional<std::size_t>(i));
      ASSERT_EQ(r.metric_value, 1u);
    }
  }
}

TEST(Decoders, GabidulinEquidistantWordTies) {
  auto f = gf8();
  const auto book = build_codebook(gabidulin(f, 2, 1));
  bool found = false;
  for (std::uint32_t a = 0; a < 8 && !found; ++a)
    for (std::uint32_t b = 0; b < 8 && !found; ++b) {
      std::vector<FieldElement> w{f->from_packed(a), f->from_packed(b)};
      const auto r = tier2_rank_decode(w, book);
      if (!r.tie) continue;
      found = true;
      EXPECT_GE(r.ties.size(), 2u);
      EXPECT_EQ(r.chosen, std::optional<std::size_t>(r.ties.front()));
      for (auto t : r.ties) EXPECT_EQ(rank_distance(w, book.words[t].symbols), r.metric_value);
    }
  EXPECT_TRUE(found);
}

TEST(Decoders, GabidulinTwoTierErasesRejectedSymbols) {
  auto f = gf8();
  const auto book = build_codebook(gabidulin(f, 3, 1));
  const auto u = build_union(book);
  const auto& word = book.words[5];
  const auto tt = two_tier_decode(component_matrix(word), u, book);
  EXPECT_EQ(tt.result.chosen, std::optional<std::size_t>(5));
  EXPECT_THROW((void)tier2_subspace_decode(component_matrix(word), book), SpecError);
  EXPECT_THROW((void)two_tier_decode(BaseMatrix{component_matrix(word)[0]}, u, book), std::invalid_argument);
}
