#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tiercode/codes.hpp"
#include "tiercode/linalg.hpp"

using namespace tiercode;
using namespace tiercode::testing;

TEST(Codes, KKExampleZeroComponent) {
  auto f = gf8();
  const auto spec = kk_example(f);
  const auto c0 = kk_encode(spec, std::vector<FieldElement>{f->zero()});
  ASSERT_EQ(c0.row_entries.size(), 2u);
  EXPECT_EQ(c0.row_entries[0], (std::vector<FieldElement>{f->gamma_pow(3), f->zero()}));
  EXPECT_EQ(c0.row_entries[1], (std::vector<FieldElement>{f->gamma_pow(4), f->zero()}));

  // Every GF(2)-combination of the rows, written back as field pairs.
  std::set<std::uint32_t> firsts;
  for (const auto& v : Subspace::span(c0.generator, 6, 2).elements()) {
    EXPECT_EQ(f->from_vector(std::span(v).subspan(3)), f->zero());
    firsts.insert(f->from_vector(std::span(v).first(3)).packed());
  }
  const std::set<std::uint32_t> expected{0, f->gamma_pow(3).packed(), f->gamma_pow(4).packed(),
                                         f->gamma_pow(6).packed()};
  EXPECT_EQ(firsts, expected);
}

TEST(Codes, KKRowsAreAlphaAndEvaluation) {
  auto f = gf8();
  const auto spec = kk_example(f);
  for (const auto& u0 : f->elements()) {
    const auto c = kk_encode(spec, std::vector<FieldElement>{u0});
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_EQ(c.row_entries[i][0], spec.alphas[i]);
      EXPECT_EQ(c.row_entries[i][1], u0 * spec.alphas[i]);
    }
  }
}

TEST(Codes, GabidulinComponentMatrix) {
  auto f = gf8();
  GabidulinSpec spec{f, 2, 3, 2, 1, {f->gamma_pow(3), f->gamma_pow(4)}};
  const auto c = gabidulin_encode(spec, std::vector<FieldElement>{f->one()});
  EXPECT_EQ(c.symbols, (std::vector<FieldElement>{f->gamma_pow(3), f->gamma_pow(4)}));
  EXPECT_EQ(component_matrix(c), (BaseMatrix{{1, 1, 0}, {0, 1, 1}}));
}

TEST(Codes, GabidulinEncodingIsLinearizedEvaluation) {
  auto f = gf8();
  const auto spec = gabidulin(f, 3, 2);
  for (std::uint64_t idx = 0; idx < message_count(spec); idx += 5) {
    const auto u = message_at(spec, idx);
    const auto c = gabidulin_encode(spec, u);
    for (unsigned i = 0; i < 3; ++i) {
      const auto g = spec.generators[i];
      EXPECT_EQ(c.symbols[i], u[0] * g + u[1] * g * g);
    }
  }
}

TEST(Codes, MV1Generators) {
  auto f = gf8();
  const auto spec = mv1(f);
  EXPECT_EQ(ambient_length(packet_layout(CodeSpec{spec})), 9u);
  const auto c0 = mv_encode(spec, std::vector<FieldElement>{f->zero()});
  EXPECT_EQ(c0.generator, (BaseMatrix{{1, 1, 1, 0, 0, 0, 0, 0, 0}}));
  const auto c1 = mv_encode(spec, std::vector<FieldElement>{f->one()});
  EXPECT_EQ(c1.row_entries[0], (std::vector<FieldElement>(3, f->gamma_pow(5))));
  EXPECT_EQ(c1.generator, (BaseMatrix{BaseVector(9, 1)}));
}

TEST(Codes, MV2LayoutLengths) {
  auto f = gf729();
  EXPECT_EQ(ambient_length(packet_layout(CodeSpec{mv2(f, MvLayout::uncompressed)})), 36u);
  EXPECT_EQ(ambient_length(packet_layout(CodeSpec{mv2(f, MvLayout::compressed)})), 21u);
  EXPECT_NO_THROW(validate(mv2(f, MvLayout::compressed)));
  const auto book = build_codebook(mv2(f, MvLayout::compressed));
  EXPECT_EQ(book.words.size(), 3u);
  for (const auto& s : book.spaces) EXPECT_EQ(s.dimension(), 2u);
}

TEST(Codes, MVRowsBeyondFirstAreNormalizedBySubfieldRatio) {
  auto f = gf729();
  const auto spec = mv2(f, MvLayout::uncompressed);
  const auto c = mv_encode(spec, std::vector<FieldElement>{f->one()});
  // u(x) = x: every later entry of row 1 is alpha_1 / alpha_1 = 1.
  for (unsigned j = 1; j <= spec.L; ++j) EXPECT_EQ(c.row_entries[1][j], f->one());
  for (unsigned j = 1; j <= spec.L; ++j) EXPECT_EQ(c.row_entries[0][j], spec.alphas[0]);
}

TEST(Codes, ValidationRejectsBadSpecs) {
  auto f = gf8();
  auto kk = kk_example(f);
  kk.alphas[1] = kk.alphas[0];
  EXPECT_THROW(validate(kk), SpecError);
  kk = kk_example(f);
  kk.k = 3;
  EXPECT_THROW(validate(kk), SpecError);
  kk = kk_example(f);
  kk.alphas.pop_back();
  EXPECT_THROW(validate(kk), SpecError);

  auto g = gabidulin(f, 3, 1);
  g.generators[2] = g.generators[0] + g.generators[1] + g.generators[1];
  EXPECT_THROW(validate(g), SpecError);
  g = gabidulin(f, 3, 4);
  EXPECT_THROW(validate(g), SpecError);

  auto mv = mv1(f);
  mv.q = 3;
  EXPECT_THROW(validate(mv), SpecError);

  auto big = gf729();
  auto bad = mv2(big, MvLayout::uncompressed);
  bad.k = 2;
  bad.alphas[1] = big->gamma_pow(1);  // u(a)/a = u_0 + u_1 a^2 leaves GF(27)
  EXPECT_THROW(validate(bad), SpecError);
  bad = mv2(big, MvLayout::compressed);
  bad.alphas[0] = big->gamma_pow(1);  // later blocks of row 0 no longer fit GF(27)
  EXPECT_THROW(validate(bad), SpecError);
}

TEST(Codes, MessageIndexRoundTrip) {
  auto f = gf8();
  const CodeSpec kk = kk_example(f);
  const CodeSpec g = gabidulin(f, 3, 2);
  for (const auto& spec : {kk, g}) {
    for (std::uint64_t i = 0; i < message_count(spec); ++i) EXPECT_EQ(message_index(spec, message_at(spec, i)), i);
  }
  EXPECT_EQ(message_count(kk), 8u);
  EXPECT_EQ(message_count(g), 64u);
  EXPECT_EQ(message_at(kk, 1), (std::vector<FieldElement>{f->one()}));
  EXPECT_EQ(message_count(CodeSpec{mv1(f)}), 2u);
  EXPECT_THROW((void)message_index(CodeSpec{mv1(f)}, std::vector<FieldElement>{f->gamma_pow(1)}), SpecError);
}

TEST(Codes, CodebookBudgetAndDistinctSpaces) {
  auto f = gf8();
  EXPECT_THROW((void)build_codebook(kk_example(f), 4), BudgetExceeded);
  const auto book = build_codebook(kk_example(f));
  ASSERT_EQ(book.words.size(), 8u);
  for (std::size_t i = 0; i < book.spaces.size(); ++i)
    for (std::size_t j = i + 1; j < book.spaces.size(); ++j) EXPECT_FALSE(book.spaces[i] == book.spaces[j]);
  EXPECT_EQ(book.ambient_len, 6u);
  EXPECT_EQ(book.p, 2u);
}

TEST(Codes, PackVectorRejectsEntriesOutsideSubfield) {
  auto f = gf729();
  const PacketLayout layout{{6, 0}, {3, 3}};
  const std::vector<FieldElement> ok{f->gamma_pow(1), f->gamma_pow(28)};
  EXPECT_EQ(pack_vector(ok, layout).size(), 9u);
  const std::vector<FieldElement> bad{f->gamma_pow(1), f->gamma_pow(1)};
  EXPECT_THROW((void)pack_vector(bad, layout), SpecError);
}
