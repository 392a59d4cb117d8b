#include <gtest/gtest.h>

#include "support.hpp"
#include "tiercode/lemmas.hpp"

using namespace tiercode;
using namespace tiercode::testing;

namespace {

LemmaReport run(const CodeSpec& spec, LemmaOptions opt = {}) {
  const auto book = build_codebook(spec);
  return verify_lemmas(book, build_union(book), opt);
}

}  // namespace

TEST(Lemmas, KKExampleAllPass) {
  auto f = gf8();
  const auto r = run(kk_example(f));
  EXPECT_TRUE(r.all_pass());
  ASSERT_NE(r.find("kk.union_count"), nullptr);
  EXPECT_EQ(r.find("kk.union_count")->measured, 25u);
  EXPECT_EQ(r.find("kk.union_distance")->measured, 1u);
  EXPECT_EQ(r.find("kk.c0_bound")->measured, 2u);
}

TEST(Lemmas, MV1AllPass) {
  auto f = gf8();
  const auto r = run(mv1(f));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.find("mv.union_distance_bound")->measured, 3u);
  EXPECT_EQ(r.find("mv.union_distance_bound")->bound, 3u);
  EXPECT_FALSE(r.find("mv.union_distance_bound")->informational);
}

TEST(Lemmas, GabidulinChecks) {
  auto f = gf8();
  for (auto [n, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{3u, 2u}}) {
    const auto r = run(gabidulin(f, n, k));
    EXPECT_TRUE(r.all_pass()) << n << "," << k;
    EXPECT_EQ(r.find("gabidulin.mrd")->measured, n - k + 1);
  }
}

TEST(Lemmas, ReedSolomonAlphasMeetBoundWithEquality) {
  auto f = gf625();
  LemmaOptions opt;
  opt.rs_construction = true;
  const KKSpec kk{f, 5, 4, 2, 1, {f->parse("1111"), f->parse("1234")}};
  const auto r = run(kk, opt);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.find("kk.c0_rs_equality")->measured, 3u);

  const MVSpec mv{f, 5, 2, 2, 2, 1, {f->parse("1111"), f->parse("1234")}, MvLayout::uncompressed};
  const auto rm = run(mv, opt);
  EXPECT_TRUE(rm.all_pass());
  EXPECT_EQ(rm.find("mv.c0_rs_equality")->measured, 3u);
}

TEST(Lemmas, RsEqualityFailsForNonRsAlphas) {
  auto f = FieldContext::create(2, {1, 1, 0, 0, 1});
  LemmaOptions opt;
  opt.rs_construction = true;
  const KKSpec kk{f, 2, 4, 2, 1, {f->one(), f->gamma_pow(5)}};
  const auto r = run(kk, opt);
  EXPECT_FALSE(r.find("kk.c0_rs_equality")->pass);
  EXPECT_FALSE(r.all_pass());
}

TEST(Lemmas, CustomBasisMakesL8Informational) {
  auto p = gf8();
  const BaseMatrix normal{p->gamma_pow(5).coeffs(), p->gamma_pow(3).coeffs(), p->gamma_pow(6).coeffs()};
  auto f = FieldContext::create(2, {1, 1, 0, 1}, normal);
  const auto r = run(mv1(f));
  EXPECT_TRUE(r.find("mv.union_distance_bound")->informational);
}

TEST(Lemmas, MrdLinearShortcutAgreesWithPairs) {
  auto f = gf8();
  const auto book = build_codebook(gabidulin(f, 3, 2));
  const auto u = build_union(book);
  LemmaOptions opt;
  opt.mrd_pairwise_limit = 1;
  EXPECT_EQ(verify_lemmas(book, u, opt).find("gabidulin.mrd")->measured, min_rank_distance(book));
}
