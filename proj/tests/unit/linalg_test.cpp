#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tiercode/linalg.hpp"

using namespace tiercode;
using namespace tiercode::testing;

TEST(Linalg, InverseModPrime) {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned a = 1; a < p; ++a) EXPECT_EQ(a * linalg::inv_mod(a, p) % p, 1u);
}

TEST(Linalg, ReduceGivesCanonicalEchelon) {
  const BaseMatrix m{{1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}};
  const auto e = linalg::reduce(m, 4, 2);
  EXPECT_EQ(e.rows, (BaseMatrix{{1, 0, 1, 1}, {0, 1, 1, 0}}));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(linalg::rank(m, 4, 2), 2u);
}

TEST(Linalg, RankIsRowOrderInvariant) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    BaseMatrix m;
    for (int i = 0; i < 4; ++i) m.push_back(random_vector(rng, 6, 3));
    auto swapped = m;
    std::swap(swapped[0], swapped[3]);
    EXPECT_EQ(linalg::reduce(m, 6, 3).rows, linalg::reduce(swapped, 6, 3).rows);
  }
}

TEST(Linalg, InverseAndSolve) {
  std::mt19937_64 rng(11);
  int invertible = 0;
  for (int t = 0; t < 300; ++t) {
    BaseMatrix m;
    for (int i = 0; i < 3; ++i) m.push_back(random_vector(rng, 3, 5));
    const auto inv = linalg::inverse(m, 5);
    EXPECT_EQ(inv.has_value(), linalg::rank(m, 3, 5) == 3);
    if (!inv) continue;
    ++invertible;
    for (std::size_t i = 0; i < 3; ++i) {
      BaseVector row(3, 0);
      for (std::size_t k = 0; k < 3; ++k) linalg::axpy(row, (*inv)[i][k], m[k], 5);
      BaseVector unit(3, 0);
      unit[i] = 1;
      EXPECT_EQ(row, unit);
    }
    const auto target = random_vector(rng, 3, 5);
    const auto c = linalg::solve_left(m, target, 5);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(linalg::combine(*c, m, 3, 5), target);
  }
  EXPECT_GT(invertible, 0);
}

TEST(Linalg, SolveLeftOutsideSpan) {
  const BaseMatrix rows{{1, 0, 0}, {0, 1, 0}};
  EXPECT_FALSE(linalg::solve_left(rows, BaseVector{0, 0, 1}, 2).has_value());
}
