#include <gtest/gtest.h>

#include <random>

#include "gelfand/algebra.hpp"
#include "gelfand/errors.hpp"

namespace gelfand {
namespace {

RationalMatrix symplectic(std::uint32_t n) {
  RationalMatrix j(n);
  const std::uint32_t h = n / 2;
  for (std::uint32_t i = 0; i < h; ++i) {
    j(i, h + i) = 1;
    j(h + i, i) = -1;
  }
  return j;
}

RationalMatrix unit(std::uint32_t n, std::uint32_t r, std::uint32_t c) {
  RationalMatrix e(n);
  e(r, c) = 1;
  return e;
}

TEST(FixedSpace, Examples) {
  EXPECT_EQ(fixed_space_dim(RationalMatrix::identity(2)), 3u);
  EXPECT_EQ(fixed_space_dim(RationalMatrix::from_ints(2, {0, 1, -1, 0})), 1u);
  EXPECT_EQ(fixed_space_dim(symplectic(4)), 6u);
  EXPECT_EQ(fixed_space_dim(RationalMatrix::identity(5)), 15u);
  EXPECT_THROW(fixed_space_dim(RationalMatrix::from_ints(2, {1, 2, 2, 4})), SingularMatrix);
}

// Counts the fixed space of A -> g A^T g^-1 directly, by applying the map to
// the n^2 unit matrices and taking the rank of (sigma - 1).
std::size_t oracle_fixed_dim(const RationalMatrix& g) {
  const AntiInvolutionData d{g};
  const std::uint32_t n = g.dim();
  std::vector<std::vector<Rational>> cols;
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t c = 0; c < n; ++c) {
      const RationalMatrix e = unit(n, r, c);
      const RationalMatrix s = d.apply(e);
      std::vector<Rational> v;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) v.push_back(s(i, j) - e(i, j));
      cols.push_back(v);
    }
  // rational Gaussian elimination on the rows
  std::size_t rank = 0;
  const std::size_t m = cols.size(), w = cols[0].size();
  for (std::size_t c = 0; c < w && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && cols[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(cols[piv], cols[rank]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || cols[r][c] == 0) continue;
      const Rational f = cols[r][c] / cols[rank][c];
      for (std::size_t k = 0; k < w; ++k) cols[r][k] -= f * cols[rank][k];
    }
    ++rank;
  }
  return std::size_t(n) * n - rank;
}

TEST(FixedSpace, AgreesWithDirectOracle) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      const RationalMatrix g = random_invertible(n, rng);
      EXPECT_EQ(fixed_space_dim(g), oracle_fixed_dim(g));
    }
    const RationalMatrix s = random_symmetric_invertible(n, rng);
    EXPECT_EQ(fixed_space_dim(s), oracle_fixed_dim(s));
  }
  EXPECT_EQ(oracle_fixed_dim(symplectic(4)), 6u);
}

TEST(FixedSpace, RandomBoundAndClassification) {
  std::mt19937_64 rng(99);
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const std::size_t top = n * (n + 1) / 2;
    for (int t = 0; t < 50; ++t) {
      const RationalMatrix g = random_invertible(n, rng);
      ASSERT_TRUE(is_invertible(g));
      EXPECT_LE(fixed_space_dim(g), top);
    }
    for (int t = 0; t < 5; ++t) {
      const RationalMatrix g = random_symmetric_invertible(n, rng);
      EXPECT_EQ(g, g.transpose());
      EXPECT_EQ(classify_anti_involution(g), AntiInvolutionClass::Symmetric);
      EXPECT_EQ(fixed_space_dim(g), top);
    }
    if (n % 2 == 0) {
      for (int t = 0; t < 5; ++t) {
        const RationalMatrix g = random_skew_invertible(n, rng);
        EXPECT_EQ(g, -g.transpose());
        EXPECT_EQ(classify_anti_involution(g), AntiInvolutionClass::Skew);
        EXPECT_EQ(fixed_space_dim(g), n * (n - 1) / 2);
      }
    }
  }
  EXPECT_THROW(random_skew_invertible(3, rng), std::invalid_argument);
}

TEST(Classification, Examples) {
  EXPECT_EQ(classify_anti_involution(RationalMatrix::identity(2)), AntiInvolutionClass::Symmetric);
  EXPECT_EQ(classify_anti_involution(symplectic(4)), AntiInvolutionClass::Skew);
  const RationalMatrix u = RationalMatrix::from_ints(2, {1, 1, 0, 1});
  EXPECT_EQ(classify_anti_involution(u), AntiInvolutionClass::NotInvolution);
  // sigma^2(E_12) != E_12 for this g
  const AntiInvolutionData d{u};
  EXPECT_NE(d.apply(d.apply(unit(2, 0, 1))), unit(2, 0, 1));
  EXPECT_STREQ(to_string(AntiInvolutionClass::Skew), "skew");
}

TEST(LinearAlgebra, RankAndInverse) {
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_rank({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(integer_rank({{2, 1, 0}, {0, 3, 1}, {1, 0, 5}}), 3u);
  const RationalMatrix a = RationalMatrix::from_ints(3, {2, 1, 0, 0, 3, 1, 1, 0, 5});
  EXPECT_EQ(a * rational_inverse(a), RationalMatrix::identity(3));
  EXPECT_THROW(rational_inverse(RationalMatrix::from_ints(2, {1, 2, 2, 4})), SingularMatrix);
}

TEST(RankOne, Examples) {
  const RankOneBound torus = rank_one_lower_bound(SemisimpleProfile::make({1, 1, 1, 2}, 6));
  EXPECT_EQ(torus.epsilon, Fraction(1, 7));
  EXPECT_EQ(torus.bound, 3);
  EXPECT_EQ(torus.rank_one, 3u);
  EXPECT_TRUE(torus.holds);

  const RankOneBound trivial = rank_one_lower_bound(SemisimpleProfile::make({1, 1, 1, 1}, 4));
  EXPECT_EQ(trivial.epsilon, Fraction(0));
  EXPECT_EQ(trivial.bound, 4);
  EXPECT_TRUE(trivial.holds);

  const RankOneBound vacuous = rank_one_lower_bound(SemisimpleProfile::make({2}, 3));
  EXPECT_EQ(vacuous.epsilon, Fraction(1, 4));
  EXPECT_EQ(vacuous.bound, 0);
  EXPECT_TRUE(vacuous.holds);

  EXPECT_FALSE(rank_one_lower_bound(SemisimpleProfile::make({2, 2}, 8)).holds);
}

TEST(RankK, Examples) {
  const RankKBound big = rank_k_upper_bound(SemisimpleProfile::make({3}, 6), 3);
  EXPECT_TRUE(big.applicable);
  EXPECT_EQ(big.epsilon, Fraction(2, 3));
  EXPECT_EQ(big.bound, Fraction(45));
  EXPECT_EQ(big.high_rank_dim, 9u);
  EXPECT_TRUE(big.holds);

  const RankKBound ones = rank_k_upper_bound(SemisimpleProfile::make({1, 1, 1}, 3), 3);
  EXPECT_TRUE(ones.applicable);
  EXPECT_GE(ones.bound, Fraction(3));
  EXPECT_TRUE(ones.holds);

  EXPECT_FALSE(rank_k_upper_bound(SemisimpleProfile::make({1, 1, 1, 1, 1}, 1), 3).applicable);
  EXPECT_THROW(rank_k_upper_bound(SemisimpleProfile::make({3}, 6), 2), std::invalid_argument);
}

// Block-permutation model: A = prod M_{n_i} with sigma either transposing a
// block in place (symmetric, n(n+1)/2) or swapping two equal blocks (n^2).
TEST(BlockBounds, SyntheticProfilesSatisfyBothBounds) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> blocks;
    std::uint64_t fixed = 0;
    const int parts = 1 + int(rng() % 6);
    for (int i = 0; i < parts; ++i) {
      const std::uint64_t n = 1 + rng() % 4;
      switch (rng() % 3) {
        case 0:  // symmetric type
          blocks.push_back(n);
          fixed += n * (n + 1) / 2;
          break;
        case 1:  // skew type needs even rank
          blocks.push_back(n);
          fixed += n % 2 ? n * (n + 1) / 2 : n * (n - 1) / 2;
          break;
        default:  // swapped pair
          blocks.push_back(n);
          blocks.push_back(n);
          fixed += n * n;
      }
    }
    const SemisimpleProfile p = SemisimpleProfile::make(blocks, fixed);
    ASSERT_TRUE(rank_one_lower_bound(p).holds);
    for (std::uint32_t k = 3; k <= 5; ++k) {
      const RankKBound b = rank_k_upper_bound(p, k);
      if (b.applicable) ASSERT_TRUE(b.holds);
    }
  }
}

TEST(HeckeProfile, FromMultiplicities) {
  MultiplicityReport m;
  m.mults = {{0, 1, 1}, {1, 1, 0}, {2, 2, 1}, {3, 3, 2}, {4, 3, 1}, {5, 2, 0}};
  m.num_constituents = 4;
  m.num_mult_one = 3;
  m.sum_m_sq = 7;
  const SigmaOnZ z{{0, 1, 2, 3, 4, 6, 5}, 5};
  const SemisimpleProfile p = hecke_profile(m, z);
  EXPECT_EQ(p.dimA, 7u);
  EXPECT_EQ(p.fixed_dim, 6u);
  EXPECT_EQ(p.rank_one_count(), 3u);

  const EpsGelfandCheck e = eps_gelfand_check(m, z);
  EXPECT_EQ(e.epsilon, Fraction(1, 7));
  EXPECT_EQ(e.bound, Fraction(3, 7));
  EXPECT_EQ(e.fraction, Fraction(3, 4));
  EXPECT_TRUE(e.holds);

  const SigmaOnZ wrong{{0, 1, 2}, 3};
  EXPECT_THROW(hecke_profile(m, wrong), InvariantViolation);

  MultiplicityReport one;
  one.mults = {{0, 1, 1}};
  one.num_constituents = one.num_mult_one = 1;
  one.sum_m_sq = 1;
  const SemisimpleProfile single = hecke_profile(one, SigmaOnZ{{0}, 1});
  EXPECT_EQ(single.blocks, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(single.dimA, 1u);
  EXPECT_EQ(single.fixed_dim, 1u);
}

}  // namespace
}  // namespace gelfand
