#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "gelfand/chartab.hpp"
#include "gelfand/cosets.hpp"

namespace gelfand {
namespace {

using u64 = std::uint64_t;

std::shared_ptr<const Field> field_of(std::uint32_t q) {
  return std::make_shared<const Field>(ff_make_order(q));
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }
u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}
u64 invmod(u64 a, u64 m) { return powmod(a, m - 2, m); }

GroupTable s3_in_gl3() {
  const auto F = field_of(5);
  return group_generate(F, {mat_from_ints(*F, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}),
                            mat_from_ints(*F, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0})});
}

std::vector<u64> sorted_degrees(const CharacterTable& t) {
  std::vector<u64> d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

void check_orthogonality(const CharacterTable& t) {
  const u64 l = t.modulus;
  const std::size_t r = t.count();
  ASSERT_EQ(t.table.size(), r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k) {
        s = (s + mulmod(t.class_sizes[k], mulmod(t.table[i][k], t.table[j][t.inverse_class[k]], l),
                        l)) % l;
      }
      EXPECT_EQ(s, i == j ? t.group_order % l : 0u);
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t m = 0; m < r; ++m) {
      u64 s = 0;
      for (std::size_t i = 0; i < r; ++i) {
        s = (s + mulmod(t.table[i][k], t.table[i][t.inverse_class[m]], l)) % l;
      }
      EXPECT_EQ(s, k == m ? (t.group_order / t.class_sizes[k]) % l : 0u);
    }
  }
  u64 sum = 0;
  for (u64 d : t.degrees) sum += d * d;
  EXPECT_EQ(sum, t.group_order);
}

TEST(ClassAlgebra, S3Coefficients) {
  const GroupTable G = s3_in_gl3();
  ASSERT_EQ(G.order(), 6u);
  const ClassData cd = class_data(G);
  ASSERT_EQ(cd.count(), 3u);

  // oracle over permutations of {0,1,2}
  std::array<int, 3> p{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto is_transposition = [](const std::array<int, 3>& a) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i) fixed += a[i] == i;
    return fixed == 1;
  };
  int oracle = 0;
  for (const auto& x : perms)
    for (const auto& y : perms) {
      std::array<int, 3> xy;
      for (int i = 0; i < 3; ++i) xy[i] = x[y[i]];
      oracle += is_transposition(x) && is_transposition(y) && xy == std::array<int, 3>{0, 1, 2};
    }
  EXPECT_EQ(oracle, 3);

  std::uint32_t tcls = 0;
  for (std::uint32_t c = 0; c < cd.count(); ++c)
    if (cd.size(c) == 3) tcls = c;
  const auto a = class_mult_coeffs(G, cd, tcls, tcls);
  EXPECT_EQ(a[cd.identity_class], u64(oracle));

  for (std::uint32_t i = 0; i < cd.count(); ++i) {
    for (std::uint32_t j = 0; j < cd.count(); ++j) {
      const auto v = class_mult_coeffs(G, cd, i, j);
      u64 mass = 0;
      for (std::uint32_t k = 0; k < cd.count(); ++k) mass += v[k] * cd.size(k);
      EXPECT_EQ(mass, cd.size(i) * cd.size(j));
      if (i == cd.identity_class) {
        for (std::uint32_t k = 0; k < cd.count(); ++k) EXPECT_EQ(v[k], u64(j == k));
      }
    }
  }
  const auto M = class_matrix(G, cd, tcls);
  for (std::uint32_t j = 0; j < cd.count(); ++j) EXPECT_EQ(M[j], class_mult_coeffs(G, cd, tcls, j));
}

TEST(Dixon, SmallGroups) {
  const auto F = field_of(7);
  const GroupTable C3 = group_generate(F, {mat_from_ints(*F, 1, {2})});
  ASSERT_EQ(C3.order(), 3u);
  const CharacterTable t3 = dixon_table(C3, class_data(C3));
  EXPECT_EQ(sorted_degrees(t3), (std::vector<u64>{1, 1, 1}));
  check_orthogonality(t3);

  const GroupTable S3 = s3_in_gl3();
  const CharacterTable ts = dixon_table(S3, class_data(S3));
  EXPECT_EQ(sorted_degrees(ts), (std::vector<u64>{1, 1, 2}));
  check_orthogonality(ts);

  const GroupTable trivial = group_generate(F, {mat_identity(1)});
  const CharacterTable tt = dixon_table(trivial, class_data(trivial));
  EXPECT_EQ(tt.degrees, (std::vector<u64>{1}));
}

TEST(Dixon, Gl2F3) {
  const GroupTable G = enumerate_gl(2, field_of(3));
  const ClassData cd = class_data(G);
  EXPECT_EQ(cd.exponent, 24u);
  const CharacterTable t = dixon_table(G, cd);
  EXPECT_EQ(t.modulus, choose_char_modulus(cd.exponent, G.order()));
  EXPECT_EQ(t.modulus % cd.exponent, 1u);
  EXPECT_GT(t.modulus, 2 * G.order());
  EXPECT_EQ(sorted_degrees(t), (std::vector<u64>{1, 1, 2, 2, 2, 3, 3, 4}));
  check_orthogonality(t);
  EXPECT_EQ(powmod(t.root, cd.exponent, t.modulus), 1u);
  EXPECT_NE(powmod(t.root, cd.exponent / 2, t.modulus), 1u);
  EXPECT_NE(powmod(t.root, cd.exponent / 3, t.modulus), 1u);

  // class-intersection formula
  // a_ijk = |C_i||C_j|/|G| sum_chi chi(g_i) chi(g_j) chi(g_k^-1) / chi(1)
  const u64 l = t.modulus;
  for (std::uint32_t i = 0; i < cd.count(); ++i) {
    for (std::uint32_t j = 0; j < cd.count(); ++j) {
      const auto a = class_mult_coeffs(G, cd, i, j);
      for (std::uint32_t k = 0; k < cd.count(); ++k) {
        u64 s = 0;
        for (std::size_t c = 0; c < t.count(); ++c) {
          const u64 term = mulmod(mulmod(t.table[c][i], t.table[c][j], l),
                                  t.table[c][t.inverse_class[k]], l);
          s = (s + mulmod(term, invmod(t.degrees[c], l), l)) % l;
        }
        s = mulmod(s, mulmod(cd.size(i) * cd.size(j) % l, invmod(G.order() % l, l), l), l);
        ASSERT_EQ(s, a[k] % l);
      }
    }
  }
}

TEST(Dixon, LargerTablesAreOrthogonal) {
  for (std::uint32_t q : {5u, 7u}) {
    const GroupTable G = enumerate_gl(2, field_of(q));
    const CharacterTable t = dixon_table(G, class_data(G));
    // q-1 linear, q-1 Steinberg twists, (q-1)(q-2)/2 principal series, q(q-1)/2 cuspidal
    EXPECT_EQ(t.count(), (q - 1) + (q - 1) + (q - 1) * (q - 2) / 2 + q * (q - 1) / 2);
    check_orthogonality(t);
  }
}

TEST(Dixon, ModulusSearch) {
  EXPECT_EQ(choose_char_modulus(24, 48), 97u);
  EXPECT_EQ(choose_char_modulus(2, 3), 7u);
  EXPECT_THROW(choose_char_modulus(std::uint64_t(1) << 32, 1), std::runtime_error);
}

std::vector<u64> oracle_permutation_character(const SymPair& p, const ClassData& cd) {
  const GroupTable& G = *p.G;
  std::vector<u64> out;
  for (std::uint32_t rep : cd.classes.reps) {
    u64 fixing = 0;
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      const Mat conj = G.mul(G.mul(G[G.inverse_index(x)], G[rep]), G[x]);
      fixing += p.in_h[G.index_of(conj)];
    }
    out.push_back(fixing / p.H->order());
  }
  return out;
}

TEST(PermutationCharacter, Torus) {
  const SymPair p = build_pair(InvolutionSpec::inner_diag(1, 1), 2, 3);
  const ClassData cd = class_data(*p.G);
  const auto pi = permutation_character(p, cd);
  EXPECT_EQ(pi, oracle_permutation_character(p, cd));
  EXPECT_EQ(pi[cd.identity_class], 12u);

  const CharacterTable t = dixon_table(*p.G, cd);
  std::size_t triv = t.count();
  for (std::size_t c = 0; c < t.count(); ++c) {
    bool all_one = true;
    for (u64 v : t.table[c]) all_one = all_one && v == 1;
    if (all_one) triv = c;
  }
  ASSERT_LT(triv, t.count());
  EXPECT_EQ(class_inner_product(t, pi, t.table[triv]), 1u);

  const MultiplicityReport m = multiplicities(t, pi);
  EXPECT_EQ(m.sum_m_sq, 7u);
  EXPECT_EQ(m.sum_m_deg, 12u);
  EXPECT_EQ(m.num_constituents, 4u);
  EXPECT_EQ(m.num_mult_one, 3u);
  std::size_t twos = 0;
  for (const Multiplicity& mu : m.mults) {
    if (mu.mult == 2) {
      ++twos;
      EXPECT_EQ(mu.degree, 3u);
    }
    EXPECT_LE(mu.mult, 2u);
  }
  EXPECT_EQ(twos, 1u);
}

TEST(PermutationCharacter, CrossModuleIdentities) {
  for (const SymPair& p : {build_pair(InvolutionSpec::inner_diag(1, 1), 2, 5),
                           build_pair(InvolutionSpec::transpose_inverse(), 2, 5),
                           build_pair(InvolutionSpec::symplectic_twist(), 2, 5)}) {
    const ClassData cd = class_data(*p.G);
    const auto pi = permutation_character(p, cd);
    EXPECT_EQ(pi, oracle_permutation_character(p, cd));
    const MultiplicityReport m = multiplicities(dixon_table(*p.G, cd), pi);
    const DoubleCosetPartition part = enumerate_double_cosets(p);
    EXPECT_EQ(m.sum_m_sq, part.count());
    EXPECT_EQ(m.sum_m_deg, p.index());
    bool mult_free = true;
    for (const Multiplicity& mu : m.mults) mult_free = mult_free && mu.mult <= 1;
    EXPECT_EQ(mult_free, is_commutative(hecke_structure(p, part)));
  }
}

TEST(PermutationCharacter, WholeGroup) {
  const auto F = field_of(3);
  auto G = std::make_shared<const GroupTable>(enumerate_gl(2, F));
  // theta = identity on G realised as conjugation by the scalar -1
  const SymPair p = build_pair_from_group("self", InvolutionSpec::inner_diag(0, 2), G);
  ASSERT_EQ(p.H->order(), G->order());
  const ClassData cd = class_data(*G);
  const MultiplicityReport m = multiplicities(dixon_table(*G, cd), permutation_character(p, cd));
  EXPECT_EQ(m.num_constituents, 1u);
  EXPECT_EQ(m.num_mult_one, 1u);
  EXPECT_EQ(m.sum_m_deg, 1u);
}

}  // namespace
}  // namespace gelfand
