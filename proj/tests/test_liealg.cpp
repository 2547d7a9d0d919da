#include "generators.hpp"

#include <gtest/gtest.h>

using namespace a2l2;
using a2l2::testing::random_sl;

TEST(Bracket, ElementaryIdentities) {
  const int n = 3;
  EXPECT_EQ(bracket(E(n, 1, 2), E(n, 2, 3)), E(n, 1, 3));
  EXPECT_EQ(bracket(E(n, 1, 2), E(n, 2, 1)), H(n, 1));
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    LieElt a = random_sl(rng, 5);
    EXPECT_TRUE(bracket(a, a).is_zero());
  }
}

TEST(Bracket, RankMismatchThrows) { EXPECT_THROW(bracket(E(3, 1, 2), E(5, 1, 2)), Error); }

TEST(InvariantForm, Examples) {
  const int n = 3;
  EXPECT_EQ(invariant_form(E(n, 1, 2), E(n, 2, 1)), 1);
  EXPECT_EQ(invariant_form(H(n, 1), H(n, 1)), 2);
  EXPECT_EQ(invariant_form(E(n, 1, 2), E(n, 1, 2)), 0);
  EXPECT_THROW(invariant_form(E(3, 1, 2), E(5, 2, 1)), Error);
}

TEST(InvariantForm, AdInvariance) {
  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    LieElt x = random_sl(rng, 5), a = random_sl(rng, 5), b = random_sl(rng, 5);
    EXPECT_EQ(invariant_form(bracket(x, a), b) + invariant_form(a, bracket(x, b)), 0);
    EXPECT_EQ(invariant_form(a, b), invariant_form(b, a));
  }
}

TEST(Nu, Examples) {
  for (int l = 1; l <= 3; ++l) {
    const int n = 2 * l + 1;
    EXPECT_EQ(nu(E(n, 1, n)), -E(n, 1, n));
    for (int i = 1; i < n; ++i) EXPECT_EQ(nu(H(n, i)), H(n, n - i));
  }
  EXPECT_EQ(nu(E(3, 2, 3)), E(3, 1, 2));
}

TEST(Nu, IsAnInvolution) {
  std::mt19937 rng(13);
  for (int l = 1; l <= 3; ++l)
    for (int t = 0; t < 30; ++t) {
      LieElt a = random_sl(rng, 2 * l + 1);
      EXPECT_EQ(nu(nu(a)), a);
    }
}

TEST(Nu, PreservesBracketAndForm) {
  std::mt19937 rng(14);
  int failures = 0;
  for (int l = 1; l <= 3; ++l)
    for (int t = 0; t < 200; ++t) {
      LieElt a = random_sl(rng, 2 * l + 1), b = random_sl(rng, 2 * l + 1);
      if (!(nu(bracket(a, b)) == bracket(nu(a), nu(b)))) ++failures;
      if (invariant_form(nu(a), nu(b)) != invariant_form(a, b)) ++failures;
    }
  EXPECT_EQ(failures, 0);
}

TEST(Bracket, Jacobi) {
  std::mt19937 rng(15);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 * (t % 3) + 3;
    LieElt x = random_sl(rng, n), y = random_sl(rng, n), z = random_sl(rng, n);
    LieElt j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    EXPECT_TRUE(j.is_zero());
  }
}

TEST(SplitPm, Examples) {
  const int n = 3;
  auto t = split_pm(E(n, 1, 3));
  EXPECT_TRUE(t.plus.is_zero());
  EXPECT_EQ(t.minus, E(n, 1, 3));
  auto s = split_pm(E(n, 1, 2));
  EXPECT_EQ(s.plus, rat(1, 2) * (E(n, 1, 2) + E(n, 2, 3)));
  EXPECT_EQ(s.minus, rat(1, 2) * (E(n, 1, 2) - E(n, 2, 3)));
  LieElt h = H(n, 1) + H(n, 2);
  EXPECT_EQ(split_pm(h).plus, h);
  EXPECT_TRUE(split_pm(h).minus.is_zero());
}

TEST(SplitPm, Reconstructs) {
  std::mt19937 rng(16);
  for (int t = 0; t < 50; ++t) {
    LieElt a = random_sl(rng, 7);
    auto p = split_pm(a);
    EXPECT_EQ(p.plus + p.minus, a);
    EXPECT_TRUE(in_g0(p.plus));
    EXPECT_TRUE(in_g1(p.minus));
  }
}

TEST(BType, GeneratorExamples) {
  auto g2 = b_type_generators(2);
  EXPECT_EQ(g2.h[0], H(5, 1) + H(5, 4));
  EXPECT_EQ(g2.hbar, Scalar(2) * (H(5, 2) + H(5, 3)));
  auto g1 = b_type_generators(1);
  EXPECT_EQ(g1.hbar, Scalar(2) * (H(3, 1) + H(3, 2)));
}

TEST(BType, GeneratorsLieInG0) {
  for (int l = 1; l <= 3; ++l) {
    auto g = b_type_generators(l);
    for (int i = 0; i < l; ++i) {
      EXPECT_TRUE(in_g0(g.e[i]));
      EXPECT_TRUE(in_g0(g.f[i]));
      EXPECT_TRUE(in_g0(g.h[i]));
    }
  }
}

TEST(BType, NormalizedTriple) {
  for (int l = 1; l <= 3; ++l) {
    auto g = b_type_generators(l);
    EXPECT_EQ(bracket(g.ebar, g.fbar), to_quad(g.hbar));
    EXPECT_EQ(g.ebar, QuadScalar::sqrt2() * to_quad(g.e.back()));
  }
}

TEST(BType, CartanMatrixFromGenerators) {
  for (int l = 1; l <= 4; ++l) {
    auto got = b_cartan_from_generators(l);
    auto want = b_cartan_matrix(l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) EXPECT_EQ(got[i][j], want[i][j]) << "l=" << l << " i=" << i << " j=" << j;
  }
  EXPECT_EQ(b_cartan_matrix(1), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(b_cartan_matrix(3), (std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
}

TEST(G1, ZeroWeightDimension) {
  for (int l = 1; l <= 3; ++l) EXPECT_EQ(g1_zero_weight_dim(l), l);
}

TEST(TwistedSl, Dimensions) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    const int n = 2 * l + 1;
    EXPECT_EQ(alg.g0_dim(), l * (2 * l + 1));
    EXPECT_EQ(alg.g0_dim() + alg.g1()->dim(), n * n - 1);
    EXPECT_EQ(alg.eigen()->dim(), n * n - 1);
    EXPECT_EQ(alg.level(), Scalar(-l) - rat(1, 2));
  }
  EXPECT_EQ(g0_basis(1)->dim(), 3);
  EXPECT_EQ(g0_basis(2)->dim(), 10);
}

TEST(TwistedSl, BasisLayout) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    const int n = alg.matrix_size();
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(alg.e_plus(i, n + 1 - i).is_zero());
    const int np = alg.pos_begin() - alg.cartan_begin();
    EXPECT_EQ(np, l);
    EXPECT_EQ(alg.g0_dim() - alg.pos_begin(), alg.cartan_begin());
    for (int p = 0; p < alg.cartan_begin(); ++p) {
      const auto& [i, j] = alg.positive_pairs()[p];
      EXPECT_LT(i, j);
      EXPECT_NE(i + j, n + 1);
      EXPECT_EQ(alg.g0()->element(alg.pos_begin() + p), alg.e_plus(i, j));
      EXPECT_EQ(alg.g0()->element(p), alg.e_plus(j, i));
      for (int v = 0; v < l; ++v) EXPECT_EQ(alg.g0_weight(p)[v], -alg.g0_weight(alg.pos_begin() + p)[v]);
    }
    for (int a = 0; a < alg.g0_dim(); ++a) EXPECT_TRUE(in_g0(alg.g0()->element(a)));
    for (int a = 0; a < alg.g1()->dim(); ++a) EXPECT_TRUE(in_g1(alg.g1()->element(a)));
  }
}

TEST(LieBasis, CoordsRoundTrip) {
  TwistedSl alg(2);
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    LieElt a = random_sl(rng, 5);
    EXPECT_EQ(alg.eigen()->combine(alg.eigen()->coords(a)), a);
    EXPECT_EQ(alg.standard()->combine(alg.standard()->coords(a)), a);
  }
  EXPECT_FALSE(alg.g0()->try_coords(E(5, 1, 5)));
  EXPECT_THROW(alg.g0()->coords(E(5, 1, 5)), Error);
}

TEST(LieBasis, BracketTableMatchesMatrices) {
  TwistedSl alg(2);
  const auto& b = *alg.g0();
  for (int x = 0; x < b.dim(); ++x)
    for (int y = 0; y < b.dim(); ++y) {
      EXPECT_EQ(b.combine(b.bracket_coords(x, y)), bracket(b.element(x), b.element(y)));
      EXPECT_EQ(b.form(x, y), invariant_form(b.element(x), b.element(y)));
    }
  EXPECT_THROW(alg.g1()->bracket_coords(0, 0), Error);
}

TEST(TwistedSl, RejectsRankZero) {
  EXPECT_THROW(TwistedSl(0), Error);
  EXPECT_THROW(b_type_generators(0), Error);
}
