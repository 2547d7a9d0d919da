#include "generators.hpp"

#include <gtest/gtest.h>

using namespace a2l2;
using namespace a2l2::testing;

TEST(ModeAction, VacuumExamples) {
  TwistedSl alg(1);
  const auto& b = alg.standard();
  const Scalar k = alg.level();
  VermaState vac = VermaState::vacuum(b, k);
  EXPECT_TRUE(mode_action(ModeOp{E(3, 1, 2), 0}, vac).is_zero());
  EXPECT_TRUE(mode_action(ModeOp{H(3, 1), 3}, vac).is_zero());
  VermaState one = mode_action(ModeOp{E(3, 1, 2), -1}, vac);
  ASSERT_EQ(one.terms().size(), 1u);
  EXPECT_EQ(one.to_string(), "E[1,2](-1)|0>");
  VermaState s = creation_state(b, k, {{E(3, 1, 3), 1}});
  EXPECT_EQ(mode_action(ModeOp{E(3, 3, 1), 1}, s), rat(-3, 2) * vac);
}

TEST(ModeAction, CommutatorOfCreationModes) {
  TwistedSl alg(1);
  const auto& b = alg.standard();
  VermaState ab = creation_state(b, alg.level(), {{E(3, 1, 2), 1}, {E(3, 2, 3), 2}});
  VermaState ba = creation_state(b, alg.level(), {{E(3, 2, 3), 2}, {E(3, 1, 2), 1}});
  EXPECT_EQ(ab - ba, creation_state(b, alg.level(), {{E(3, 1, 3), 3}}));
}

TEST(ModeAction, AffineJacobi) {
  std::mt19937 rng(31);
  int failures = 0;
  for (int t = 0; t < 50; ++t) {
    TwistedSl alg(1 + t % 2);
    const auto& b = alg.standard();
    const int n = alg.matrix_size();
    VermaState s = random_state(rng, b, alg.level(), 3);
    LieElt x = random_sl(rng, n, 2), y = random_sl(rng, n, 2);
    int m = std::uniform_int_distribution<int>(-2, 2)(rng), p = std::uniform_int_distribution<int>(-2, 2)(rng);
    VermaState lhs = mode_action(ModeOp{x, m}, mode_action(ModeOp{y, p}, s)) -
                     mode_action(ModeOp{y, p}, mode_action(ModeOp{x, m}, s));
    VermaState rhs = mode_action(ModeOp{bracket(x, y), m + p}, s);
    if (m + p == 0) rhs += Scalar(m * invariant_form(x, y) * alg.level()) * s;
    if (!(lhs == rhs)) ++failures;
  }
  EXPECT_EQ(failures, 0);
}

TEST(NuState, Examples) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    const int n = alg.matrix_size();
    VermaState vac = VermaState::vacuum(alg.standard(), alg.level());
    EXPECT_EQ(nu_state(vac), vac);
    VermaState t = creation_state(alg.standard(), alg.level(), {{E(n, 1, n), 1}});
    EXPECT_EQ(nu_state(t), Scalar(-1) * t);
  }
}

TEST(NuState, Equivariance) {
  std::mt19937 rng(32);
  int failures = 0;
  for (int t = 0; t < 50; ++t) {
    TwistedSl alg(1 + t % 3);
    const int n = alg.matrix_size();
    VermaState s = random_state(rng, alg.standard(), alg.level(), 3);
    LieElt x = random_sl(rng, n, 2);
    int m = std::uniform_int_distribution<int>(-2, 2)(rng);
    if (!(nu_state(mode_action(ModeOp{x, m}, s)) == mode_action(ModeOp{nu(x), m}, nu_state(s)))) ++failures;
    if (!(nu_state(nu_state(s)) == s)) ++failures;
  }
  EXPECT_EQ(failures, 0);
}

TEST(SingularVector, RankOneExpansion) {
  TwistedSl alg(1);
  const auto& b = alg.standard();
  const Scalar k = alg.level();
  VermaState want = creation_state(b, k, {{E(3, 1, 3), 1}, {H(3, 1), 1}}, rat(1, 3)) -
                    creation_state(b, k, {{E(3, 1, 3), 1}, {H(3, 2), 1}}, rat(1, 3)) +
                    creation_state(b, k, {{E(3, 1, 2), 1}, {E(3, 2, 3), 1}}) -
                    creation_state(b, k, {{E(3, 1, 3), 2}}, rat(1, 2));
  EXPECT_EQ(perse_vector(alg), want);
}

TEST(SingularVector, WeightAndDepth) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    const int n = alg.matrix_size();
    VermaState v = perse_vector(alg);
    for (const auto& [w, c] : v.terms()) EXPECT_EQ(total_depth(w), 2);
    EXPECT_EQ(v.depth(), 2);
    for (int i = 1; i < n; ++i) {
      auto lambda = zero_mode_eigenvalue(H(n, i), v);
      ASSERT_TRUE(lambda);
      EXPECT_EQ(*lambda, (i == 1 || i == n - 1) ? Scalar(1) : Scalar(0)) << "l=" << l << " i=" << i;
    }
  }
}

TEST(SingularVector, IsSingular) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    VermaState v = perse_vector(alg);
    EXPECT_TRUE(check_singular(v, l));
    EXPECT_TRUE(killed_by_positive_modes(v, 2));
  }
}

TEST(SingularVector, IsNuFixed) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    EXPECT_EQ(nu_state(perse_vector(alg)), perse_vector(alg));
  }
}

TEST(CheckSingular, RejectsNonSingularState) {
  TwistedSl alg(1);
  VermaState s = creation_state(alg.standard(), alg.level(), {{E(3, 1, 2), 1}});
  EXPECT_FALSE(check_singular(s, 1));
  EXPECT_FALSE(killed_by_positive_modes(s, 2));
  EXPECT_THROW(check_singular(s, 2), Error);
}

TEST(SingularVector, WrongLevelIsNotSingular) {
  TwistedSl alg(2);
  VermaState v = perse_vector(alg);
  VermaState moved(v.basis(), Scalar(-2), v.terms());
  EXPECT_FALSE(check_singular(moved, 2));
}

TEST(ZeroModeOrbit, Dimensions) {
  for (int l = 1; l <= 3; ++l) {
    TwistedSl alg(l);
    ZeroModeOrbit orb = zero_mode_orbit(alg, perse_vector(alg));
    EXPECT_EQ(orb.dim(), alg.g1()->dim());
    EXPECT_EQ(static_cast<int>(orb.states(std::vector<Scalar>(l, 0)).size()), l);
  }
  TwistedSl alg1(1);
  EXPECT_EQ(zero_mode_orbit(alg1, perse_vector(alg1)).dim(), 5);
}

TEST(ZeroModeOrbit, StableUnderNu) {
  for (int l = 1; l <= 2; ++l) {
    TwistedSl alg(l);
    ZeroModeOrbit orb = zero_mode_orbit(alg, perse_vector(alg));
    IncrementalBasis<ModeMonomial> span;
    for (const auto& s : orb.states()) span.insert(s.terms());
    for (const auto& s : orb.states()) {
      VermaState image = nu_state(s);
      EXPECT_TRUE(span.contains(image.terms()));
    }
  }
}

TEST(VermaState, DepthCap) {
  TwistedSl alg(1);
  VermaState full = creation_state(alg.standard(), alg.level(), {{E(3, 1, 2), max_state_depth}});
  EXPECT_EQ(full.depth(), max_state_depth);
  EXPECT_THROW(mode_action(ModeOp{E(3, 2, 3), -1}, full), Error);
  EXPECT_THROW(creation_state(alg.standard(), alg.level(), {{E(3, 1, 2), max_state_depth + 1}}), Error);
  EXPECT_NO_THROW(mode_action(ModeOp{E(3, 2, 1), 1}, full));
  EXPECT_THROW(creation_state(alg.standard(), alg.level(), {{E(3, 1, 2), 0}}), Error);
}

TEST(VermaState, ChangeBasisRoundTrip) {
  std::mt19937 rng(33);
  TwistedSl alg(2);
  for (int t = 0; t < 10; ++t) {
    VermaState s = random_state(rng, alg.standard(), alg.level(), 3);
    VermaState e = change_basis(s, alg.eigen());
    EXPECT_EQ(change_basis(e, alg.standard()), s);
  }
}
