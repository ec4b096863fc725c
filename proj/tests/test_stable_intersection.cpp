#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace troplith;
using namespace troplith::testing;

TEST(StableIntersection, IdentityElement) {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 4; ++trial) {
    auto X = random_curve(rng, 2);
    EXPECT_TRUE(cycle_equal(stable_intersect(X, TropicalCycle::whole_space(2)), X));
  }
  auto S = random_hypersurface(rng, 3);
  EXPECT_TRUE(cycle_equal(stable_intersect(TropicalCycle::whole_space(3), S), S));
}

TEST(StableIntersection, TranslatedLinesMeetOnce) {
  auto L = tropical_line({0, 0});
  auto P = stable_intersect(L, L.translate({1, 2}));
  ASSERT_EQ(P.cells().size(), 1u);
  EXPECT_EQ(P.cells()[0].weight, 1);
  EXPECT_EQ(degree_pairing(L, L.translate({1, 2})), 1);
  EXPECT_EQ(degree_pairing(L, L), 1);
  auto self = stable_intersect(L, L);
  ASSERT_EQ(self.cells().size(), 1u);
  EXPECT_EQ(self.cells()[0].cell.vertices()[0], (QVec{0, 0}));
}

TEST(StableIntersection, WeightedPointTimesSpace) {
  CellList cells{{Polyhedron::point({Rational(1, 2), 3}), 5}};
  auto pt = TropicalCycle::from_complex(2, 0, cells);
  EXPECT_EQ(degree_pairing(pt, TropicalCycle::whole_space(2)), 5);
}

TEST(StableIntersection, TransverseLinesIndex) {
  CellList a{{line_cell({0, 0}, {1, 0}), 1}}, b{{line_cell({0, 0}, {1, 2}), 1}};
  auto X = TropicalCycle::from_cells(2, 1, a), Y = TropicalCycle::from_cells(2, 1, b);
  EXPECT_EQ(degree_pairing(X, Y), 2);  // |det((1,0),(1,2))|
  EXPECT_EQ(degree0(displacement_oracle(X, Y)), 2);
}

TEST(StableIntersection, DisplacementNonGeneric) {
  auto L = tropical_line({0, 0});
  EXPECT_THROW(displacement_oracle(L, L, {1, 1}), Error);
  EXPECT_NO_THROW(displacement_oracle(L, L, {1, 2}));
}

TEST(StableIntersection, OracleAgreesOnCurves) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    auto X = random_curve(rng, 2), Y = random_curve(rng, 2);
    auto s = stable_intersect(X, Y);
    EXPECT_TRUE(cycle_equal(s, displacement_oracle(X, Y))) << X << "\n" << Y;
    EXPECT_TRUE(cycle_equal(s, stable_intersect(Y, X)));
  }
}

TEST(StableIntersection, OracleAgreesInR3) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 3; ++trial) {
    auto S = random_hypersurface(rng, 3), T = random_hypersurface(rng, 3);
    auto C = random_curve(rng, 3);
    EXPECT_TRUE(cycle_equal(stable_intersect(S, T), displacement_oracle(S, T)));
    EXPECT_TRUE(cycle_equal(stable_intersect(S, C), displacement_oracle(S, C)));
  }
}

TEST(StableIntersection, AssociativeAndDivisorCompatible) {
  std::mt19937 rng(61);
  auto R3 = TropicalCycle::whole_space(3);
  for (int trial = 0; trial < 2; ++trial) {
    auto A = random_hypersurface(rng, 3), B = random_hypersurface(rng, 3), C = random_hypersurface(rng, 3);
    EXPECT_TRUE(cycle_equal(stable_intersect(stable_intersect(A, B), C), stable_intersect(A, stable_intersect(B, C))));
    auto f = random_polynomial(rng, 3, 3, 1);
    EXPECT_TRUE(cycle_equal(stable_intersect(divisor(f, A), B), divisor(f, stable_intersect(A, B))));
  }
  (void)R3;
}

TEST(NumericalEquivalence, TranslatesAgreeMultiplesDiffer) {
  std::mt19937 rng(67);
  auto X = random_curve(rng, 2);
  auto same = numerical_equiv_sample(X, X.translate({3, -1}), 6);
  EXPECT_TRUE(same.consistent);
  auto L = tropical_line({0, 0});
  auto diff = numerical_equiv_sample(L, L.scaled(2), 4);
  EXPECT_FALSE(diff.consistent);
  ASSERT_TRUE(diff.witness.has_value());
  EXPECT_EQ(degree_pairing(L, *diff.witness), diff.degree_x);
  EXPECT_NE(diff.degree_x, diff.degree_y);
}

TEST(TestCycles, Balanced) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k <= static_cast<int>(n); ++k)
      for (int t = 0; t < 4; ++t) EXPECT_TRUE(is_balanced(test_cycle(n, k, t)));
}
