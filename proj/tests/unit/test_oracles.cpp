#include <gtest/gtest.h>

#include <cmath>

#include "foldtrack/automorphism.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace foldtrack;

TEST(Oracle, StallingsFolding) {
  EXPECT_EQ(oracle::stallings({{1}, {2}}).rank(), 2);
  EXPECT_EQ(oracle::stallings({{1, 1}, {2}}).vertex_count, 2);
  EXPECT_EQ(oracle::stallings({{1, 2}, {1}}).vertex_count, 1);
  // a and a b a^-1 span all of F_2.
  EXPECT_TRUE(oracle::generates({{1}, {1, 2, -1}}, 2));
  EXPECT_FALSE(oracle::generates({{1, 1}, {2}}, 2));
  EXPECT_FALSE(oracle::generates({{1, 2}, {2, 1}}, 2));
  EXPECT_TRUE(oracle::generates({{1, 2}, {1}}, 2));
}

TEST(Oracle, NielsenImagesGenerate) {
  CounterRng rng(111, 0);
  for (int t = 0; t < 200; ++t) {
    auto phi = gen::automorphism(rng);
    EXPECT_TRUE(oracle::generates(phi.images(), phi.rank()));
  }
}

TEST(Oracle, BruteConjugator) {
  EXPECT_EQ(oracle::brute_conjugator({{1}, {2}}), Word{});
  EXPECT_EQ(oracle::brute_conjugator({{2, 1, -2}, {2}}), (Word{2}));
  EXPECT_FALSE(oracle::brute_conjugator({{1, 2}, {1}}).has_value());
}

TEST(Oracle, PfBisection) {
  EXPECT_NEAR(oracle::pf_bisection(IntMatrix{{1, 1}, {1, 0}}), (1 + std::sqrt(5.0)) / 2, 1e-10);
  EXPECT_NEAR(oracle::pf_bisection(IntMatrix{{0, 2}, {2, 0}}), 2.0, 1e-10);
  EXPECT_NEAR(oracle::pf_bisection(IntMatrix{{3}}), 3.0, 1e-10);
  // x^3 - x - 1.
  EXPECT_NEAR(oracle::pf_bisection(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}), 1.3247179572447460, 1e-10);
}

TEST(Oracle, RestrictionAndGates) {
  auto g = make_rose(2);
  GraphMap inv(g, g, {0}, {{{0, false}}, {{1, false}, {0, false}}});
  EXPECT_TRUE(oracle::restriction_is_he(inv, {true, false}));
  EXPECT_EQ(oracle::gates_in(inv, {true, false}, 0), 2);
  GraphMap fib(g, g, {0}, {{{0, false}, {1, false}}, {{0, false}}});
  EXPECT_FALSE(oracle::restriction_is_he(fib, {true, false}));
  EXPECT_TRUE(oracle::restriction_is_he(fib, {false, true}));
  EXPECT_TRUE(oracle::brute_reducible(inv, 1).reducible);
}
