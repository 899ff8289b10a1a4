#include <gtest/gtest.h>

#include <cmath>

#include "foldtrack/error.hpp"
#include "foldtrack/spectra.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace foldtrack;

namespace {

OrientedEdge fwd(EdgeId e) { return {e, false}; }

GraphMap rose_map(std::vector<EdgePath> imgs) {
  auto g = make_rose(static_cast<int>(imgs.size()));
  return GraphMap(g, g, {0}, std::move(imgs));
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(BlockStructure, Examples) {
  auto bs = block_structure(IntMatrix{{1, 1}, {0, 1}});
  ASSERT_EQ(bs.blocks.size(), 2u);
  EXPECT_FALSE(bs.blocks[0].zero);
  EXPECT_FALSE(bs.blocks[1].zero);
  // b feeds a, so a is invariant and comes first.
  EXPECT_EQ(bs.blocks[0].indices, (std::vector<int>{0}));
  EXPECT_EQ(block_structure(IntMatrix{{1, 1}, {1, 1}}).blocks.size(), 1u);
  auto z = block_structure(IntMatrix(1, 1));
  ASSERT_EQ(z.blocks.size(), 1u);
  EXPECT_TRUE(z.blocks[0].zero);
}

TEST(BlockStructure, BlocksAreIrreducibleAndOrdered) {
  CounterRng rng(41, 0);
  for (int t = 0; t < 300; ++t) {
    int n = rng.uniform_int(1, 7);
    IntMatrix m = gen::matrix(rng, n, n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.uniform_int(0, 2) != 0) m(i, j) = 0;
    auto bs = block_structure(m);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    int covered = 0;
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
      for (int i : bs.blocks[b].indices) pos[static_cast<std::size_t>(i)] = static_cast<int>(b);
      covered += static_cast<int>(bs.blocks[b].indices.size());
      IntMatrix sub = m.select(bs.blocks[b].indices, bs.blocks[b].indices);
      if (bs.blocks[b].zero)
        EXPECT_EQ(sub, IntMatrix(1, 1));
      else
        EXPECT_TRUE(is_irreducible(sub));
    }
    EXPECT_EQ(covered, n);
    // An earlier block never feeds a later one.
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m(j, k) > 0) EXPECT_GE(pos[static_cast<std::size_t>(k)], pos[static_cast<std::size_t>(j)]);
  }
}

TEST(Period, Examples) {
  EXPECT_EQ(period(IntMatrix{{0, 2}, {2, 0}}), 2);
  EXPECT_EQ(period(IntMatrix{{1, 1}, {1, 1}}), 1);
  EXPECT_EQ(period(IntMatrix{{1, 1}, {1, 0}}), 1);
  EXPECT_EQ(period(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 3);
  EXPECT_THROW(period(IntMatrix{{1, 1}, {0, 1}}), ArgumentError);
}

TEST(PfValue, Examples) {
  EXPECT_NEAR(pf_value(IntMatrix{{1, 1}, {1, 0}}), kPhi, 1e-12);
  EXPECT_NEAR(pf_value(IntMatrix{{0, 1}, {1, 0}}), 1.0, 1e-12);
  IntMatrix para{{1, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  EXPECT_NEAR(pf_value(para), 1.4655712318767680, 1e-10);
  EXPECT_NEAR(pf_value(para), oracle::pf_bisection(para), 1e-9);
  EXPECT_THROW(pf_value(IntMatrix{{1, 1}, {0, 1}}), ArgumentError);
}

TEST(PfValue, MatchesBisectionOracleAndLargestBounds) {
  CounterRng rng(42, 0);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform_int(1, 6);
    IntMatrix m = gen::matrix(rng, n, n, 3);
    for (int i = 0; i < n; ++i) m(i, (i + 1) % n) = std::max<std::int64_t>(m(i, (i + 1) % n), 1);
    ASSERT_TRUE(is_irreducible(m));
    double lambda = pf_value(m);
    EXPECT_NEAR(lambda, oracle::pf_bisection(m), 1e-7 * lambda) << m.to_string();
    EXPECT_LE(lambda, n * static_cast<double>(lc(m)) * (1 + 1e-12));
    EXPECT_GE(std::pow(lambda, n), static_cast<double>(lc(m)) * (1 - 1e-9));
  }
}

TEST(CharacteristicPolynomial, Fibonacci) {
  auto p = characteristic_polynomial(IntMatrix{{1, 1}, {1, 0}});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_NEAR(static_cast<double>(p[0]), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(p[1]), -1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(p[2]), -1.0, 1e-12);
  EXPECT_NEAR(pf_by_bisection(IntMatrix{{1, 1}, {1, 0}}), kPhi, 1e-12);
}

TEST(Gamma, Examples) {
  GraphMap fib = rose_map({{fwd(0), fwd(1)}, {fwd(0)}});
  ASSERT_EQ(gamma(fib).size(), 1u);
  EXPECT_NEAR(gamma(fib)[0], kPhi, 1e-12);
  EXPECT_EQ(gamma_hat(fib).size(), 1u);
  EXPECT_TRUE(gamma(rose_map({{fwd(0)}, {fwd(1), fwd(0)}})).empty());
  EXPECT_TRUE(gamma_hat(GraphMap::identity(make_rose(3))).empty());
}

TEST(Gamma, PeriodTwoStratum) {
  GraphMap f = rose_map({{fwd(1), fwd(1)}, {fwd(0), fwd(0)}});
  auto spec = expansion_spectrum(f);
  ASSERT_EQ(spec.entries.size(), 1u);
  EXPECT_EQ(spec.entries[0].multiplicity, 2);
  EXPECT_NEAR(spec.gamma()[0], 2.0, 1e-12);
  auto hat = spec.gamma_hat();
  ASSERT_EQ(hat.size(), 2u);
  EXPECT_NEAR(hat[0], 2.0, 1e-12);
  EXPECT_NEAR(hat[1], 2.0, 1e-12);
  auto by_power = gamma_hat_by_power(f);
  ASSERT_EQ(by_power.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(by_power[i], hat[i], 1e-9);
}

TEST(Gamma, HatByPeriodsMatchesHatByPowers) {
  CounterRng rng(43, 0);
  for (int t = 0; t < 100; ++t) {
    GraphMap f = rose_representative(gen::automorphism(rng, 2, 4, 8));
    auto a = gamma_hat(f);
    auto b = gamma_hat_by_power(f);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
    auto g = gamma(f);
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_GT(g[i], 1.0);
      if (i > 0) EXPECT_GE(g[i - 1], g[i]);
    }
  }
}

TEST(InvariantFiltration, RespectedByTheMap) {
  GraphMap f = rose_map({{fwd(0)}, {fwd(1), fwd(0)}});
  Filtration fl = invariant_filtration(f);
  EXPECT_EQ(fl.length(), 2);
  EXPECT_EQ(fl.level(0), 1);
  EXPECT_EQ(fl.level(1), 2);
}

TEST(PowerLiteral, MatrixIsPower) {
  GraphMap fib = rose_map({{fwd(0), fwd(1)}, {fwd(0)}});
  EXPECT_EQ(transition_matrix(power_literal(fib, 4)), transition_matrix(fib).power(4));
}
