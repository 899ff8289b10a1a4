#include <gtest/gtest.h>

#include <cmath>

#include "foldtrack/matrix.hpp"
#include "generators.hpp"

using namespace foldtrack;

TEST(Matrix, LcAndTotal) {
  IntMatrix fib{{1, 1}, {1, 0}};
  EXPECT_EQ(lc(fib), 1);
  EXPECT_EQ(l_total(fib), 3);
  EXPECT_EQ(lc(IntMatrix(3, 3)), 0);
  EXPECT_EQ(l_total(IntMatrix::identity(4)), 4);
}

TEST(Matrix, Mlog) {
  EXPECT_DOUBLE_EQ(mlog(0.0), 1.0);
  EXPECT_DOUBLE_EQ(mlog(1.0), 1.0);
  EXPECT_DOUBLE_EQ(mlog(2.0), 1.0);
  EXPECT_NEAR(mlog(std::exp(2.0)), 2.0, 1e-12);
}

TEST(Matrix, ProductAndPower) {
  IntMatrix fib{{1, 1}, {1, 0}};
  EXPECT_EQ(fib.power(0), IntMatrix::identity(2));
  EXPECT_EQ(fib.power(5), (IntMatrix{{8, 5}, {5, 3}}));
  EXPECT_EQ(fib * fib * fib, fib.power(3));
  IntMatrix swap{{0, 2}, {2, 0}};
  EXPECT_EQ(swap.power(2), (IntMatrix{{4, 0}, {0, 4}}));
  IntMatrix r{{1, 2, 3}};
  EXPECT_EQ(r.transpose().rows(), 3);
  EXPECT_EQ((r * r.transpose()), (IntMatrix{{14}}));
}

TEST(Matrix, SelectAndLeq) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(m.select({0, 2}, {1}), (IntMatrix{{2}, {8}}));
  EXPECT_TRUE(IntMatrix(3, 3).leq(m));
  EXPECT_FALSE(m.leq(IntMatrix::identity(3)));
}

TEST(Matrix, DirectionEasyInequalities) {
  CounterRng rng(31, 0);
  for (int t = 0; t < 1000; ++t) {
    int a = rng.uniform_int(1, 8);
    IntMatrix m1 = gen::matrix(rng, a, a, 9);
    IntMatrix m2 = gen::matrix(rng, a, a, 9);
    EXPECT_LE(lc(m1 * m2), a * lc(m1) * lc(m2));
    EXPECT_LE(lc(m1), l_total(m1));
    EXPECT_LE(l_total(m1), static_cast<std::int64_t>(a) * a * lc(m1));
  }
}
