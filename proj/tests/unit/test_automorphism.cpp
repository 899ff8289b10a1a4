#include <gtest/gtest.h>

#include <cmath>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace foldtrack;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kParaLambda = 1.4655712318767680;
const double kParaMu = 1.3247179572447460;

Automorphism fib() { return parse_automorphism("a->ab, b->a"); }
Automorphism para() { return parse_automorphism("a->ac, b->a, c->b"); }

}  // namespace

TEST(Automorphism, ParseAndFormat) {
  EXPECT_EQ(fib().images(), (std::vector<Word>{{1, 2}, {1}}));
  EXPECT_EQ(format_automorphism(para()), "a->ac, b->a, c->b");
  EXPECT_EQ(parse_automorphism("a -> A b, b->B").images(), (std::vector<Word>{{-1, 2}, {-2}}));
  EXPECT_THROW(parse_automorphism("a->aa, b->b"), CertificationError);
  EXPECT_THROW(parse_automorphism("a->ab b->a"), ParseError);
  EXPECT_THROW(parse_automorphism("a->b^2"), ParseError);
  CounterRng rng(81, 0);
  for (int t = 0; t < 200; ++t) {
    Automorphism phi = gen::automorphism(rng);
    EXPECT_EQ(parse_automorphism(format_automorphism(phi)), phi);
  }
}

TEST(Automorphism, CertifyAgreesWithStallingsOracle) {
  CounterRng rng(82, 0);
  for (int t = 0; t < 300; ++t) {
    int n = rng.uniform_int(2, 3);
    std::vector<Word> imgs;
    for (int i = 0; i < n; ++i) imgs.push_back(reduce(gen::word(rng, n, 4)));
    if (t % 2 == 0) imgs = gen::automorphism(rng, n, n, 6).images();
    bool expected = oracle::generates(imgs, n);
    bool certified = true;
    try {
      certify(Automorphism(imgs));
    } catch (const CertificationError&) {
      certified = false;
    }
    EXPECT_EQ(certified, expected) << format_automorphism(Automorphism(imgs));
  }
}

TEST(Automorphism, ComposeAndPower) {
  Automorphism f = fib();
  EXPECT_EQ(power(f, 0), Automorphism::identity(2));
  EXPECT_EQ(compose(f, f).images(), (std::vector<Word>{{1, 2, 1}, {1, 2}}));
  EXPECT_EQ(power(f, 3), compose(f, compose(f, f)));
  EXPECT_EQ(f.apply({2, -1}), (Word{1, -2, -1}));
}

TEST(RoseRepresentative, Examples) {
  EXPECT_EQ(transition_matrix(rose_representative(fib())), (IntMatrix{{1, 1}, {1, 0}}));
  GraphMap id = rose_representative(Automorphism::identity(3));
  EXPECT_EQ(id.edge_images(), GraphMap::identity(make_rose(3)).edge_images());
  EXPECT_EQ(read_automorphism(id), Automorphism::identity(3));
  EXPECT_EQ(format_automorphism(read_automorphism(rose_representative(fib()))), "a->ab, b->a");
  CounterRng rng(83, 0);
  for (int t = 0; t < 100; ++t) {
    int n = rng.uniform_int(2, 4);
    Automorphism p = random_nielsen(n, rng.uniform_int(1, 8), rng);
    Automorphism q = random_nielsen(n, rng.uniform_int(1, 8), rng);
    GraphMap composite = tighten_map(compose(rose_representative(p), rose_representative(q)));
    EXPECT_EQ(tighten_map(rose_representative(compose(p, q))).edge_images(), composite.edge_images());
  }
}

TEST(InnerConjugator, Examples) {
  EXPECT_EQ(inner_conjugator({{1}, {2}}), Word{});
  EXPECT_EQ(inner_conjugator({{1}, {1, 2, -1}}), (Word{1}));
  EXPECT_FALSE(is_inner(fib().images()));
  EXPECT_FALSE(is_inner({{1}, {2, 2}}));
}

TEST(InnerConjugator, MatchesBruteForce) {
  CounterRng rng(84, 0);
  for (int t = 0; t < 300; ++t) {
    int n = rng.uniform_int(2, 3);
    std::vector<Word> imgs;
    if (t % 2 == 0) {
      Word u = reduce(gen::word(rng, n, 4));
      for (int i = 1; i <= n; ++i) imgs.push_back(conjugate({i}, u));
      if (t % 4 == 0) imgs[0] = multiply(imgs[0], {1});
    } else {
      for (int i = 0; i < n; ++i) imgs.push_back(reduce(gen::word(rng, n, 5)));
    }
    auto fast = inner_conjugator(imgs);
    auto slow = oracle::brute_conjugator(imgs, 8);
    EXPECT_EQ(fast.has_value(), slow.has_value());
    if (fast) {
      for (int i = 0; i < n; ++i) EXPECT_EQ(conjugate({i + 1}, *fast), imgs[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(ExactInverse, ComposesToIdentity) {
  EXPECT_EQ(exact_inverse(fib()), parse_automorphism("a->b, b->b^-1 a"));
  CounterRng rng(85, 0);
  for (int t = 0; t < 200; ++t) {
    Automorphism phi = gen::automorphism(rng);
    Automorphism inv = exact_inverse(phi);
    EXPECT_EQ(compose(inv, phi), Automorphism::identity(phi.rank()));
    EXPECT_EQ(compose(phi, inv), Automorphism::identity(phi.rank()));
  }
}

TEST(NormalizeOuter, StableUnderConjugation) {
  CounterRng rng(86, 0);
  for (int t = 0; t < 200; ++t) {
    Automorphism phi = gen::automorphism(rng, 2, 3, 8);
    Word u = reduce(gen::word(rng, phi.rank(), 3));
    std::vector<Word> conj;
    for (const auto& w : phi.images()) conj.push_back(conjugate(w, u));
    Automorphism n1 = normalize_outer(phi);
    EXPECT_EQ(normalize_outer(Automorphism(conj)), n1);
    EXPECT_LE(n1.total_length(), phi.total_length());
    EXPECT_EQ(normalize_outer(n1), n1);
  }
}

TEST(Invert, RandomRoundTrip) {
  CounterRng rng(87, 0);
  for (int t = 0; t < 200; ++t) {
    Automorphism phi = gen::automorphism(rng);
    auto res = invert(phi);
    EXPECT_TRUE(is_inner(compose(res.inverse, phi).images())) << format_automorphism(phi);
    EXPECT_TRUE(res.stats.bound_holds);
  }
}

TEST(TrainTrack, Examples) {
  EXPECT_TRUE(check_train_track(rose_representative(fib())));
  EXPECT_TRUE(check_train_track(rose_representative(para())));
  EXPECT_TRUE(check_train_track(rose_representative(parse_automorphism("a->b, b->c, c->b^-1 a"))));
  EXPECT_FALSE(check_train_track(rose_representative(parse_automorphism("a->ab, b->a^-1"))));
}

TEST(TrainTrack, PositiveAutomorphismsAreTrainTracks) {
  CounterRng rng(88, 0);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 40; ++t) {
    Automorphism phi = gen::automorphism(rng, 2, 3, 8);
    bool positive = true;
    for (const auto& w : phi.images())
      for (int x : w) positive = positive && x > 0;
    if (!positive) continue;
    ++checked;
    GraphMap f = rose_representative(phi);
    EXPECT_TRUE(check_train_track(f));
    IntMatrix m = transition_matrix(f);
    if (!is_irreducible(m)) continue;
    double lambda = pf_value(m);
    if (lambda <= 1.0 + 1e-9) continue;
    EXPECT_NEAR(word_growth_rate(phi), lambda, 0.01 * lambda) << format_automorphism(phi);
  }
}

TEST(WordGrowth, Examples) {
  EXPECT_NEAR(word_growth_rate(Automorphism::identity(2)), 1.0, 1e-9);
  EXPECT_NEAR(word_growth_rate(fib(), {{1}}), kPhi, 1e-3);
  auto para_inv = parse_automorphism("a->b, b->c, c->b^-1 a");
  EXPECT_NEAR(word_growth_rate(para_inv, {{1}, {2}, {3}}), kParaMu, 1e-2);
}

TEST(ExpansionReport, Examples) {
  auto r = expansion_report(fib());
  EXPECT_NEAR(r.lambda, kPhi, 1e-9);
  EXPECT_NEAR(r.mu, kPhi, 1e-9);
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_NEAR(*r.ratio, 1.0, 1e-9);
  auto p = expansion_report(para());
  EXPECT_NEAR(p.lambda, kParaLambda, 1e-9);
  EXPECT_NEAR(p.mu, kParaMu, 1e-9);
  EXPECT_TRUE(p.lambda_certified);
  EXPECT_TRUE(p.mu_certified);
  ASSERT_TRUE(p.ratio.has_value());
  EXPECT_NEAR(*p.ratio, std::log(kParaLambda) / std::log(kParaMu), 1e-9);
  EXPECT_FALSE(expansion_report(parse_automorphism("a->a, b->ba")).ratio.has_value());
}

TEST(ExpansionReport, RatioIsInvariantUnderPowersAndInversion) {
  for (const auto& phi : {fib(), para()}) {
    auto base = expansion_report(phi);
    for (int n = 2; n <= 3; ++n) {
      auto r = expansion_report(power(phi, n));
      ASSERT_TRUE(r.ratio.has_value());
      EXPECT_NEAR(*r.ratio, *base.ratio, 1e-6);
    }
    auto inv = expansion_report(exact_inverse(phi));
    EXPECT_NEAR(*inv.ratio * *base.ratio, 1.0, 1e-6);
  }
}
