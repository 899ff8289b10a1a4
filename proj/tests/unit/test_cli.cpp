#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "foldtrack/automorphism.hpp"
#include "foldtrack_cli/audits.hpp"
#include "foldtrack_cli/commands.hpp"

using namespace foldtrack;
using namespace foldtrack::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  Run r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, Spectrum) {
  auto r = run([](auto& o, auto& e) { return cmd_spectrum("a->ab, b->a", o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("1.618033988"), std::string::npos);
  EXPECT_NE(r.out.find("\"certified\": true"), std::string::npos);
  auto id = run([](auto& o, auto& e) { return cmd_spectrum("a->a, b->b", o, e); });
  EXPECT_EQ(id.code, kOk);
  EXPECT_NE(id.out.find("\"gamma\": []"), std::string::npos);
  auto para = run([](auto& o, auto& e) { return cmd_spectrum("a->ac, b->a, c->b", o, e); });
  EXPECT_NE(para.out.find("1.465571231"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_spectrum("a->aa, b->b", o, e); }).code, kInputError);
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_ratio("a->ab b", 40, o, e); }).code, kInputError);
  auto missing = run([](auto& o, auto& e) { return cmd_invert("/nonexistent.json", o, e); });
  EXPECT_EQ(missing.code, kInputError);
  EXPECT_FALSE(missing.err.empty());
}

TEST(Cli, Invert) {
  auto r = run([](auto& o, auto& e) { return cmd_invert("a->ab, b->a", o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"inverse\": \"a->b, b->b^-1 a\""), std::string::npos);
  auto m = run([](auto& o, auto& e) { return cmd_invert(fixture("parageometric.json"), o, e); });
  EXPECT_EQ(m.code, kOk);
  EXPECT_NE(m.out.find("\"inverse\": \"a->b, b->c, c->b^-1 a\""), std::string::npos);
}

TEST(Cli, Ratio) {
  auto r = run([](auto& o, auto& e) { return cmd_ratio("a->ac, b->a, c->b", 40, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"ratio\": 1.35"), std::string::npos);
  auto none = run([](auto& o, auto& e) { return cmd_ratio("a->a, b->ba", 40, o, e); });
  EXPECT_EQ(none.code, kOk);
  EXPECT_NE(none.out.find("\"ratio\": null"), std::string::npos);
}

TEST(Cli, ExperimentIsDeterministic) {
  ExperimentConfig c;
  c.trials = 12;
  c.length = 6;
  c.k_max = 16;
  auto a = run([&](auto& o, auto& e) { return cmd_experiment(c, o, e); });
  auto b = run([&](auto& o, auto& e) { return cmd_experiment(c, o, e); });
  c.jobs = 4;
  auto p = run([&](auto& o, auto& e) { return cmd_experiment(c, o, e); });
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, p.out);
  EXPECT_EQ(a.out.rfind("trial\taut\tlambda\tmu\tratio\tratio_inverse\tfolds\tcertified\n", 0), 0u);
  EXPECT_NE(a.out.find("# summary\tmax_ratio\t"), std::string::npos);
  c.seed = 2;
  c.jobs = 1;
  EXPECT_NE(run([&](auto& o, auto& e) { return cmd_experiment(c, o, e); }).out, a.out);
}

TEST(Cli, MetricTwistTable) {
  auto r = run([](auto& o, auto& e) { return cmd_metric({}, 2, {10, 1000}, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("10\t2.484906650\t12\t"), std::string::npos);
  auto two = run([](auto& o, auto& e) {
    return cmd_metric({fixture("graph_rose.json"), fixture("graph_fibonacci_rose.json")}, 2, {}, o, e);
  });
  EXPECT_EQ(two.code, kOk);
  EXPECT_NE(two.out.find("\"d_upper\": 1.0986122886"), std::string::npos);
  EXPECT_EQ(run([](auto& o, auto& e) { return cmd_metric({fixture("graph_rose.json")}, 2, {}, o, e); }).code,
            kInputError);
}

TEST(Cli, Audit) {
  std::vector<std::string> files{fixture("graph_rose.json"), fixture("graph_fibonacci_rose.json"),
                                 fixture("graph_theta.json"), fixture("invariant_circle.json")};
  auto r = run([&](auto& o, auto& e) { return cmd_audit(files, 16, 1, o, e); });
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("stratum 1\treducible"), std::string::npos);
  EXPECT_NE(r.out.find("max_asymmetry"), std::string::npos);
  auto small = run([&](auto& o, auto& e) { return cmd_audit({fixture("parageometric.json")}, 2, 1, o, e); });
  EXPECT_NE(small.out.find("stratum 1\tskipped"), std::string::npos);
}

TEST(LowerStrataChain, CaseOneFoldsGiveEqualMatrices) {
  CounterRng rng(121, 0);
  for (int t = 0; t < 20; ++t) {
    GraphMap f = lower_strata_chain(rng);
    LowerStrataCheck c = check_lower_strata_chain(f);
    EXPECT_TRUE(c.all_case1_lower);
    EXPECT_TRUE(c.equal) << c.forward.to_string() << " vs " << c.inverse.to_string();
    EXPECT_GT(c.folds, 0);
  }
}
